/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/rational.hpp"

#include <cctype>
#include <functional>

#include "darboux/error.hpp"

namespace darboux {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class &n, const mpz_class &d) {
  if (d == 0) throw DivisionByZero("zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational Rational::parse(std::string_view s) {
  std::string_view t = s;
  bool neg = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    neg = t.front() == '-';
    t.remove_prefix(1);
  }
  auto slash = t.find('/');
  std::string_view ns = t.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  if (!all_digits(ns) || !all_digits(ds)) {
    throw ParseError("malformed rational literal '" + std::string(s) + "'");
  }
  mpz_class n(std::string(ns), 10);
  mpz_class d(std::string(ds), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  if (neg) n = -n;
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::optional<Rational> Rational::root(unsigned long n) const {
  if (n == 0) return std::nullopt;
  if (n == 1 || is_zero()) return *this;
  mpz_class num = q_.get_num();
  bool neg = num < 0;
  if (neg) {
    if (n % 2 == 0) return std::nullopt;
    num = -num;
  }
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q_.get_den_mpz_t(), n) == 0) return std::nullopt;
  if (neg) rn = -rn;
  return Rational(rn, rd);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::hash() const {
  std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
  std::size_t h2 = std::hash<std::string>{}(q_.get_den().get_str(16));
  return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational gcd(const Rational &a, const Rational &b) {
  mpz_class n, d;
  mpz_gcd(n.get_mpz_t(), a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
  mpz_lcm(d.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
  if (n == 0) return Rational(0);
  return Rational(n, d);
}

mpz_class lcm_den(const Rational &a, const Rational &b) {
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
  return d;
}

}  // namespace darboux
