/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/quadratic.hpp"

#include <cmath>

#include "darboux/error.hpp"

namespace darboux {

mpz_class squarefree_part(const mpz_class &n) {
  if (n == 0) return 0;
  mpz_class m = abs(n);
  mpz_class out = 1;
  for (unsigned long p = 2; mpz_class(p) * p <= m; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
    if (p > 1000000 && mpz_perfect_square_p(m.get_mpz_t())) {
      m = 1;
      break;
    }
  }
  out *= m;
  return n < 0 ? mpz_class(-out) : out;
}

QuadraticNumber::QuadraticNumber(const Rational &a, const Rational &b, const mpz_class &d)
    : a_(a), b_(b), d_(d) {
  if (d_ == 1) throw FieldMismatch("sqrt(1) is not a quadratic field");
  if (d_ == 0 && !b_.is_zero()) throw FieldMismatch("irrational part without a field");
}

mpz_class QuadraticNumber::join(const mpz_class &d1, const mpz_class &d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw FieldMismatch("mixing Q(sqrt(" + d1.get_str() + ")) and Q(sqrt(" + d2.get_str() + "))");
}

QuadraticNumber &QuadraticNumber::operator+=(const QuadraticNumber &o) {
  d_ = join(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticNumber &QuadraticNumber::operator-=(const QuadraticNumber &o) {
  d_ = join(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticNumber &QuadraticNumber::operator*=(const QuadraticNumber &o) {
  d_ = join(d_, o.d_);
  Rational na = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  return *this;
}

bool operator==(const QuadraticNumber &x, const QuadraticNumber &y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return x.a_ == y.a_;
  return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

QuadraticNumber QuadraticNumber::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw DivisionByZero("inverse of zero in quadratic field");
  return QuadraticNumber(a_ / n, -b_ / n, d_);
}

QuadraticNumber QuadraticNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadraticNumber r = one_like(*this);
  QuadraticNumber base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::optional<QuadraticNumber> QuadraticNumber::root(unsigned long n) const {
  if (n == 1) return *this;
  if (is_rational()) {
    if (auto r = a_.root(n)) return QuadraticNumber(*r, 0, d_);
    if (n == 2 && d_ != 0) {
      // a = d * s^2 gives sqrt(a) = s*sqrt(d).
      if (auto s = (a_ / Rational(d_)).root(2)) return QuadraticNumber(0, *s, d_);
    }
    return std::nullopt;
  }
  if (n != 2) return std::nullopt;
  // (x + y sqrt d)^2 = a + b sqrt d: x^2 = (a +- sqrt(norm)) / 2.
  auto nr = norm().root(2);
  if (!nr) return std::nullopt;
  for (int s : {1, -1}) {
    Rational x2 = (a_ + Rational(s) * *nr) / Rational(2);
    if (auto x = x2.root(2); x && !x->is_zero()) {
      Rational y = b_ / (Rational(2) * *x);
      return QuadraticNumber(*x, y, d_);
    }
  }
  return std::nullopt;
}

std::string QuadraticNumber::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
  return s + b_.str() + "*sqrt(" + d_.get_str() + ")";
}

double QuadraticNumber::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

}  // namespace darboux
