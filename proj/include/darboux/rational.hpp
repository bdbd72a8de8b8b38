/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace darboux {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT
  Rational(int n) : q_(static_cast<long>(n)) {}  // NOLINT
  Rational(const mpz_class &n) : q_(n) {}  // NOLINT
  Rational(const mpz_class &n, const mpz_class &d);
  Rational(long n, long d);
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (decimal digits only).
  static Rational parse(std::string_view s);

  const mpq_class &raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational inverse() const;
  Rational pow(long e) const;
  Rational abs() const { return Rational(::abs(q_)); }
  /// Largest integer <= this.
  mpz_class floor() const;

  /// Exact n-th root if it exists in Q.
  std::optional<Rational> root(unsigned long n) const;

  std::string str() const;
  double to_double() const { return q_.get_d(); }
  std::size_t hash() const;

  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

  // Field interface shared with QuadraticNumber.
  static Rational zero_like(const Rational &) { return Rational(0); }
  static Rational one_like(const Rational &) { return Rational(1); }
  static Rational from_rational(const Rational &r, const Rational &) { return r; }

 private:
  mpq_class q_;
};

Rational gcd(const Rational &a, const Rational &b);
mpz_class lcm_den(const Rational &a, const Rational &b);

}  // namespace darboux

template <>
struct std::hash<darboux::Rational> {
  std::size_t operator()(const darboux::Rational &r) const { return r.hash(); }
};
