/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "darboux/rational.hpp"

namespace darboux {

/// Element a + b*sqrt(d) of Q(sqrt(d)), d square-free and not 1.
/// d == 0 marks a plain rational that may mix with any field.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational &a) : a_(a) {}  // NOLINT
  QuadraticNumber(long a) : a_(a) {}  // NOLINT
  QuadraticNumber(const Rational &a, const Rational &b, const mpz_class &d);

  const Rational &a() const { return a_; }
  const Rational &b() const { return b_; }
  const mpz_class &d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  QuadraticNumber conj() const { return QuadraticNumber(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  Rational trace() const { return a_ + a_; }
  QuadraticNumber inverse() const;
  QuadraticNumber pow(long e) const;
  std::optional<QuadraticNumber> root(unsigned long n) const;

  std::string str() const;
  double to_double() const;

  QuadraticNumber &operator+=(const QuadraticNumber &o);
  QuadraticNumber &operator-=(const QuadraticNumber &o);
  QuadraticNumber &operator*=(const QuadraticNumber &o);
  QuadraticNumber &operator/=(const QuadraticNumber &o) { return *this *= o.inverse(); }
  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber &b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber &b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber &b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber &b) { return a /= b; }
  QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, d_); }

  friend bool operator==(const QuadraticNumber &x, const QuadraticNumber &y);
  friend std::ostream &operator<<(std::ostream &os, const QuadraticNumber &q) { return os << q.str(); }

  static QuadraticNumber zero_like(const QuadraticNumber &x) { return QuadraticNumber(0, 0, x.d_); }
  static QuadraticNumber one_like(const QuadraticNumber &x) { return QuadraticNumber(1, 0, x.d_); }
  static QuadraticNumber from_rational(const Rational &r, const QuadraticNumber &x) {
    return QuadraticNumber(r, 0, x.d_);
  }
  /// sqrt(d) as an element.
  static QuadraticNumber sqrt_of(const mpz_class &d) { return QuadraticNumber(0, 1, d); }

 private:
  static mpz_class join(const mpz_class &d1, const mpz_class &d2);

  Rational a_;
  Rational b_;
  mpz_class d_{0};
};

/// Square-free part s of an integer n (n = s * m^2), with sign kept.
mpz_class squarefree_part(const mpz_class &n);

}  // namespace darboux
