/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>

#include "darboux/polynomial.hpp"

namespace darboux {

/// Reduced quotient num/den with den monic.
template <class K>
class RationalFunction {
 public:
  using Poly = Polynomial<K>;

  RationalFunction() : num_(Var::X), den_(K(1)) {}
  RationalFunction(const Poly &n) : num_(n), den_(K(1), n.var()) {}  // NOLINT
  RationalFunction(const K &c, Var v = Var::X) : num_(c, v), den_(K(1), v) {}  // NOLINT
  RationalFunction(const Poly &n, const Poly &d) : num_(n), den_(d) { reduce(); }

  const Poly &num() const { return num_; }
  const Poly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  Var var() const { return num_.degree() >= 1 ? num_.var() : den_.var(); }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    Poly g = poly_gcd(a.den_, b.den_);
    Poly ad = a.den_.exact_div(g), bd = b.den_.exact_div(g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) {
    return a + (-b);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction(K(0), a.var());
    Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
    RationalFunction r;
    r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    r.normalize_lc();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
    return a * b.inverse();
  }
  RationalFunction &operator+=(const RationalFunction &o) { return *this = *this + o; }
  RationalFunction &operator-=(const RationalFunction &o) { return *this = *this - o; }
  RationalFunction &operator*=(const RationalFunction &o) { return *this = *this * o; }

  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
  }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  K operator()(const K &x) const {
    K d = den_(x);
    if (d.is_zero()) throw DivisionByZero("pole of rational function");
    return num_(x) / d;
  }

  /// this(inner) for a rational inner function.
  RationalFunction compose(const RationalFunction &inner) const {
    const int n = std::max(num_.degree(), den_.degree());
    Poly P = homogenize(num_, inner, n), Q = homogenize(den_, inner, n);
    return RationalFunction(P, Q);
  }

  friend bool operator==(const RationalFunction &a, const RationalFunction &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const {
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  static Poly homogenize(const Poly &p, const RationalFunction &in, int n) {
    // sum c_i N^i D^(n-i)
    Poly acc(in.var());
    Poly npow(K(1), in.var());
    std::vector<Poly> dpow(static_cast<std::size_t>(n) + 1, Poly(K(1), in.var()));
    for (int i = 1; i <= n; ++i) dpow[static_cast<std::size_t>(i)] = dpow[static_cast<std::size_t>(i - 1)] * in.den_;
    for (int i = 0; i <= p.degree(); ++i) {
      acc += p.coeff(i) * (npow * dpow[static_cast<std::size_t>(n - i)]);
      npow = npow * in.num_;
    }
    return acc;
  }
  void normalize_lc() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    K l = den_.lc();
    if (!(l == K(1))) {
      K inv = K(1) / l;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }
  void reduce() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(K(1), den_.var());
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    normalize_lc();
  }

  Poly num_;
  Poly den_;
};

using QRatFunc = RationalFunction<Rational>;

}  // namespace darboux
