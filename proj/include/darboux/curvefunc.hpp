/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "darboux/elliptic.hpp"
#include "darboux/parse.hpp"
#include "darboux/ratfunc.hpp"
#include "darboux/series.hpp"

namespace darboux {

/// f1(x) + xi*f2(x) on xi^2 = G(x); without a curve, an element of Q(x) (f2 = 0).
class CurveFunction {
 public:
  CurveFunction() = default;
  explicit CurveFunction(const WeierstrassCurve *e, QRatFunc f1 = QRatFunc(), QRatFunc f2 = QRatFunc());

  static CurveFunction constant(const WeierstrassCurve *e, const Rational &c);
  static CurveFunction x(const WeierstrassCurve *e);
  static CurveFunction xi(const WeierstrassCurve &e);
  static CurveFunction from_bipoly(const WeierstrassCurve *e, const BiPoly &p);
  /// Parses a polynomial or quotient in x and xi.
  static CurveFunction parse(const WeierstrassCurve *e, std::string_view s);

  const WeierstrassCurve *curve() const { return e_; }
  bool is_rational_field() const { return e_ == nullptr; }
  const QRatFunc &f1() const { return f1_; }
  const QRatFunc &f2() const { return f2_; }
  bool is_zero() const { return f1_.is_zero() && f2_.is_zero(); }
  bool is_constant() const;

  CurveFunction conj() const;
  /// f * conj(f) = f1^2 - G f2^2.
  QRatFunc norm() const;
  CurveFunction inverse() const;
  CurveFunction pow(long k) const;
  /// d/dx with xi' = G'(x)/(2 xi).
  CurveFunction derivative() const;
  /// Substitutes x and xi.
  template <class K>
  K evaluate(const K &x, const K &xi) const {
    auto ev = [&](const QRatFunc &f) {
      K d = f.den().template eval<K>(x);
      if (d.is_zero()) throw DivisionByZero("pole of " + f.str());
      return f.num().template eval<K>(x) / d;
    };
    K out = ev(f1_);
    if (!f2_.is_zero()) out = out + xi * ev(f2_);
    return out;
  }

  friend CurveFunction operator+(const CurveFunction &a, const CurveFunction &b);
  friend CurveFunction operator-(const CurveFunction &a, const CurveFunction &b);
  friend CurveFunction operator*(const CurveFunction &a, const CurveFunction &b);
  friend CurveFunction operator/(const CurveFunction &a, const CurveFunction &b) { return a * b.inverse(); }
  CurveFunction operator-() const;
  friend bool operator==(const CurveFunction &a, const CurveFunction &b) {
    return a.e_ == b.e_ && a.f1_ == b.f1_ && a.f2_ == b.f2_;
  }

  std::string str() const;
  friend std::ostream &operator<<(std::ostream &os, const CurveFunction &f) { return os << f.str(); }

 private:
  const WeierstrassCurve *e_ = nullptr;
  QRatFunc f1_, f2_;
};

/// constant * prod f_i^(e_i), kept as a formal product.
struct RadicalFunction {
  Rational constant{1};
  std::vector<std::pair<CurveFunction, Rational>> factors;

  RadicalFunction &times(const CurveFunction &f, const Rational &e) {
    factors.emplace_back(f, e);
    return *this;
  }
};

/// ord_P(f) for nonzero f on a Weierstrass curve.
int valuation_at(const CurveFunction &f, const ClosedPoint &p);

/// Divisor on the curve, or on P^1 for a rational function of x.
QDivisor principal_divisor(const CurveFunction &f);

/// Value of f in the residue field Q[x]/p(x) of a split or ramified place; none at a pole.
std::optional<QPoly> residue_at(const CurveFunction &f, const ClosedPoint &p);

QDivisor radical_divisor(const RadicalFunction &r);

enum class Branch { Positive, Negative };

/// Expansion at the base point (0,0): in t = x^(1/2) on a curve (series ramification 2),
/// in t = x otherwise. The result is exact through t^order.
QSeries expand_at_base(const CurveFunction &f, int order, Branch branch = Branch::Positive);
QSeries expand_at_base(const RadicalFunction &r, int order, Branch branch = Branch::Positive);

}  // namespace darboux
