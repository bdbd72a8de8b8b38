/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <ostream>
#include <optional>
#include <string>
#include <vector>

#include "darboux/error.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/quadratic.hpp"

namespace darboux {

/// xi^2 = c3 x^3 + c2 x^2 + c1 x + c0.
struct WeierstrassCurve {
  std::string name;
  Rational c3, c2, c1, c0;

  QPoly G() const { return QPoly({c0, c1, c2, c3}); }
  template <class K>
  K rhs(const K &x) const {
    return ((K(c3) * x + K(c2)) * x + K(c1)) * x + K(c0);
  }
  Rational discriminant() const;
};

/// Registry keys "E3".."E6".
const WeierstrassCurve &curve(const std::string &key);
const std::vector<std::string> &curve_keys();

template <class K>
struct CurvePoint {
  bool inf = true;
  K x{}, xi{};

  static CurvePoint infinity() { return {}; }
  static CurvePoint affine(const K &x, const K &xi) { return {false, x, xi}; }
  bool is_infinity() const { return inf; }
  friend bool operator==(const CurvePoint &a, const CurvePoint &b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.xi == b.xi;
  }
  std::string str() const { return inf ? "O" : "(" + x.str() + "," + xi.str() + ")"; }
  friend std::ostream &operator<<(std::ostream &os, const CurvePoint &p) { return os << p.str(); }
};

using QPoint = CurvePoint<Rational>;
using KPoint = CurvePoint<QuadraticNumber>;

template <class K>
bool on_curve(const WeierstrassCurve &e, const CurvePoint<K> &p) {
  return p.inf || p.xi * p.xi == e.rhs(p.x);
}

template <class K>
CurvePoint<K> negate(const CurvePoint<K> &p) {
  if (p.inf) return p;
  return CurvePoint<K>::affine(p.x, -p.xi);
}

template <class K>
CurvePoint<K> add(const WeierstrassCurve &e, const CurvePoint<K> &p, const CurvePoint<K> &q) {
  if (p.inf) return q;
  if (q.inf) return p;
  K lambda;
  if (p.x == q.x) {
    if (!(p.xi == q.xi) || p.xi.is_zero()) return CurvePoint<K>::infinity();
    const K three(3), two(2);
    lambda = (three * K(e.c3) * p.x * p.x + two * K(e.c2) * p.x + K(e.c1)) / (two * p.xi);
  } else {
    lambda = (q.xi - p.xi) / (q.x - p.x);
  }
  const K nu = p.xi - lambda * p.x;
  const K x3 = (lambda * lambda - K(e.c2)) / K(e.c3) - p.x - q.x;
  return CurvePoint<K>::affine(x3, -(lambda * x3 + nu));
}

template <class K>
CurvePoint<K> multiply(const WeierstrassCurve &e, long n, const CurvePoint<K> &p) {
  CurvePoint<K> base = n < 0 ? negate(p) : p;
  CurvePoint<K> acc = CurvePoint<K>::infinity();
  for (unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n); m; m >>= 1) {
    if (m & 1) acc = add(e, acc, base);
    if (m > 1) base = add(e, base, base);
  }
  return acc;
}

/// Least n <= bound with nP = O.
template <class K>
std::optional<int> order_of(const WeierstrassCurve &e, const CurvePoint<K> &p, int bound) {
  CurvePoint<K> acc = p;
  for (int n = 1; n <= bound; ++n) {
    if (acc.inf) return n;
    acc = add(e, acc, p);
  }
  return std::nullopt;
}

/// Listed rational points of the curve, O first.
std::vector<QPoint> listed_points(const std::string &key);

/// A point or a Galois orbit of points on a curve.
/// Places over an irreducible p(x): ramified (p | G, xi = 0), split into the two branches
/// xi = q(x) and xi = -q(x) mod p, or inert (one place of degree 2 deg p).
class ClosedPoint {
 public:
  static ClosedPoint infinity() { return ClosedPoint(); }
  static ClosedPoint rational(const Rational &x, const Rational &xi);
  static ClosedPoint from_point(const QPoint &p);
  /// Orbit {P, conj P} of a point over Q(sqrt d).
  static ClosedPoint conjugate_pair(const KPoint &p);
  static ClosedPoint component(const QPoly &p, const QPoly &q);
  static ClosedPoint inert(const QPoly &p);

  bool is_infinity() const { return inf_; }
  bool is_inert() const { return inert_; }
  bool is_rational() const { return !inf_ && p_.degree() == 1; }
  int degree() const;
  const QPoly &p() const { return p_; }
  const QPoly &q() const { return q_; }
  std::optional<QPoint> as_point() const;
  ClosedPoint negated() const;
  /// q^2 = G mod p and p irreducible.
  bool lies_on(const WeierstrassCurve &e) const;

  std::string str() const;
  friend std::ostream &operator<<(std::ostream &os, const ClosedPoint &p) { return os << p.str(); }
  friend std::strong_ordering operator<=>(const ClosedPoint &a, const ClosedPoint &b);
  friend bool operator==(const ClosedPoint &a, const ClosedPoint &b) { return (a <=> b) == 0; }

 private:
  bool inf_ = true;
  bool inert_ = false;
  QPoly p_{Var::X};
  QPoly q_{Var::X};
};

/// Finite formal sum of closed points with rational coefficients.
class QDivisor {
 public:
  QDivisor() = default;
  QDivisor(const ClosedPoint &p, const Rational &c = Rational(1)) { add(p, c); }  // NOLINT

  void add(const ClosedPoint &p, const Rational &c);
  Rational coefficient(const ClosedPoint &p) const;
  const std::map<ClosedPoint, Rational> &terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational degree() const;
  bool is_integral() const;
  /// Least positive integer m with m*D integral.
  mpz_class clearing_multiple() const;

  QDivisor &operator+=(const QDivisor &o);
  QDivisor &operator-=(const QDivisor &o);
  friend QDivisor operator+(QDivisor a, const QDivisor &b) { return a += b; }
  friend QDivisor operator-(QDivisor a, const QDivisor &b) { return a -= b; }
  friend QDivisor operator*(const Rational &c, const QDivisor &d);
  QDivisor operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const QDivisor &a, const QDivisor &b) { return a.t_ == b.t_; }

  std::string str() const;
  friend std::ostream &operator<<(std::ostream &os, const QDivisor &p) { return os << p.str(); }

 private:
  std::map<ClosedPoint, Rational> t_;
};

/// q with q^2 = g mod p for monic irreducible p, deg q < deg p; 0 when p | g; none if g is not a
/// square in Q[x]/p.
std::optional<QPoly> sqrt_mod(const QPoly &g, const QPoly &p);

/// Lift of q (q^2 = g mod p, p coprime to 2q) to q_k with q_k^2 = g mod p^k.
QPoly hensel_sqrt(const QPoly &g, const QPoly &p, const QPoly &q, int k);

/// Places of the curve above the irreducible x-polynomial p.
std::vector<ClosedPoint> places_above(const WeierstrassCurve &e, const QPoly &p);

/// Group sum of the points of a closed point; throws UnsupportedSupport when the
/// recursion through xi - q(x) meets a tangency.
QPoint component_sum(const WeierstrassCurve &e, const ClosedPoint &p);

/// sum a_P P for integral D with rational support.
QPoint divisor_class_sum(const WeierstrassCurve &e, const QDivisor &d);

enum class Verdict { True, False, Undecided };

struct PrincipalityResult {
  Verdict verdict = Verdict::Undecided;
  mpz_class multiple = 1;          // clearing multiple
  std::optional<int> torsion_order;  // order of the class sum of multiple*D
  std::string explanation;
  explicit operator bool() const { return verdict == Verdict::True; }
};

/// Degree zero and the class sum of the cleared divisor is torsion (order <= bound).
PrincipalityResult is_principal(const WeierstrassCurve &e, const QDivisor &d, int bound = 16);

/// Rational points on E4 in the families O*, A_n, ~A_n, A*_n, ~A*_n.
enum class E4Family { A, ATilde, AStar, ATildeStar };
QPoint e4_point(E4Family f, int n);
/// (N, L) of a named E4 point, none for unnamed points (O has no label).
std::optional<std::pair<int, int>> e4_label(const QPoint &p);
/// sum N(S_j) = 0 and sum L(S_j) even.
bool e4_parity_check(const QDivisor &d);

}  // namespace darboux
