/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/contiguous.hpp"

#include <array>

#include "darboux/error.hpp"

namespace darboux {

namespace {

using RF = QRatFunc;
using Mat = std::array<std::array<RF, 2>, 2>;

RF cst(const Rational &c) { return RF(QPoly(c, Var::Z)); }
RF zvar() { return RF(QPoly::variable(Var::Z)); }

std::string at(const char *step, const Rational &a, const Rational &b, const Rational &c) {
  return std::string(step) + " at (A,B,C) = (" + a.str() + ", " + b.str() + ", " + c.str() + ")";
}

Mat mul(const Mat &x, const Mat &y) {
  Mat r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return r;
}

Mat inverse(const Mat &m, const std::string &step) {
  RF det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det.is_zero()) throw DegeneratePathError(step);
  RF inv = det.inverse();
  return {{{m[1][1] * inv, -(m[0][1] * inv)}, {-(m[1][0] * inv), m[0][0] * inv}}};
}

// (a+1)(1-z) F(a+2) = (c-a-1) F + (2a+2-c-(a+1)z+bz) F(a+1); returns the two coefficients
// of (a+1) F(a+2), which avoid dividing by a+1.
std::array<RF, 2> scaled_a_up(const Rational &a, const Rational &b, const Rational &c) {
  RF z = zvar();
  RF inv = (cst(1) - z).inverse();
  RF alpha = cst(c - a - Rational(1)) * inv;
  RF beta = (cst(Rational(2) * a + Rational(2) - c) - cst(a + Rational(1)) * z + cst(b) * z) * inv;
  return {alpha, beta};
}

// v(P) = (F(P), F(P + e_a)); each matrix maps v(P) to v(P + step).
Mat step_a_up(const Rational &a, const Rational &b, const Rational &c) {
  if ((a + Rational(1)).is_zero()) throw DegeneratePathError(at("a-up", a, b, c));
  auto [al, be] = scaled_a_up(a, b, c);
  RF s = cst((a + Rational(1)).inverse());
  return {{{cst(0), cst(1)}, {al * s, be * s}}};
}

Mat step_b_up(const Rational &a, const Rational &b, const Rational &c) {
  if (b.is_zero()) throw DegeneratePathError(at("b-up", a, b, c));
  auto [al, be] = scaled_a_up(a, b, c);
  RF s = cst(b.inverse());
  return {{{cst(b - a) * s, cst(a) * s}, {al * s, (cst(b - a - Rational(1)) + be) * s}}};
}

Mat step_c_down(const Rational &a, const Rational &b, const Rational &c) {
  if ((c - Rational(1)).is_zero()) throw DegeneratePathError(at("c-down", a, b, c));
  auto [al, be] = scaled_a_up(a, b, c);
  RF s = cst((c - Rational(1)).inverse());
  return {{{cst(c - a - Rational(1)) * s, cst(a) * s}, {al * s, (cst(c - a - Rational(2)) + be) * s}}};
}

Mat identity() { return {{{cst(1), cst(0)}, {cst(0), cst(1)}}}; }

}  // namespace

BasisExpression relation_b_up(const HpgParams &p) {
  Mat m = step_b_up(p.A, p.B, p.C);
  return {m[0][0], m[0][1]};
}

BasisExpression relation_c_down(const HpgParams &p) {
  Mat m = step_c_down(p.A, p.B, p.C);
  return {m[0][0], m[0][1]};
}

BasisExpression relation_a_down(const HpgParams &p) {
  // a(1-z) F(a+1) = (2a-c-az+bz) F + (c-a) F(a-1)
  if ((p.C - p.A).is_zero()) throw DegeneratePathError(at("a-down", p.A, p.B, p.C));
  RF z = zvar();
  RF s = cst((p.C - p.A).inverse());
  RF pf = -(cst(Rational(2) * p.A - p.C) - cst(p.A) * z + cst(p.B) * z) * s;
  RF qf = cst(p.A) * (cst(1) - z) * s;
  return {pf, qf};
}

BasisExpression express_in_basis(const HpgParams &p, const ShiftVector &s) {
  Rational a = p.A, b = p.B, c = p.C;
  Mat t = identity();
  for (int i = 0; i < s.k; ++i) {
    t = mul(step_a_up(a, b, c), t);
    a += Rational(1);
  }
  for (int i = 0; i > s.k; --i) {
    BasisExpression down = relation_a_down({a, b, c});
    t = mul(Mat{{{down.p, down.q}, {cst(1), cst(0)}}}, t);
    a -= Rational(1);
  }
  for (int i = 0; i < s.l; ++i) {
    t = mul(step_b_up(a, b, c), t);
    b += Rational(1);
  }
  for (int i = 0; i > s.l; --i) {
    Rational b1 = b - Rational(1);
    t = mul(inverse(step_b_up(a, b1, c), at("b-down", a, b, c)), t);
    b = b1;
  }
  for (int i = 0; i > s.m; --i) {
    t = mul(step_c_down(a, b, c), t);
    c -= Rational(1);
  }
  for (int i = 0; i < s.m; ++i) {
    Rational c1 = c + Rational(1);
    t = mul(inverse(step_c_down(a, b, c1), at("c-up", a, b, c)), t);
    c = c1;
  }
  HpgParams target{a, b, c};
  target.validate();
  return {t[0][0], t[0][1]};
}

BasisExpression express_in_basis_symmetric(const HpgParams &p, const ShiftVector &s) {
  try {
    return express_in_basis(p, s);
  } catch (const DegeneratePathError &first) {
    // F(B,A;C) = F: basis {F, F(A,B+1)} converts back through the b-up relation.
    if (p.B.is_zero()) throw;
    BasisExpression swapped;
    try {
      swapped = express_in_basis({p.B, p.A, p.C}, {s.l, s.k, s.m});
    } catch (const DegeneratePathError &) {
      throw first;
    }
    BasisExpression up = relation_b_up(p);
    return {swapped.p + swapped.q * up.p, swapped.q * up.q};
  }
}

BasisExpression derivative_as_contiguous(const HpgParams &p) {
  if (p.C.is_zero()) throw ParameterError("C = 0");
  if ((p.A * p.B).is_zero()) return {cst(0), cst(0)};
  // z F' = A (F(A+1) - F), equal to (AB/C) F(A+1,B+1;C+1) routed through the basis.
  RF s = cst(p.A) * zvar().inverse();
  return {-s, s};
}

QSeries ratfunc_series(const QRatFunc &f, int prec) {
  if (f.is_zero()) return QSeries({}, 0, prec);
  const int w = poly_valuation(f.den(), QPoly::variable(f.den().var()));
  QSeries n = QSeries::from_poly(f.num(), 1, prec + w);
  QSeries d = QSeries::from_poly(f.den(), 1, prec + 2 * w);
  return (n * d.inverse()).truncated(prec);
}

QSeries basis_series(const BasisExpression &e, const HpgParams &p, int order) {
  // Laurent parts of p and q may cancel; expand with a margin.
  int margin = 0;
  for (const RF *f : {&e.p, &e.q}) {
    if (!f->is_zero()) margin = std::max(margin, poly_valuation(f->den(), QPoly::variable(Var::Z)));
  }
  const int prec = order + 1 + margin;
  QSeries f0 = gauss_series(p, prec);
  QSeries f1 = gauss_series({p.A + Rational(1), p.B, p.C}, prec);
  QSeries s = ratfunc_series(e.p, prec) * f0 + ratfunc_series(e.q, prec) * f1;
  return s.truncated(order + 1);
}

}  // namespace darboux
