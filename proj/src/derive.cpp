/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/error.hpp"
#include "darboux/evaluations.hpp"
#include "darboux/parse.hpp"

namespace darboux {

namespace {

CurveFunction cst(const WeierstrassCurve *e, const Rational &c) { return CurveFunction::constant(e, c); }

CurveFunction eval_poly(const QPoly &p, const CurveFunction &phi) {
  const WeierstrassCurve *e = phi.curve();
  CurveFunction acc = cst(e, p.lc());
  for (int i = p.degree() - 1; i >= 0; --i) acc = acc * phi + cst(e, p.coeff(i));
  return acc;
}

CurveFunction eval_ratfunc(const QRatFunc &f, const CurveFunction &phi) {
  if (f.is_zero()) return cst(phi.curve(), Rational(0));
  return eval_poly(f.num(), phi) / eval_poly(f.den(), phi);
}

ShiftVector integral_shift(const HpgParams &target, const HpgParams &base) {
  const Rational dk = target.A - base.A, dl = target.B - base.B, dm = target.C - base.C;
  if (!dk.is_integer() || !dl.is_integer() || !dm.is_integer()) {
    throw ParameterError("shift from " + base.str() + " to " + target.str() + " is not integral");
  }
  return {static_cast<int>(dk.num().get_si()), static_cast<int>(dl.num().get_si()),
          static_cast<int>(dm.num().get_si())};
}

}  // namespace

CurveFunction contiguous_ratio(const HpgParams &target, const EvaluationRecord &base) {
  target.validate();
  if (classify_schwartz(exponent_diffs(target)) != base.schwartz_type()) {
    throw ClassificationError(target.str() + " is not of type " + base.type.str());
  }
  const ShiftVector s = integral_shift(target, base.params);
  const Covering &c = covering(base.covering);
  const WeierstrassCurve *e = c.curve;
  if (s == ShiftVector{}) return cst(e, Rational(1));
  if (base.params.A.is_zero()) throw DegeneratePathError("A = 0 in " + base.params.str());

  const BasisExpression b = express_in_basis_symmetric(base.params, s);
  const QRatFunc z(QPoly::variable(Var::Z));
  const QRatFunc P = b.p + b.q;
  const QRatFunc Q = b.q * z * QRatFunc(QPoly(Rational(1) / base.params.A, Var::Z));

  const RadicalFunction R = base.rhs_function();
  CurveFunction log_deriv = cst(e, Rational(0));
  for (const auto &[f, ex] : R.factors) log_deriv = log_deriv + cst(e, ex) * f.derivative() / f;
  const CurveFunction &phi = c.map;
  CurveFunction g = eval_ratfunc(P, phi);
  if (!Q.is_zero()) g = g + eval_ratfunc(Q, phi) * log_deriv / phi.derivative();
  return g;
}

EvaluationRecord derive_contiguous(const HpgParams &target, const EvaluationRecord &base, int check_order) {
  const CurveFunction g = contiguous_ratio(target, base);
  const ShiftVector s = integral_shift(target, base.params);
  if (s == ShiftVector{}) return base;

  // g = (n1/d1 + xi n2/d2) written as one numerator over d = lcm(d1, d2)
  const QPoly d1 = g.f1().is_zero() ? QPoly(Rational(1)) : g.f1().den();
  const QPoly d2 = g.f2().is_zero() ? QPoly(Rational(1)) : g.f2().den();
  QPoly d = (d1 * d2).exact_div(poly_gcd(d1, d2));
  BiPoly num = BiPoly::from_x(g.f1().num() * d.exact_div(d1));
  if (!g.f2().is_zero()) num = num + BiPoly::from_x(g.f2().num() * d.exact_div(d2)) * BiPoly::xi();
  Rational scale = d.coeff(0).is_zero() ? Rational(1) / d.lc() : Rational(1) / d.coeff(0);
  d = d * QPoly(scale);
  num = num * BiPoly(scale);

  EvaluationRecord out = base;
  out.id = base.id + "[" + std::to_string(s.k) + "," + std::to_string(s.l) + "," + std::to_string(s.m) + "]";
  out.params = target;
  out.notes = "contiguous to " + base.id + " by (" + std::to_string(s.k) + "," + std::to_string(s.l) + "," +
              std::to_string(s.m) + ")";
  if (!num.is_constant()) {
    out.rhs.factors.push_back({num.str(), Rational(1)});
  } else {
    out.rhs.constant *= num.terms().begin()->second;
  }
  if (d.degree() > 0) out.rhs.factors.push_back({BiPoly::from_x(d).str(), Rational(-1)});
  check_record(out);
  if (check_order >= 0) {
    VerificationReport rep = verify(out, check_order);
    if (!rep.ok()) {
      throw Error("derived record " + out.id + " fails verification at t^" + std::to_string(*rep.mismatch_index));
    }
  }
  return out;
}

}  // namespace darboux
