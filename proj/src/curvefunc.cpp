/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/curvefunc.hpp"

#include <numeric>
#include <set>

#include "darboux/contiguous.hpp"
#include "darboux/factor.hpp"

namespace darboux {

namespace {

QRatFunc rf(const QPoly &p) { return QRatFunc(p.with_var(Var::X)); }
QRatFunc rc(const Rational &c) { return QRatFunc(QPoly(c, Var::X)); }

void same_curve(const CurveFunction &a, const CurveFunction &b) {
  if (a.curve() != b.curve()) throw FieldMismatch("functions on different curves");
}

// f = (a1 + xi a2) / d with polynomial a1, a2, d.
struct Split {
  QPoly a1, a2, d;
};

Split split(const CurveFunction &f) {
  const QPoly &d1 = f.f1().den(), &d2 = f.f2().den();
  QPoly g = poly_gcd(d1, d2);
  QPoly d = d1 * d2.exact_div(g);
  return {f.f1().num() * d.exact_div(d1), f.f2().num() * d.exact_div(d2), d};
}

int poly_val_at(const QPoly &g, const ClosedPoint &p, bool ramified) {
  if (p.is_infinity()) return -2 * g.degree();
  const int v = poly_valuation(g, p.p());
  return ramified ? 2 * v : v;
}

}  // namespace

CurveFunction::CurveFunction(const WeierstrassCurve *e, QRatFunc f1, QRatFunc f2)
    : e_(e), f1_(std::move(f1)), f2_(std::move(f2)) {
  if (!e_ && !f2_.is_zero()) throw FieldMismatch("xi term without a curve");
}

CurveFunction CurveFunction::constant(const WeierstrassCurve *e, const Rational &c) { return CurveFunction(e, rc(c)); }

CurveFunction CurveFunction::x(const WeierstrassCurve *e) { return CurveFunction(e, rf(QPoly::variable(Var::X))); }

CurveFunction CurveFunction::xi(const WeierstrassCurve &e) { return CurveFunction(&e, QRatFunc(), rc(Rational(1))); }

CurveFunction CurveFunction::from_bipoly(const WeierstrassCurve *e, const BiPoly &p) {
  const int top = p.xi_degree();
  if (top > 0 && !e) throw ParseError("xi in a rational-field expression");
  QPoly f1(Var::X), f2(Var::X);
  QPoly gk(Rational(1), Var::X);
  for (int j = 0; j <= top; j += 2) {
    f1 += p.xi_coeff(j).with_var(Var::X) * gk;
    if (j + 1 <= top) f2 += p.xi_coeff(j + 1).with_var(Var::X) * gk;
    if (e) gk = gk * e->G();
  }
  return CurveFunction(e, rf(f1), rf(f2));
}

CurveFunction CurveFunction::parse(const WeierstrassCurve *e, std::string_view s) {
  auto [n, d] = parse_fraction(s);
  return from_bipoly(e, n) / from_bipoly(e, d);
}

bool CurveFunction::is_constant() const {
  return f2_.is_zero() && f1_.num().degree() <= 0 && f1_.den().degree() == 0;
}

CurveFunction CurveFunction::conj() const { return CurveFunction(e_, f1_, -f2_); }

QRatFunc CurveFunction::norm() const {
  if (!e_) return f1_ * f1_;
  return f1_ * f1_ - rf(e_->G()) * f2_ * f2_;
}

CurveFunction CurveFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero function");
  if (f2_.is_zero()) return CurveFunction(e_, f1_.inverse());
  QRatFunc n = norm().inverse();
  return CurveFunction(e_, f1_ * n, -(f2_ * n));
}

CurveFunction CurveFunction::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CurveFunction r = constant(e_, Rational(1)), b = *this;
  for (; k; k >>= 1) {
    if (k & 1) r = r * b;
    if (k > 1) b = b * b;
  }
  return r;
}

CurveFunction CurveFunction::derivative() const {
  if (f2_.is_zero()) return CurveFunction(e_, f1_.derivative());
  const QPoly G = e_->G();
  QRatFunc extra = f2_ * QRatFunc(G.derivative(), Rational(2) * G);
  return CurveFunction(e_, f1_.derivative(), f2_.derivative() + extra);
}

CurveFunction operator+(const CurveFunction &a, const CurveFunction &b) {
  same_curve(a, b);
  return CurveFunction(a.e_, a.f1_ + b.f1_, a.f2_ + b.f2_);
}

CurveFunction operator-(const CurveFunction &a, const CurveFunction &b) {
  same_curve(a, b);
  return CurveFunction(a.e_, a.f1_ - b.f1_, a.f2_ - b.f2_);
}

CurveFunction operator*(const CurveFunction &a, const CurveFunction &b) {
  same_curve(a, b);
  if (!a.e_) return CurveFunction(nullptr, a.f1_ * b.f1_);
  QRatFunc g = rf(a.e_->G());
  return CurveFunction(a.e_, a.f1_ * b.f1_ + g * a.f2_ * b.f2_, a.f1_ * b.f2_ + a.f2_ * b.f1_);
}

CurveFunction CurveFunction::operator-() const { return CurveFunction(e_, -f1_, -f2_); }

std::string CurveFunction::str() const {
  if (f2_.is_zero()) return f1_.str();
  std::string s = f1_.is_zero() ? "" : f1_.str() + " + ";
  return s + "xi*(" + f2_.str() + ")";
}

// Valuations

int valuation_at(const CurveFunction &f, const ClosedPoint &p) {
  if (f.is_zero()) throw ParameterError("valuation of the zero function");
  const WeierstrassCurve *e = f.curve();
  if (!e) throw ParameterError("valuation_at needs a curve function");
  const QPoly G = e->G();
  const bool ramified = !p.is_infinity() && (G % p.p()).is_zero();
  const Split s = split(f);
  const int vd = poly_val_at(s.d, p, ramified);
  int va;
  if (s.a2.is_zero()) {
    va = poly_val_at(s.a1, p, ramified);
  } else if (p.is_infinity()) {
    const int vxi = -3 - 2 * s.a2.degree();
    va = s.a1.is_zero() ? vxi : std::min(-2 * s.a1.degree(), vxi);
  } else if (ramified) {
    const int vxi = 1 + 2 * poly_valuation(s.a2, p.p());
    va = s.a1.is_zero() ? vxi : std::min(2 * poly_valuation(s.a1, p.p()), vxi);
  } else {
    const QPoly N = s.a1 * s.a1 - G * s.a2 * s.a2;
    const int vn = poly_valuation(N, p.p());
    if (p.is_inert()) {
      va = vn / 2;
    } else {
      const int k = vn + 1;
      const QPoly qk = hensel_sqrt(G, p.p(), p.q(), k);
      const QPoly r = (s.a1 + qk * s.a2) % p.p().pow(static_cast<unsigned>(k));
      va = poly_valuation(r, p.p());
    }
  }
  return va - vd;
}

QDivisor principal_divisor(const CurveFunction &f) {
  if (f.is_zero()) throw ParameterError("divisor of the zero function");
  const WeierstrassCurve *e = f.curve();
  QDivisor out;
  if (f.is_constant()) return out;
  if (!e) {
    // P^1: roots of numerator and denominator, the degree balance at infinity
    const QRatFunc &r = f.f1();
    for (const auto &[p, m] : factor(r.num()).factors) out.add(ClosedPoint::component(p, QPoly(Var::X)), Rational(m));
    for (const auto &[p, m] : factor(r.den()).factors) out.add(ClosedPoint::component(p, QPoly(Var::X)), Rational(-m));
    if (r.num().degree() != r.den().degree()) {
      out.add(ClosedPoint::infinity(), Rational(r.den().degree() - r.num().degree()));
    }
    return out;
  }
  const Split s = split(f);
  const QPoly N = s.a1 * s.a1 - e->G() * s.a2 * s.a2;
  std::set<std::vector<Rational>> seen;
  std::vector<QPoly> primes;
  for (const QPoly &g : {N, s.d}) {
    if (g.degree() < 1) continue;
    for (const auto &[p, m] : factor(g).factors) {
      if (seen.insert(p.coeffs()).second) primes.push_back(p);
    }
  }
  for (const QPoly &p : primes) {
    for (const ClosedPoint &c : places_above(*e, p)) out.add(c, Rational(valuation_at(f, c)));
  }
  out.add(ClosedPoint::infinity(), Rational(valuation_at(f, ClosedPoint::infinity())));
  return out;
}

std::optional<QPoly> residue_at(const CurveFunction &f, const ClosedPoint &p) {
  if (p.is_infinity() || p.is_inert()) throw ParameterError("residue needs a split or ramified place");
  auto part = [&](const QRatFunc &g) -> std::optional<QPoly> {
    const QPoly d = g.den() % p.p();
    if (d.is_zero()) return std::nullopt;
    return (g.num() * inverse_mod(d, p.p())) % p.p();
  };
  auto a = part(f.f1());
  if (!a) return std::nullopt;
  if (f.f2().is_zero()) return a;
  auto b = part(f.f2());
  if (!b) return std::nullopt;
  return (*a + p.q() * *b) % p.p();
}

QDivisor radical_divisor(const RadicalFunction &r) {
  QDivisor out;
  for (const auto &[f, e] : r.factors) out += e * principal_divisor(f);
  return out;
}

// Base-point expansion

namespace {

// Series of a rational function of x in the series variable of ramification r (x = s^r),
// exact below s^prec.
QSeries x_series(const QRatFunc &f, int prec, int r) {
  const int px = (prec + r - 1) / r;
  return ratfunc_series(f, px).lifted(r).truncated(prec);
}

QSeries xi_series(const WeierstrassCurve &e, int prec, Branch b) {
  if (!e.c0.is_zero()) throw BasePointError("(0,0) is not on " + e.name);
  // xi = s * sqrt(G/x), s = x^(1/2)
  const QPoly u = e.G().exact_div(QPoly::variable(e.G().var()));
  QSeries us = QSeries::from_poly(u.with_var(Var::X), 2, prec).truncated(prec);
  QSeries root = us.pow(Rational(1, 2));
  QSeries s = QSeries::monomial(Rational(b == Branch::Positive ? 1 : -1), 1, QSeries::kExact, 2);
  return s * root;
}

QSeries expand_with(const CurveFunction &f, int work, Branch b) {
  const int r = f.curve() ? 2 : 1;
  QSeries out = x_series(f.f1(), work, r);
  if (!f.f2().is_zero()) out = out + xi_series(*f.curve(), work, b) * x_series(f.f2(), work, r);
  return out;
}

}  // namespace

QSeries expand_at_base(const CurveFunction &f, int order, Branch branch) {
  const int need = order + 1;
  int margin = 4;
  for (int attempt = 0; attempt < 12; ++attempt, margin *= 2) {
    QSeries s = expand_with(f, need + margin, branch);
    if (s.precision() >= need) return s.truncated(need);
  }
  throw Error("expansion of " + f.str() + " lost all precision");
}

QSeries expand_at_base(const RadicalFunction &rad, int order, Branch branch) {
  const int rb = rad.factors.empty() || !rad.factors.front().first.curve() ? 1 : 2;
  // Leading monomials: valuations and coefficients.
  struct Piece {
    int v;
    Rational lead;
    Rational e;
  };
  std::vector<Piece> pieces;
  Rational total(0);
  for (const auto &[f, e] : rad.factors) {
    if (f.is_zero()) throw DivisionByZero("zero factor in radical function");
    int probe = 8;
    QSeries s = expand_at_base(f, probe, branch);
    while (s.is_zero()) {
      probe *= 2;
      if (probe > 4096) throw Error("factor " + f.str() + " vanishes to high order at the base point");
      s = expand_at_base(f, probe, branch);
    }
    pieces.push_back({s.valuation(), s.leading(), e});
    total += Rational(s.valuation()) * e;
  }
  // Units to relative precision covering t^order after the monomial shift.
  const int rel = order + 1 - static_cast<int>(total.floor().get_si()) + 1;
  QSeries unit = QSeries::constant(Rational(1), QSeries::kExact, rb);
  Rational c = rad.constant;
  for (std::size_t i = 0; i < rad.factors.size(); ++i) {
    const auto &[f, e] = rad.factors[i];
    const Piece &pc = pieces[i];
    QSeries s = expand_at_base(f, std::max(rel + pc.v, 0), branch);
    unit = unit * s.unit_part().pow(e);
    auto root = pc.lead.root(static_cast<unsigned long>(e.den().get_ui()));
    if (!root) {
      throw FieldExtensionNeeded("leading coefficient " + pc.lead.str() + " of " + f.str() + " has no root of order " +
                                 e.den().get_str());
    }
    c *= root->pow(e.num().get_si());
  }
  // x-exponent total/rb as a monomial in a common ramification.
  const Rational ex = total / Rational(rb);
  const int r = std::lcm(rb, static_cast<int>(ex.den().get_si()));
  const int e_s = static_cast<int>((ex * Rational(r)).num().get_si());
  QSeries mono = QSeries::monomial(c, e_s, QSeries::kExact, r);
  QSeries out = mono * unit;
  const int need = (order + 1) * (out.ramification() / rb);
  return out.truncated(need);
}

}  // namespace darboux
