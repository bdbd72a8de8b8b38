/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/elliptic.hpp"

#include <algorithm>

namespace darboux {

namespace {

std::strong_ordering cmp_poly(const QPoly &a, const QPoly &b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i) {
    if (auto c = a.coeff(i) <=> b.coeff(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

QPoly xlin(const Rational &x0) { return QPoly({-x0, Rational(1)}); }

}  // namespace

Rational WeierstrassCurve::discriminant() const {
  const Rational &a = c3, &b = c2, &c = c1, &d = c0;
  return Rational(18) * a * b * c * d - Rational(4) * b * b * b * d + b * b * c * c - Rational(4) * a * c * c * c -
         Rational(27) * a * a * d * d;
}

const WeierstrassCurve &curve(const std::string &key) {
  static const std::map<std::string, WeierstrassCurve> reg = {
      {"E3", {"E3", Rational(-9), Rational(33), Rational(1), Rational(0)}},
      {"E4", {"E4", Rational(-5), Rational(5), Rational(1), Rational(0)}},
      {"E5", {"E5", Rational(16), Rational(17), Rational(1), Rational(0)}},
      {"E6", {"E6", Rational(-1), Rational(1), Rational(1), Rational(0)}},
  };
  auto it = reg.find(key);
  if (it == reg.end()) throw ParameterError("unknown curve \"" + key + "\"");
  return it->second;
}

const std::vector<std::string> &curve_keys() {
  static const std::vector<std::string> k = {"E3", "E4", "E5", "E6"};
  return k;
}

std::vector<QPoint> listed_points(const std::string &key) {
  auto pt = [](long a, long b, long c, long d) { return QPoint::affine(Rational(a, b), Rational(c, d)); };
  if (key == "E3") {
    return {QPoint::infinity(), pt(0, 1, 0, 1), pt(-1, 9, 5, 9), pt(-1, 9, -5, 9), pt(1, 1, -5, 1), pt(1, 1, 5, 1)};
  }
  if (key == "E4") {
    return {QPoint::infinity(), pt(0, 1, 0, 1), e4_point(E4Family::A, 1), e4_point(E4Family::ATilde, 1),
            e4_point(E4Family::AStar, 1), e4_point(E4Family::ATildeStar, 1)};
  }
  if (key == "E5") {
    return {QPoint::infinity(), pt(0, 1, 0, 1), pt(-1, 4, 3, 4),  pt(-1, 4, -3, 4),
            pt(-1, 1, 0, 1),    pt(-1, 16, 0, 1), pt(1, 4, -5, 4), pt(1, 4, 5, 4)};
  }
  if (key == "E6") {
    return {QPoint::infinity(), pt(0, 1, 0, 1), pt(-1, 1, 1, 1), pt(-1, 1, -1, 1), pt(1, 1, -1, 1), pt(1, 1, 1, 1)};
  }
  throw ParameterError("unknown curve \"" + key + "\"");
}

// ClosedPoint

ClosedPoint ClosedPoint::rational(const Rational &x, const Rational &xi) {
  return component(xlin(x), QPoly(xi));
}

ClosedPoint ClosedPoint::from_point(const QPoint &p) {
  return p.inf ? infinity() : rational(p.x, p.xi);
}

ClosedPoint ClosedPoint::conjugate_pair(const KPoint &pt) {
  if (pt.inf) return infinity();
  const QuadraticNumber &x = pt.x, &xi = pt.xi;
  if (x.is_rational()) {
    if (xi.is_rational()) return rational(x.a(), xi.a());
    if (!xi.a().is_zero()) throw ParameterError("point " + pt.str() + " is not on a quadratic fiber");
    return inert(xlin(x.a()));
  }
  const Rational d(x.d());
  QPoly p({x.a() * x.a() - d * x.b() * x.b(), Rational(-2) * x.a(), Rational(1)});
  const Rational slope = xi.b() / x.b();
  return component(p, QPoly({xi.a() - slope * x.a(), slope}));
}

ClosedPoint ClosedPoint::component(const QPoly &p, const QPoly &q) {
  if (p.degree() < 1) throw ParameterError("closed point needs a nonconstant p(x)");
  ClosedPoint c;
  c.inf_ = false;
  c.p_ = p.monic().with_var(Var::X);
  c.q_ = (q.with_var(Var::X) % c.p_).with_var(Var::X);
  return c;
}

ClosedPoint ClosedPoint::inert(const QPoly &p) {
  ClosedPoint c = component(p, QPoly(Var::X));
  c.inert_ = true;
  return c;
}

int ClosedPoint::degree() const {
  if (inf_) return 1;
  return inert_ ? 2 * p_.degree() : p_.degree();
}

std::optional<QPoint> ClosedPoint::as_point() const {
  if (inf_) return QPoint::infinity();
  if (inert_ || p_.degree() != 1) return std::nullopt;
  return QPoint::affine(-p_.coeff(0), q_.coeff(0));
}

ClosedPoint ClosedPoint::negated() const {
  if (inf_ || inert_) return *this;
  return component(p_, -q_);
}

bool ClosedPoint::lies_on(const WeierstrassCurve &e) const {
  if (inf_) return true;
  if (inert_) return !((e.G() % p_).is_zero());
  return ((q_ * q_ - e.G()) % p_).is_zero();
}

std::string ClosedPoint::str() const {
  if (inf_) return "O";
  if (auto pt = as_point()) return pt->str();
  if (inert_) return "{" + p_.str("x") + " = 0, inert}";
  return "{" + p_.str("x") + " = 0, xi = " + q_.str("x") + "}";
}

std::strong_ordering operator<=>(const ClosedPoint &a, const ClosedPoint &b) {
  if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.inf_) return std::strong_ordering::equal;
  if (auto c = cmp_poly(a.p_, b.p_); c != 0) return c;
  if (a.inert_ != b.inert_) return a.inert_ ? std::strong_ordering::greater : std::strong_ordering::less;
  return cmp_poly(a.q_, b.q_);
}

// QDivisor

void QDivisor::add(const ClosedPoint &p, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Rational QDivisor::coefficient(const ClosedPoint &p) const {
  auto it = t_.find(p);
  return it == t_.end() ? Rational(0) : it->second;
}

Rational QDivisor::degree() const {
  Rational d(0);
  for (const auto &[p, c] : t_) d += c * Rational(p.degree());
  return d;
}

bool QDivisor::is_integral() const {
  for (const auto &[p, c] : t_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

mpz_class QDivisor::clearing_multiple() const {
  mpz_class m = 1;
  for (const auto &[p, c] : t_) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.den().get_mpz_t());
  return m;
}

QDivisor &QDivisor::operator+=(const QDivisor &o) {
  for (const auto &[p, c] : o.t_) add(p, c);
  return *this;
}

QDivisor &QDivisor::operator-=(const QDivisor &o) {
  for (const auto &[p, c] : o.t_) add(p, -c);
  return *this;
}

QDivisor operator*(const Rational &c, const QDivisor &d) {
  QDivisor r;
  for (const auto &[p, a] : d.t_) r.add(p, c * a);
  return r;
}

std::string QDivisor::str() const {
  if (t_.empty()) return "0";
  std::string out;
  // affine points first, O last
  std::vector<std::pair<ClosedPoint, Rational>> items(t_.begin(), t_.end());
  std::stable_partition(items.begin(), items.end(), [](const auto &e) { return !e.first.is_infinity(); });
  for (const auto &[p, c] : items) {
    Rational a = c;
    if (out.empty()) {
      if (a.sign() < 0) out += "-";
    } else {
      out += a.sign() < 0 ? " - " : " + ";
    }
    a = a.abs();
    if (!a.is_one()) out += a.str() + "*";
    out += p.str();
  }
  return out;
}

// Group sums and principality

QPoint divisor_class_sum(const WeierstrassCurve &e, const QDivisor &d) {
  QPoint acc = QPoint::infinity();
  for (const auto &[p, c] : d.terms()) {
    if (!c.is_integer()) throw UnsupportedSupport("coefficient " + c.str() + " at " + p.str() + " is not an integer");
    auto pt = p.as_point();
    if (!pt) throw UnsupportedSupport("component " + p.str() + " in support");
    if (!on_curve(e, *pt)) throw ParameterError(pt->str() + " is not on " + e.name);
    acc = add(e, acc, multiply(e, c.num().get_si(), *pt));
  }
  return acc;
}

PrincipalityResult is_principal(const WeierstrassCurve &e, const QDivisor &d, int bound) {
  PrincipalityResult r;
  if (!d.degree().is_zero()) {
    r.verdict = Verdict::False;
    r.explanation = "degree " + d.degree().str() + " is not zero";
    return r;
  }
  r.multiple = d.clearing_multiple();
  QPoint sum = QPoint::infinity();
  try {
    for (const auto &[p, c] : d.terms()) {
      const Rational k = c * Rational(r.multiple);
      sum = add(e, sum, multiply(e, k.num().get_si(), component_sum(e, p)));
    }
  } catch (const UnsupportedSupport &ex) {
    r.verdict = Verdict::Undecided;
    r.explanation = ex.what();
    return r;
  }
  r.torsion_order = order_of(e, sum, bound);
  if (r.torsion_order) {
    r.verdict = Verdict::True;
    r.explanation = "class sum " + sum.str() + " has order " + std::to_string(*r.torsion_order);
  } else {
    r.verdict = Verdict::False;
    r.explanation = "class sum " + sum.str() + " has no order <= " + std::to_string(bound);
  }
  return r;
}

// E4 names

namespace {

constexpr int kE4Range = 24;

const std::vector<std::pair<QPoint, std::pair<int, int>>> &e4_table() {
  static const std::vector<std::pair<QPoint, std::pair<int, int>>> t = [] {
    std::vector<std::pair<QPoint, std::pair<int, int>>> v;
    v.push_back({QPoint::affine(Rational(0), Rational(0)), {0, 1}});
    for (int n = 1; n <= kE4Range; ++n) {
      v.push_back({e4_point(E4Family::A, n), {n, 0}});
      v.push_back({e4_point(E4Family::ATilde, n), {-n, 0}});
      v.push_back({e4_point(E4Family::AStar, n), {n, 1}});
      v.push_back({e4_point(E4Family::ATildeStar, n), {-n, 1}});
    }
    return v;
  }();
  return t;
}

}  // namespace

QPoint e4_point(E4Family f, int n) {
  const WeierstrassCurve &e = curve("E4");
  const QPoint gen = QPoint::affine(Rational(1, 5), Rational(3, 5));
  const QPoint ostar = QPoint::affine(Rational(0), Rational(0));
  const bool tilde = f == E4Family::ATilde || f == E4Family::ATildeStar;
  const bool star = f == E4Family::AStar || f == E4Family::ATildeStar;
  QPoint p = multiply(e, tilde ? -n : n, gen);
  return star ? add(e, p, ostar) : p;
}

std::optional<std::pair<int, int>> e4_label(const QPoint &p) {
  if (p.inf) return std::nullopt;
  for (const auto &[q, nl] : e4_table()) {
    if (q == p) return nl;
  }
  return std::nullopt;
}

bool e4_parity_check(const QDivisor &d) {
  long n = 0, l = 0;
  for (const auto &[p, c] : d.terms()) {
    if (p.is_infinity()) continue;
    if (!c.is_integer()) throw ClassificationError("coefficient " + c.str() + " is not an integer");
    auto pt = p.as_point();
    if (!pt) throw ClassificationError("component " + p.str() + " is not a named E4 point");
    auto nl = e4_label(*pt);
    if (!nl) throw ClassificationError(pt->str() + " is not a named E4 point");
    const long k = c.num().get_si();
    n += k * nl->first;
    l += k * nl->second;
  }
  return n == 0 && l % 2 == 0;
}

}  // namespace darboux
