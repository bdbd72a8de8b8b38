/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/elliptic.hpp"
#include "darboux/factor.hpp"

namespace darboux {

namespace {

// a + b*W in Q[x]/(p)[W]/(W^2 - g).
struct Elem {
  QPoly a, b;
};

struct Ring {
  QPoly p, g;
  Elem mul(const Elem &u, const Elem &v) const {
    return {(u.a * v.a + (u.b * v.b % p) * g) % p, (u.a * v.b + u.b * v.a) % p};
  }
};

QPoly xpow(int k) { return QPoly::monomial(Rational(1), k, Var::X); }

}  // namespace

std::optional<QPoly> sqrt_mod(const QPoly &g0, const QPoly &p0) {
  const QPoly p = p0.monic().with_var(Var::X);
  const QPoly g = g0.with_var(Var::X) % p;
  if (g.is_zero()) return QPoly(Var::X);
  const int n = p.degree();
  if (n == 1) {
    auto r = g.coeff(0).root(2);
    if (!r) return std::nullopt;
    return QPoly(*r, Var::X);
  }
  const Ring ring{p, g};
  auto coords = [&](const QPoly &f, std::vector<Rational> &col, int off) {
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(off + i)] = f.coeff(i);
  };
  for (long lambda = 0; lambda < 64; ++lambda) {
    // Multiplication by u = lambda*x + W on the basis x^i, x^i W.
    const std::size_t m = static_cast<std::size_t>(2 * n);
    std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m, Rational(0)));
    const Elem u{QPoly(Rational(lambda), Var::X) * xpow(1), QPoly(Rational(1), Var::X)};
    for (int i = 0; i < n; ++i) {
      for (int w = 0; w < 2; ++w) {
        Elem e = w == 0 ? Elem{xpow(i), QPoly(Var::X)} : Elem{QPoly(Var::X), xpow(i)};
        Elem img = ring.mul(u, e);
        std::vector<Rational> col(m, Rational(0));
        coords(img.a, col, 0);
        coords(img.b, col, n);
        const std::size_t j = static_cast<std::size_t>(w * n + i);
        for (std::size_t r = 0; r < m; ++r) mat[r][j] = col[r];
      }
    }
    const QPoly chi = charpoly(mat, Var::X);
    if (poly_gcd(chi, chi.derivative()).degree() > 0) continue;
    const Factorization fz = factor(chi);
    if (fz.factors.size() == 1) return std::nullopt;
    for (const auto &[f, mult] : fz.factors) {
      Elem acc{QPoly(Var::X), QPoly(Var::X)};
      for (int k = f.degree(); k >= 0; --k) {
        acc = ring.mul(acc, u);
        acc.a = acc.a + QPoly(f.coeff(k), Var::X);
      }
      if (acc.b.is_zero()) continue;
      QPoly s = (-acc.a * inverse_mod(acc.b, p)) % p;
      if (((s * s - g) % p).is_zero()) return s;
    }
    throw Error("square root modulo " + p.str() + " not recovered from the norm factors");
  }
  throw Error("no separating shift for square root modulo " + p.str());
}

QPoly hensel_sqrt(const QPoly &g, const QPoly &p, const QPoly &q, int k) {
  QPoly cur = q % p;
  for (int have = 1; have < k;) {
    have = std::min(2 * have, k);
    const QPoly mod = p.pow(static_cast<unsigned>(have));
    const QPoly two_q = (Rational(2) * cur) % mod;
    cur = (cur - ((cur * cur - g) % mod) * inverse_mod(two_q, mod)) % mod;
  }
  return cur;
}

std::vector<ClosedPoint> places_above(const WeierstrassCurve &e, const QPoly &p0) {
  const QPoly p = p0.monic().with_var(Var::X);
  const QPoly G = e.G();
  if ((G % p).is_zero()) return {ClosedPoint::component(p, QPoly(Var::X))};
  auto s = sqrt_mod(G, p);
  if (!s) return {ClosedPoint::inert(p)};
  return {ClosedPoint::component(p, *s), ClosedPoint::component(p, -*s)};
}

QPoint component_sum(const WeierstrassCurve &e, const ClosedPoint &c) {
  if (c.is_infinity() || c.is_inert()) return QPoint::infinity();
  if (auto pt = c.as_point()) {
    if (!on_curve(e, *pt)) throw ParameterError(pt->str() + " is not on " + e.name);
    return *pt;
  }
  if (!c.lies_on(e)) throw ParameterError(c.str() + " is not on " + e.name);
  // div(xi - q(x)) = sum over factors f^m of N = q^2 - G of m*[f, q mod f] - deg(N)*O.
  const QPoly N = c.q() * c.q() - e.G();
  const int m = poly_valuation(N, c.p());
  if (m != 1) {
    throw UnsupportedSupport("xi - q(x) is tangent to the curve along " + c.str());
  }
  const QPoly rest = N.exact_div(c.p());
  QPoint acc = QPoint::infinity();
  if (rest.degree() > 0) {
    for (const auto &[f, mult] : factor(rest).factors) {
      acc = add(e, acc, multiply(e, mult, component_sum(e, ClosedPoint::component(f, c.q()))));
    }
  }
  return negate(acc);
}

}  // namespace darboux
