/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/factor.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "darboux/zpoly.hpp"

namespace darboux {

namespace {

thread_local mpfr_prec_t g_prec = 256;

// Thin RAII handle over mpfr_t at the working precision.
class Mp {
 public:
  Mp() { mpfr_init2(v_, g_prec); mpfr_set_zero(v_, 1); }
  Mp(long x) { mpfr_init2(v_, g_prec); mpfr_set_si(v_, x, MPFR_RNDN); }  // NOLINT
  explicit Mp(const mpz_class &z) { mpfr_init2(v_, g_prec); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  Mp(const Mp &o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mp &operator=(const Mp &o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Mp() { mpfr_clear(v_); }

  friend Mp operator+(const Mp &a, const Mp &b) { Mp r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Mp operator-(const Mp &a, const Mp &b) { Mp r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Mp operator*(const Mp &a, const Mp &b) { Mp r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Mp operator/(const Mp &a, const Mp &b) { Mp r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  Mp operator-() const { Mp r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
  Mp abs() const { Mp r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
  Mp sqrt() const { Mp r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
  friend bool operator<(const Mp &a, const Mp &b) { return mpfr_less_p(a.v_, b.v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  long exponent() const { return is_zero() ? LONG_MIN / 2 : mpfr_get_exp(v_); }
  mpz_class round() const {
    mpz_class z;
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_round(t, v_);
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
  }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  static Mp cosine_of(double a) { Mp r; mpfr_set_d(r.v_, std::cos(a), MPFR_RNDN); return r; }
  static Mp sine_of(double a) { Mp r; mpfr_set_d(r.v_, std::sin(a), MPFR_RNDN); return r; }
  static Mp two_pow(long e) { Mp r(1); mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN); return r; }

 private:
  mpfr_t v_;
};

struct Cx {
  Mp re, im;
  friend Cx operator+(const Cx &a, const Cx &b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx &a, const Cx &b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx &a, const Cx &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx &a, const Cx &b) {
    Mp n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Mp norm2() const { return re * re + im * im; }
};

std::size_t max_bits(const ZPoly &p) {
  std::size_t b = 1;
  for (const auto &c : p.c) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

// All complex roots of a square-free integer polynomial (Aberth iteration).
std::vector<Cx> roots(const ZPoly &p) {
  const int n = p.degree();
  std::vector<Mp> c;
  for (const auto &x : p.c) c.emplace_back(x);
  std::vector<Mp> dc;
  for (int i = 1; i <= n; ++i) dc.push_back(c[static_cast<std::size_t>(i)] * Mp(static_cast<long>(i)));

  // Cauchy bound for the initial circle.
  double bound = 0;
  const double l = std::fabs(mpz_get_d(p.lc().get_mpz_t()));
  for (int i = 0; i < n; ++i) {
    bound = std::max(bound, std::fabs(mpz_get_d(p.c[static_cast<std::size_t>(i)].get_mpz_t())) / l);
  }
  const double radius = std::min(1e12, 1 + bound) * 0.7;
  std::vector<Cx> z;
  for (int k = 0; k < n; ++k) {
    double a = 2 * M_PI * k / n + 0.4;
    Mp rr = Mp::cosine_of(0) * Mp(static_cast<long>(radius * 1024)) / Mp(1024);
    z.push_back({rr * Mp::cosine_of(a), rr * Mp::sine_of(a)});
  }
  auto horner = [](const std::vector<Mp> &cs, const Cx &x) {
    Cx acc{Mp(0), Mp(0)};
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + Cx{*it, Mp(0)};
    return acc;
  };
  const long tol_exp = -static_cast<long>(g_prec) + 24;
  for (int it = 0; it < 4000; ++it) {
    long worst = LONG_MIN / 2;
    for (int i = 0; i < n; ++i) {
      auto &zi = z[static_cast<std::size_t>(i)];
      Cx pv = horner(c, zi);
      if (pv.re.is_zero() && pv.im.is_zero()) continue;
      Cx dv = horner(dc, zi);
      Cx w = pv / dv;
      Cx s{Mp(0), Mp(0)};
      for (int j = 0; j < n; ++j) {
        if (j != i) s = s + Cx{Mp(1), Mp(0)} / (zi - z[static_cast<std::size_t>(j)]);
      }
      Cx corr = w / (Cx{Mp(1), Mp(0)} - w * s);
      zi = zi - corr;
      Mp mag = corr.norm2().sqrt();
      Mp scale = zi.norm2().sqrt();
      long e = mag.exponent() - std::max(0L, scale.exponent());
      worst = std::max(worst, e);
    }
    if (worst < tol_exp) break;
  }
  return z;
}

}  // namespace

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly &f0) {
  std::vector<std::pair<QPoly, int>> out;
  if (f0.degree() <= 0) return out;
  QPoly f = f0.monic();
  QPoly a = poly_gcd(f, f.derivative());
  QPoly b = f.exact_div(a);
  QPoly c = f.derivative().exact_div(a);
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b.exact_div(g);
    c = d.exact_div(g);
    d = c - b.derivative();
  }
  return out;
}

std::vector<QPoly> factor_squarefree(const QPoly &f) {
  const Var v = f.var();
  std::vector<QPoly> out;
  if (f.degree() <= 0) return out;
  ZPoly p = ZPoly::primitive(f);
  // Pull out the factor x^k first.
  while (p.degree() > 0 && p.c[0] == 0) {
    out.push_back(QPoly::variable(v));
    p.c.erase(p.c.begin());
  }
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    out.push_back(p.to_q(v).monic());
    return out;
  }
  const int n = p.degree();
  const mpfr_prec_t saved = g_prec;
  g_prec = static_cast<mpfr_prec_t>(128 + 4 * max_bits(p) + 16 * n);
  std::vector<Cx> z = roots(p);

  // Group roots into Galois-closed units: real roots and conjugate pairs.
  std::vector<std::vector<int>> units;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  const long im_tol = -static_cast<long>(g_prec) / 3;
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    used[static_cast<std::size_t>(i)] = true;
    const Cx &zi = z[static_cast<std::size_t>(i)];
    if (zi.im.abs().exponent() - std::max(0L, zi.re.abs().exponent()) < im_tol) {
      units.push_back({i});
      continue;
    }
    int best = -1;
    Mp bd;
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const Cx &zj = z[static_cast<std::size_t>(j)];
      Mp dist = (zi.re - zj.re).abs() + (zi.im + zj.im).abs();
      if (best < 0 || dist < bd) {
        best = j;
        bd = dist;
      }
    }
    if (best < 0) {
      units.push_back({i});
      continue;
    }
    used[static_cast<std::size_t>(best)] = true;
    units.push_back({i, best});
  }

  const Mp lcm(p.lc());
  std::vector<bool> alive(units.size(), true);
  ZPoly rest = p;

  // Try a candidate made of the chosen units; returns true and divides it out on success.
  auto try_subset = [&](const std::vector<int> &pick) {
    std::vector<Cx> poly{{lcm, Mp(0)}};
    for (int u : pick) {
      for (int r : units[static_cast<std::size_t>(u)]) {
        std::vector<Cx> next(poly.size() + 1, Cx{Mp(0), Mp(0)});
        const Cx &zr = z[static_cast<std::size_t>(r)];
        for (std::size_t k = 0; k < poly.size(); ++k) {
          next[k + 1] = next[k + 1] + poly[k];
          next[k] = next[k] - poly[k] * zr;
        }
        poly = std::move(next);
      }
    }
    ZPoly g;
    for (const auto &cc : poly) g.c.push_back(cc.re.round());
    g.make_primitive();
    if (g.degree() < 1) return false;
    ZPoly q;
    if (!zdiv_exact(rest, g, q)) return false;
    rest = q;
    out.push_back(g.to_q(v).monic());
    for (int u : pick) alive[static_cast<std::size_t>(u)] = false;
    return true;
  };

  // Increasing target degree; each found factor removes its units.
  for (int target = 1; 2 * target <= rest.degree(); ++target) {
    bool again = true;
    while (again && 2 * target <= rest.degree()) {
      again = false;
      std::vector<int> live;
      for (std::size_t u = 0; u < units.size(); ++u) {
        if (alive[u]) live.push_back(static_cast<int>(u));
      }
      std::vector<int> pick;
      std::function<bool(std::size_t, int, Cx)> rec = [&](std::size_t from, int deg, Cx sum) -> bool {
        if (deg == target) {
          // lc * (sum of roots) must be an integer.
          Mp t = lcm * sum.re;
          Mp frac = (t - Mp(t.round())).abs();
          if (!(frac < Mp::two_pow(-20))) return false;
          return try_subset(pick);
        }
        for (std::size_t k = from; k < live.size(); ++k) {
          int u = live[k];
          int d = static_cast<int>(units[static_cast<std::size_t>(u)].size());
          if (deg + d > target) continue;
          Cx s2 = sum;
          for (int r : units[static_cast<std::size_t>(u)]) s2 = s2 + z[static_cast<std::size_t>(r)];
          pick.push_back(u);
          if (rec(k + 1, deg + d, s2)) return true;
          pick.pop_back();
        }
        return false;
      };
      if (rec(0, 0, Cx{Mp(0), Mp(0)})) again = true;
    }
  }
  if (rest.degree() > 0) out.push_back(rest.to_q(v).monic());
  g_prec = saved;
  return out;
}

Factorization factor(const QPoly &f) {
  Factorization out;
  if (f.is_zero()) throw Error("factorization of zero polynomial");
  out.unit = f.lc();
  for (const auto &[g, m] : squarefree_decomposition(f)) {
    for (auto &h : factor_squarefree(g)) out.factors.emplace_back(std::move(h), m);
  }
  return out;
}

bool is_irreducible(const QPoly &f) {
  if (f.degree() < 1) return false;
  auto sq = squarefree_decomposition(f);
  if (sq.size() != 1 || sq[0].second != 1) return false;
  return factor_squarefree(f).size() == 1;
}

QPoly charpoly(const std::vector<std::vector<Rational>> &a, Var v) {
  // Faddeev-LeVerrier.
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
      }
    }
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    }
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return QPoly(c, v);
}

}  // namespace darboux
