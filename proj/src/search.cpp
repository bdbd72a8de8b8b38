/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <map>
#include <mutex>

#include "darboux/error.hpp"
#include "darboux/evaluations.hpp"

namespace darboux {

const std::vector<std::string> &table_functions(const std::string &curve) {
  static const std::map<std::string, std::vector<std::string>> tables = {
      {"E3",
       {"xi", "1+33*x-9*x^2", "1-9*xi+54*x", "1+9*xi+54*x", "1+9*x", "xi+5*x", "1+21*xi-117*x+9*x*xi-234*x^2",
        "1-21*xi-117*x-9*x*xi-234*x^2"}},
      {"E4",
       {"x", "1-5*x", "25+x", "1-125*x", "5*xi+57*x", "-5*xi+57*x", "1+5*xi+10*x", "1-3*xi+2*x", "4+21*xi+41*x",
        "5-3*xi-34*x", "1-15*x-5*x^2", "1-40*x-5*x^2", "5-7*xi-45*x-5*x^2", "5+18*xi-80*x+5*x^2",
        "1-7*xi+15*x+15*x^2", "4-7*xi-30*x", "1+3*xi-20*x", "1-8*xi+22*x-15*x^2", "4-35*xi-101*x", "20-7*xi-79*x",
        "1+50*x-125*xi^2+450*x*xi-500*x^2", "1+50*x-125*xi^2-450*x*xi-500*x^2", "25-570*xi+248*x+xi^2-380*x^2",
        "4+95*xi+83*x+21*xi^2-475*x*xi+40*x^2"}},
      {"E5",
       {"xi+5*x", "xi-5*x", "xi+3*x", "xi-3*x", "1+xi+x", "1-2*xi+6*x", "1+12*x+16*x^2", "1-2*xi-14*x",
        "1-28*x+16*x^2", "1+8*xi-28*x+8*x*xi-104*x^2"}},
      {"E6",
       {"xi", "1-xi", "1+xi", "1+xi+2*x", "1-xi+2*x", "1+x-x^2", "1-4*x-x^2", "xi+2*x+x^2", "1+xi-2*x",
        "1-xi-2*x"}},
  };
  auto it = tables.find(curve);
  if (it == tables.end()) throw ParameterError("no function table for " + curve);
  return it->second;
}

namespace {

struct Generator {
  CurveFunction f;  // value 1 at the base point to leading order
  QDivisor div;
};

CurveFunction normalized(const CurveFunction &f) {
  int probe = 8;
  QSeries s = expand_at_base(f, probe);
  while (s.is_zero()) {
    probe *= 2;
    if (probe > 1024) throw Error("generator " + f.str() + " vanishes to high order at the base point");
    s = expand_at_base(f, probe);
  }
  return f * CurveFunction::constant(f.curve(), Rational(1) / s.leading());
}

const std::vector<Generator> &generators(const WeierstrassCurve &e) {
  static std::mutex mu;
  static std::map<const WeierstrassCurve *, std::vector<Generator>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&e);
  if (it != cache.end()) return it->second;
  std::vector<CurveFunction> fs = {CurveFunction::x(&e), CurveFunction::xi(e)};
  for (const auto &s : table_functions(e.name)) {
    CurveFunction f = CurveFunction::parse(&e, s);
    fs.push_back(f);
    fs.push_back(f.conj());
  }
  std::vector<Generator> out;
  for (const auto &f : fs) {
    Generator g{normalized(f), principal_divisor(f)};
    bool seen = false;
    for (const auto &h : out) seen = seen || h.div == g.div;
    if (!seen) out.push_back(std::move(g));
  }
  return cache.emplace(&e, std::move(out)).first->second;
}

/// c with sum c_j div(g_j) = d, if d lies in the span.
std::optional<std::vector<Rational>> solve_span(const std::vector<Generator> &gens, const QDivisor &d) {
  std::map<ClosedPoint, std::size_t> rows;
  for (const auto &g : gens) {
    for (const auto &[p, c] : g.div.terms()) rows.emplace(p, rows.size());
  }
  for (const auto &[p, c] : d.terms()) {
    if (!rows.count(p)) return std::nullopt;
  }
  const std::size_t n = gens.size(), m = rows.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto &[p, c] : gens[j].div.terms()) a[rows[p]][j] = c;
  }
  for (const auto &[p, c] : d.terms()) a[rows[p]][n] = c;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = r;
    while (piv < m && a[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    const Rational inv = Rational(1) / a[r][col];
    for (auto &v : a[r]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t k = col; k <= n; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (!a[i][n].is_zero()) return std::nullopt;
  }
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) c[pivot_col[i]] = a[i][n];
  return c;
}

std::vector<QDivisor> genus0_candidates(const PullbackScheme &s) {
  std::vector<QDivisor> out = {QDivisor()};
  for (const auto &p : s.singular()) {
    std::vector<QDivisor> next;
    for (const auto &d : out) {
      next.push_back(d + QDivisor(p.point, p.lambda1));
      if (p.lambda2 != p.lambda1) next.push_back(d + QDivisor(p.point, p.lambda2));
    }
    out = std::move(next);
  }
  std::vector<QDivisor> kept;
  for (const auto &d : out) {
    if (d.degree().is_zero()) kept.push_back(d);
  }
  return kept;
}

bool same_series(const QSeries &a, const QSeries &b) { return !QSeries::first_mismatch(a, b).has_value(); }

}  // namespace

SearchResult radical_solution_search(const HpgParams &params, const Covering &c, const PullbackScheme &scheme,
                                     int budget, int order) {
  params.validate();
  if (scheme.curve != c.curve) throw FieldMismatch("scheme and covering live on different curves");
  SearchResult res;
  const WeierstrassCurve *e = c.curve;
  res.candidates = e ? candidate_divisors(scheme, *e, budget) : genus0_candidates(scheme);

  const QSeries phi = expand_at_base(c.map, order);
  if (phi.is_zero() || phi.valuation() <= 0) throw BasePointError(c.key + " does not vanish at the base point");
  const QSeries sol1 = QSeries::compose(gauss_series(params, order), phi).truncated(order + 1);
  std::optional<QSeries> sol2;
  const Rational rho = Rational(1) - params.C;
  const Rational c2 = Rational(2) - params.C;
  if (!rho.is_zero() && !(c2.is_integer() && c2 <= Rational(0))) {
    const HpgParams p2{params.A + rho, params.B + rho, c2};
    sol2 = phi.unit_part().pow(rho) * QSeries::compose(gauss_series(p2, order), phi);
  }
  const Rational v2 = rho * phi.valuation_q();

  for (const auto &d : res.candidates) {
    RadicalFunction rad;
    if (e) {
      const auto &gens = generators(*e);
      auto coeffs = solve_span(gens, d);
      if (!coeffs) {
        res.diagnostics.push_back(d.str() + ": outside the span of the table divisors");
        continue;
      }
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!(*coeffs)[j].is_zero()) rad.times(gens[j].f, (*coeffs)[j]);
      }
    } else {
      for (const auto &[p, k] : d.terms()) {
        if (p.is_infinity()) continue;
        rad.times(normalized(CurveFunction(nullptr, QRatFunc(p.p()))), k);
      }
    }
    const QSeries s = rad.factors.empty() ? QSeries::constant(Rational(1), order + 1, e ? 2 : 1)
                                          : expand_at_base(rad, order);
    const QSeries u = s.unit_part();
    int which = 0;
    if (s.valuation_q().is_zero() && same_series(u, sol1)) {
      which = 1;
    } else if (sol2 && s.valuation_q() == v2 && same_series(u, *sol2)) {
      which = 2;
    }
    if (!which) {
      res.diagnostics.push_back(d.str() + ": series matches neither local solution");
      continue;
    }
    res.solutions.push_back({d, std::move(rad), which});
  }
  if (res.solutions.empty()) res.diagnostics.push_back("no candidate divisor yields a local solution");
  return res;
}

}  // namespace darboux
