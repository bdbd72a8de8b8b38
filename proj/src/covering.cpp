/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/covering.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <optional>

#include "darboux/factor.hpp"

namespace darboux {

namespace {

int index_of(BaseValue v) { return static_cast<int>(v); }

Partition sorted(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

struct Registration {
  const char *key;
  const char *curve;  // nullptr for P^1
  const char *map;
  const char *label;
};

// Elliptic maps are written as numerator/denominator over the curve.
const std::vector<Registration> &registrations() {
  static const std::vector<Registration> r = {
      {"id", nullptr, "x", "identity"},
      {"tetra4", nullptr, "x*(x+4)^3/(4*(2*x-1)^3)", "tetrahedral Darboux covering, degree 4"},
      {"tetra6", nullptr, "(x^2-6*x-3)^3/(x^2+6*x-3)^3", "tetrahedral Darboux covering, degree 6"},
      {"tetra12", nullptr, "x^3*(x^3+4)^3/(4*(2*x^3-1)^3)", "tetrahedral Darboux covering, degree 12"},
      {"tetra4b", nullptr, "x*(x+2)^3/(2*x+1)^3", "tetrahedral Darboux covering, degree 4, second placement"},
      {"octa6", nullptr, "108*x*(x-1)^4/(x^2+14*x+1)^3", "octahedral Darboux covering, degree 6"},
      {"octa6b", nullptr, "27*x*(x+1)^4/(2*(x^2+4*x+1)^3)", "octahedral covering of type (2/3,1/4,1/4), degree 6"},
      {"octa8", nullptr, "(x^2+20*x-8)^4/(256*x*(x+1)^3*(x-8)^3)", "octahedral Darboux covering, degree 8"},
      {"octa12", nullptr, "27*(x-1)^4*(x^2+6*x+1)^4/((x^2-10*x+1)^3*(3*x^2+2*x+3)^3)",
       "octahedral Darboux covering, degree 12"},
      {"icosa12", nullptr, "1728*x*(x^2-11*x-1)^5/(x^4+228*x^3+494*x^2-228*x+1)^3",
       "icosahedral Darboux covering, degree 12"},
      {"icosa20", nullptr,
       "64*(x^4+55*x^3-165*x^2-275*x+25)^5/(125*x*(x^2+5*x+40)^3*(x^2-40*x-5)^3*(8*x^2-5*x+5)^3)",
       "icosahedral Darboux covering, degree 20"},
      {"icosa30", nullptr,
       "27*(x^2+2*x+5)^5*(x^4+20*x^3-210*x^2+100*x+25)^5/((3*x^2-10*x+15)^3*(x^4+70*x^2+25)^3*"
       "(x^4-60*x^3-370*x^2-300*x+25)^3)",
       "icosahedral Darboux covering, degree 30"},
      {"phi1", nullptr, "1728*x*(x^2-11*x-1)^5/(x^4+228*x^3+494*x^2-228*x+1)^3", "Darboux covering for (1/2,1/3,1/5)"},
      {"phi2", nullptr, "64*x*(x^2-x-1)^5/((x^2-1)*(x^2+4*x-1)^5)", "Darboux covering for (1/2,1/3,2/5)"},
      {"phi3", "E3", "144*xi*(1+33*x-9*x^2)^2*(1-9*xi+54*x)/(1+21*xi-117*x+9*x*xi-234*x^2)^3",
       "Darboux covering for (1/3,1/3,2/5) and (1/3,2/3,1/5)"},
      {"phi4", "E4",
       "432*x*(1-7/5*xi-9*x-x^2)^5*(1+50*x-125*xi^2+450*x*xi-500*x^2)/((5*xi+57*x)*(1+18/5*xi-16*x+x^2)^5*"
       "(1+50*x-125*xi^2-450*x*xi-500*x^2))",
       "Darboux covering for (2/3,1/5,1/5) and (1/3,2/5,3/5)"},
      {"phi5", "E5", "-54*(xi+5*x)^3*(1-2*xi+6*x)^5/((1-16*x^2)*(xi-5*x)^2*(1-2*xi-14*x)^5)",
       "Darboux covering for (1/3,1/5,3/5)"},
      {"phi6", "E6", "16*xi*(1+x-x^2)^2*(1-xi)^2/((1+xi+2*x)*(1+xi-2*x)^5)",
       "Darboux covering for (1/5,1/5,4/5) and (2/5,2/5,2/5)"},
      {"klein-1", nullptr, "x^2*(189-64*x)^5/(3584*x^2+2457*x-2916)^3", "Klein pull-back to (1/2,1/3,2/5)"},
      {"klein-2", nullptr, "4*x*(25*x-9)^5/(27*(x-1)*(125*x+3)^3)", "Klein pull-back to (1/3,2/3,1/5)"},
      {"klein-3", nullptr, "3125*x^2*(x-1)^3*(5*x+27)^5/(4*(625*x^3-2875*x^2+675*x-729)^3)",
       "Klein pull-back to (1/3,2/5,3/5)"},
  };
  return r;
}

const std::map<std::string, Covering> &registry() {
  static const std::map<std::string, Covering> m = [] {
    std::map<std::string, Covering> out;
    for (const auto &r : registrations()) {
      if (!r.curve) {
        out.emplace(r.key, genus0_covering(r.key, r.map, r.label));
        continue;
      }
      Covering c;
      c.key = r.key;
      c.label = r.label;
      c.curve = &curve(r.curve);
      c.map = CurveFunction::parse(c.curve, r.map);
      c.degree = 12;
      out.emplace(r.key, std::move(c));
    }
    return out;
  }();
  return m;
}

const QPoly &num(const Covering &c) { return c.map.f1().num(); }
const QPoly &den(const Covering &c) { return c.map.f1().den(); }

void require_genus0(const Covering &c) {
  if (c.elliptic()) throw ParameterError("covering " + c.key + " is not a map of P^1");
}

// Polynomial whose roots are the finite points above v, and the index of x = infinity (0 if not above v).
std::pair<QPoly, int> fiber_poly(const Covering &c, BaseValue v) {
  const QPoly &n = num(c), &d = den(c);
  switch (v) {
    case BaseValue::Zero: return {n, std::max(0, d.degree() - n.degree())};
    case BaseValue::Infinity: return {d, std::max(0, n.degree() - d.degree())};
    case BaseValue::One: {
      QPoly m = n - d;
      return {m, c.degree - m.degree()};
    }
  }
  return {n, 0};
}

// Ports the placement rule: the exponent with denominator k sits at a base point with denominator k,
// contributing a point of index equal to its numerator; the rest of that fiber has index k.
std::optional<BaseBranching> klein_from_exponents(const std::array<int, 3> &ks, const std::array<Rational, 3> &es) {
  std::optional<BaseBranching> best;
  for (int a0 = 0; a0 < 3; ++a0)
    for (int a1 = 0; a1 < 3; ++a1)
      for (int a2 = 0; a2 < 3; ++a2) {
        const std::array<int, 3> assign = {a0, a1, a2};
        bool ok = true;
        std::array<long, 3> s{}, cnt{};
        for (int i = 0; i < 3; ++i) {
          const Rational &e = es[i];
          if (e.den() != ks[assign[i]]) {
            ok = false;
            break;
          }
          s[assign[i]] += e.num().get_si();
          cnt[assign[i]] += 1;
        }
        if (!ok) continue;
        // sum over fibers of (s - cnt) + (n - s)(k - 1)/k = 2n - 2, linear in n
        Rational a(-2), b(2);
        for (int i = 0; i < 3; ++i) {
          a += Rational(ks[i] - 1, ks[i]);
          b += Rational(s[i] - cnt[i]) - Rational(s[i] * (ks[i] - 1), ks[i]);
        }
        if (a.is_zero()) continue;
        Rational n = -b / a;
        if (!n.is_integer() || n.sign() <= 0) continue;
        const long deg = n.num().get_si();
        BaseBranching out;
        out.degree = static_cast<int>(deg);
        out.denominators = ks;
        for (int i = 0; i < 3 && ok; ++i) {
          const long rest = deg - s[i];
          if (rest < 0 || rest % ks[i]) {
            ok = false;
            break;
          }
          Partition p;
          for (int j = 0; j < 3; ++j)
            if (assign[j] == i) p.push_back(static_cast<int>(es[j].num().get_si()));
          p.insert(p.end(), static_cast<std::size_t>(rest / ks[i]), ks[i]);
          out.partitions[i] = sorted(p);
        }
        if (ok && (!best || out.degree < best->degree)) best = out;
      }
  return best;
}

std::array<int, 3> standard_denominators(SchwartzType t) {
  switch (monodromy_group(t)) {
    case MonodromyGroup::Tetrahedral: return {2, 3, 3};
    case MonodromyGroup::Octahedral: return {2, 3, 4};
    case MonodromyGroup::Icosahedral: return {2, 3, 5};
    default: throw ParameterError("type " + type_label(t) + " has no standard Darboux coverings");
  }
}

BaseBranching from_covering(const std::array<Partition, 3> &parts, int degree) {
  BaseBranching b;
  b.partitions = parts;
  b.denominators = placement(parts);
  b.degree = degree;
  return b;
}

std::array<Partition, 3> all_branching(const Covering &c) {
  return {branching_data(c, BaseValue::Zero), branching_data(c, BaseValue::One), branching_data(c, BaseValue::Infinity)};
}

}  // namespace

std::string base_value_str(BaseValue v) {
  switch (v) {
    case BaseValue::Zero: return "0";
    case BaseValue::One: return "1";
    case BaseValue::Infinity: return "inf";
  }
  return "?";
}

Covering genus0_covering(const std::string &key, const std::string &map, const std::string &label) {
  Covering c;
  c.key = key;
  c.label = label.empty() ? map : label;
  c.map = CurveFunction::parse(nullptr, map);
  if (c.map.is_constant()) throw ParameterError("constant map " + map);
  c.degree = std::max(num(c).degree(), den(c).degree());
  return c;
}

const Covering &covering(const std::string &key) {
  const auto &m = registry();
  auto it = m.find(key);
  if (it == m.end()) throw ParameterError("unknown covering \"" + key + "\"");
  return it->second;
}

std::vector<std::string> covering_keys() {
  std::vector<std::string> out;
  for (const auto &r : registrations()) out.emplace_back(r.key);
  return out;
}

const std::vector<std::string> &standard_covering_keys() {
  static const std::vector<std::string> k = {"tetra4", "tetra6", "tetra12", "octa6", "octa8",
                                             "octa12", "icosa12", "icosa20", "icosa30"};
  return k;
}

std::vector<FiberPoint> fiber(const Covering &c, BaseValue v) {
  std::vector<FiberPoint> out;
  if (c.elliptic()) {
    QDivisor d = v == BaseValue::One ? principal_divisor(c.map - CurveFunction::constant(c.curve, Rational(1)))
                                     : principal_divisor(c.map);
    const int sign = v == BaseValue::Infinity ? -1 : 1;
    for (const auto &[p, coef] : d.terms()) {
      const Rational k = coef * Rational(sign);
      if (k.sign() > 0) out.push_back({p, static_cast<int>(k.num().get_si())});
    }
    return out;
  }
  auto [poly, at_inf] = fiber_poly(c, v);
  for (const auto &[f, m] : factor(poly).factors) out.push_back({ClosedPoint::component(f, QPoly(Var::X)), m});
  if (at_inf > 0) out.push_back({ClosedPoint::infinity(), at_inf});
  return out;
}

Partition branching_data(const Covering &c, BaseValue v) {
  Partition p;
  if (c.elliptic()) {
    for (const auto &fp : fiber(c, v)) p.insert(p.end(), static_cast<std::size_t>(fp.point.degree()), fp.index);
    return sorted(p);
  }
  auto [poly, at_inf] = fiber_poly(c, v);
  for (const auto &[f, m] : squarefree_decomposition(poly)) p.insert(p.end(), static_cast<std::size_t>(f.degree()), m);
  if (at_inf > 0) p.push_back(at_inf);
  return sorted(p);
}

std::array<Partition, 3> substituted_branching(const Covering &c, int e) {
  require_genus0(c);
  if (e < 1) throw ParameterError("substitution exponent must be positive");
  std::array<Partition, 3> out;
  const QPoly x = QPoly::variable(Var::X);
  for (BaseValue v : kBaseValues) {
    auto [poly, at_inf] = fiber_poly(c, v);
    Partition p;
    for (const auto &[f, m] : squarefree_decomposition(poly)) {
      int roots = f.degree();
      if ((f % x).is_zero()) {
        p.push_back(m * e);
        --roots;
      }
      p.insert(p.end(), static_cast<std::size_t>(roots * e), m);
    }
    if (at_inf > 0) p.push_back(at_inf * e);
    out[static_cast<std::size_t>(index_of(v))] = sorted(p);
  }
  return out;
}

std::array<int, 3> placement(const std::array<Partition, 3> &branching) {
  std::array<int, 3> k{};
  for (int i = 0; i < 3; ++i) k[i] = branching[i].empty() ? 1 : *std::max_element(branching[i].begin(), branching[i].end());
  return k;
}

Partition dramifico_partition(int m, int k) {
  if (k < 1 || m < 0) throw ParameterError("bad degree or denominator");
  Partition p(static_cast<std::size_t>(m / k), k);
  p.insert(p.end(), static_cast<std::size_t>(m % k), 1);
  return p;
}

bool check_dramifico(const Covering &c, BaseValue v, int k) {
  return branching_data(c, v) == dramifico_partition(c.degree, k);
}

bool check_dramifico(const Covering &c, int k) {
  const auto parts = all_branching(c);
  const auto dens = placement(parts);
  for (int i = 0; i < 3; ++i) {
    if (dens[i] == k && parts[i] != dramifico_partition(c.degree, k)) return false;
  }
  return true;
}

int hurwitz_genus(int degree, int base_genus, const std::vector<Partition> &branching) {
  long ram = 0;
  for (const auto &p : branching) {
    long s = 0;
    for (int r : p) {
      if (r < 1) throw InconsistentBranching("branching index must be positive");
      s += r;
      ram += r - 1;
    }
    if (s != degree) throw InconsistentBranching("partition does not sum to the degree " + std::to_string(degree));
  }
  const long twice = (2L * base_genus - 2) * degree + ram + 2;
  if (twice % 2 || twice < 0) throw InconsistentBranching("Hurwitz formula gives non-integral or negative genus");
  return static_cast<int>(twice / 2);
}

std::array<std::vector<Partition>, 3> fiber_product_branching(const std::array<Partition, 3> &psi,
                                                             const std::array<Partition, 3> &phi) {
  std::array<std::vector<Partition>, 3> out;
  for (int i = 0; i < 3; ++i) {
    for (int r : psi[i]) {
      Partition p;
      for (int a : phi[i]) {
        const int g = std::gcd(a, r);
        p.insert(p.end(), static_cast<std::size_t>(g), std::lcm(a, r) / r);
      }
      out[i].push_back(sorted(p));
    }
  }
  return out;
}

int fiber_product_genus(const std::array<Partition, 3> &psi, const std::array<Partition, 3> &phi, int phi_degree) {
  std::vector<Partition> all;
  for (const auto &fib : fiber_product_branching(psi, phi))
    for (const auto &p : fib) all.push_back(p);
  return hurwitz_genus(phi_degree, 0, all);
}

BaseBranching derived_klein_branching(SchwartzType t) {
  const auto ks = standard_denominators(t);
  const ExponentDiffs e = representative(t);
  auto b = klein_from_exponents(ks, {e.e0, e.e1, e.einf});
  if (!b) throw InconsistentBranching("no Klein branching for " + type_label(t));
  return *b;
}

BaseBranching klein_branching(SchwartzType t) {
  const char *key = nullptr;
  if (t == SchwartzType::Icosa_1_2_1_3_2_5) key = "klein-1";
  if (t == SchwartzType::Icosa_1_3_2_3_1_5) key = "klein-2";
  if (t == SchwartzType::Icosa_1_3_2_5_3_5) key = "klein-3";
  if (!key) return derived_klein_branching(t);
  const Covering &c = covering(key);
  const auto parts = all_branching(c);
  const ExponentDiffs e = representative(t);
  std::vector<Rational> want = {e.e0, e.e1, e.einf};
  std::sort(want.begin(), want.end());
  std::array<int, 3> ks = standard_denominators(t);
  std::sort(ks.begin(), ks.end());
  // Denominators at the three base values: the singular points of the pull-back are exactly
  // the indices not divisible by the denominator, with differences r/k.
  do {
    std::vector<Rational> got;
    for (int i = 0; i < 3; ++i)
      for (int r : parts[i])
        if (r % ks[i]) got.emplace_back(r, ks[i]);
    std::sort(got.begin(), got.end());
    if (got == want) {
      BaseBranching b;
      b.denominators = ks;
      b.partitions = parts;
      b.degree = c.degree;
      return b;
    }
  } while (std::next_permutation(ks.begin(), ks.end()));
  throw InconsistentBranching("Klein map " + c.key + " does not pull back to " + type_label(t));
}

BaseBranching darboux_branching(SchwartzType t, int e) {
  const int order = group_order(t);
  if (e < 1 || order % e) throw ParameterError("bad cyclic degree " + std::to_string(e));
  const int deg = order / e;
  const MonodromyGroup g = monodromy_group(t);
  std::string key;
  if (g == MonodromyGroup::Tetrahedral) key = "tetra" + std::to_string(deg);
  if (g == MonodromyGroup::Octahedral) key = deg == 24 ? "" : "octa" + std::to_string(deg);
  if (g == MonodromyGroup::Icosahedral) key = deg == 60 ? "" : "icosa" + std::to_string(deg);
  if (key.empty()) {
    // maximal degree: substitute x -> x^k into the minimal covering
    const Covering &c = covering(g == MonodromyGroup::Octahedral ? "octa6" : "icosa12");
    const int k = g == MonodromyGroup::Octahedral ? 4 : 5;
    return from_covering(substituted_branching(c, k), deg);
  }
  const Covering &c = covering(key);
  return from_covering(all_branching(c), c.degree);
}

std::vector<GenusRow> genus_table() {
  std::vector<GenusRow> rows;
  for (SchwartzType t : main_types()) {
    GenusRow row;
    row.type = t;
    const BaseBranching psi = klein_branching(t);
    row.klein_degree = psi.degree;
    const auto ks = standard_denominators(t);  // k <= l <= m
    const std::array<int, 4> es = {ks[2], ks[1], ks[0], 1};
    for (int j = 0; j < 4; ++j) {
      const BaseBranching phi = darboux_branching(t, es[j]);
      std::array<Partition, 3> aligned;
      std::array<bool, 3> used{};
      for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
          if (!used[k] && phi.denominators[k] == psi.denominators[i]) {
            aligned[i] = phi.partitions[k];
            used[k] = true;
            break;
          }
        }
      }
      row.genus[j] = fiber_product_genus(psi.partitions, aligned, phi.degree);
    }
    rows.push_back(row);
  }
  return rows;
}

bool SchemePoint::ordinary() const {
  const Rational lo = std::min(lambda1, lambda2), hi = std::max(lambda1, lambda2);
  return lo.is_zero() && hi == Rational(1);
}

std::vector<SchemePoint> PullbackScheme::singular() const {
  std::vector<SchemePoint> out;
  for (const auto &p : points)
    if (!p.ordinary()) out.push_back(p);
  return out;
}

PullbackScheme pullback_exponents(const RiemannScheme &s, const Covering &c) {
  PullbackScheme out;
  out.curve = c.curve;
  for (BaseValue v : kBaseValues) {
    const auto &[l1, l2] = s.exponents[static_cast<std::size_t>(index_of(v))];
    for (const auto &fp : fiber(c, v)) {
      out.points.push_back({fp.point, v, fp.index, Rational(fp.index) * l1, Rational(fp.index) * l2});
    }
  }
  return out;
}

std::vector<QDivisor> candidate_divisors(const PullbackScheme &s, const WeierstrassCurve &e, int budget) {
  if (s.curve && s.curve != &e) throw FieldMismatch("scheme lives on another curve");
  const auto sing = s.singular();
  std::vector<ClosedPoint> extra;
  for (const auto &p : listed_points(e.name)) {
    if (!order_of(e, p, 16)) continue;
    ClosedPoint c = ClosedPoint::from_point(p);
    const bool singular = std::any_of(sing.begin(), sing.end(), [&](const SchemePoint &q) { return q.point == c; });
    if (!singular) extra.push_back(c);
  }
  std::vector<QDivisor> base;
  base.emplace_back();
  for (const auto &p : sing) {
    std::vector<QDivisor> next;
    for (const auto &d : base) {
      next.push_back(d + QDivisor(p.point, p.lambda1));
      if (p.lambda2 != p.lambda1) next.push_back(d + QDivisor(p.point, p.lambda2));
    }
    base = std::move(next);
  }
  // subsets of the extra points of size <= budget
  std::vector<std::vector<int>> subsets = {{}};
  for (int size = 1; size <= budget; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::function<void(int, int)> rec = [&](int pos, int from) {
      if (pos == size) {
        subsets.push_back(idx);
        return;
      }
      for (int i = from; i < static_cast<int>(extra.size()); ++i) {
        idx[static_cast<std::size_t>(pos)] = i;
        rec(pos + 1, i + 1);
      }
    };
    rec(0, 0);
  }
  std::vector<QDivisor> out;
  for (const auto &d : base) {
    for (const auto &sub : subsets) {
      QDivisor c = d;
      for (int i : sub) c += QDivisor(extra[static_cast<std::size_t>(i)]);
      if (!c.degree().is_zero()) continue;
      if (is_principal(e, c).verdict != Verdict::True) continue;
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  return out;
}

}  // namespace darboux
