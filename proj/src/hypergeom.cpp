/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/hypergeom.hpp"

#include <algorithm>

#include "darboux/error.hpp"

namespace darboux {

namespace {

struct TypeRow {
  SchwartzType type;
  Rational a, b, c;
  MonodromyGroup group;
};

const std::vector<TypeRow> &rows() {
  using T = SchwartzType;
  using G = MonodromyGroup;
  static const std::vector<TypeRow> r = {
      {T::Tetra233, Rational(1, 2), Rational(1, 3), Rational(1, 3), G::Tetrahedral},
      {T::Tetra_1_3_1_3_2_3, Rational(1, 3), Rational(1, 3), Rational(2, 3), G::Tetrahedral},
      {T::Octa234, Rational(1, 2), Rational(1, 3), Rational(1, 4), G::Octahedral},
      {T::Octa_2_3_1_4_1_4, Rational(2, 3), Rational(1, 4), Rational(1, 4), G::Octahedral},
      {T::Icosa235, Rational(1, 2), Rational(1, 3), Rational(1, 5), G::Icosahedral},
      {T::Icosa_1_2_1_3_2_5, Rational(1, 2), Rational(1, 3), Rational(2, 5), G::Icosahedral},
      {T::Icosa_1_2_1_5_2_5, Rational(1, 2), Rational(1, 5), Rational(2, 5), G::Icosahedral},
      {T::Icosa_1_3_1_3_2_5, Rational(1, 3), Rational(1, 3), Rational(2, 5), G::Icosahedral},
      {T::Icosa_1_3_2_3_1_5, Rational(1, 3), Rational(2, 3), Rational(1, 5), G::Icosahedral},
      {T::Icosa_2_3_1_5_1_5, Rational(2, 3), Rational(1, 5), Rational(1, 5), G::Icosahedral},
      {T::Icosa_1_3_2_5_3_5, Rational(1, 3), Rational(2, 5), Rational(3, 5), G::Icosahedral},
      {T::Icosa_1_3_1_5_3_5, Rational(1, 3), Rational(1, 5), Rational(3, 5), G::Icosahedral},
      {T::Icosa_1_5_1_5_4_5, Rational(1, 5), Rational(1, 5), Rational(4, 5), G::Icosahedral},
      {T::Icosa_2_5_2_5_2_5, Rational(2, 5), Rational(2, 5), Rational(2, 5), G::Icosahedral},
  };
  return r;
}

const TypeRow *find_row(SchwartzType t) {
  for (const auto &r : rows()) {
    if (r.type == t) return &r;
  }
  return nullptr;
}

bool is_half_odd(const Rational &x) { return (x * Rational(2)).is_integer() && !x.is_integer(); }

}  // namespace

void HpgParams::validate() const {
  if (C.is_integer() && C.sign() <= 0) throw ParameterError("C = " + C.str() + " is not allowed");
}

std::string HpgParams::str() const { return "(" + A.str() + ", " + B.str() + "; " + C.str() + ")"; }

std::string ExponentDiffs::str() const { return "(" + e0.str() + ", " + e1.str() + ", " + einf.str() + ")"; }

Rational RiemannScheme::fuchs_sum() const {
  Rational s(0);
  for (const auto &[a, b] : exponents) s += a + b;
  return s;
}

const std::vector<SchwartzType> &main_types() {
  static const std::vector<SchwartzType> t = [] {
    std::vector<SchwartzType> v;
    for (const auto &r : rows()) v.push_back(r.type);
    return v;
  }();
  return t;
}

ExponentDiffs representative(SchwartzType t) {
  const TypeRow *r = find_row(t);
  if (!r) throw ParameterError("type " + type_label(t) + " has no main representative");
  return {r->a, r->b, r->c};
}

std::string type_label(SchwartzType t) {
  switch (t) {
    case SchwartzType::Cyclic: return "cyclic";
    case SchwartzType::Dihedral: return "dihedral";
    case SchwartzType::NonAlgebraic: return "non-algebraic";
    default: break;
  }
  const TypeRow *r = find_row(t);
  return "(" + r->a.str() + "," + r->b.str() + "," + r->c.str() + ")";
}

SchwartzType type_from_label(const std::string &label) {
  for (SchwartzType t : {SchwartzType::Cyclic, SchwartzType::Dihedral, SchwartzType::NonAlgebraic}) {
    if (type_label(t) == label) return t;
  }
  for (const auto &r : rows()) {
    if (type_label(r.type) == label) return r.type;
  }
  throw ParseError("unknown Schwartz type \"" + label + "\"");
}

MonodromyGroup monodromy_group(SchwartzType t) {
  switch (t) {
    case SchwartzType::Cyclic: return MonodromyGroup::Cyclic;
    case SchwartzType::Dihedral: return MonodromyGroup::Dihedral;
    case SchwartzType::NonAlgebraic: return MonodromyGroup::Infinite;
    default: return find_row(t)->group;
  }
}

int group_order(SchwartzType t) {
  switch (monodromy_group(t)) {
    case MonodromyGroup::Tetrahedral: return 12;
    case MonodromyGroup::Octahedral: return 24;
    case MonodromyGroup::Icosahedral: return 60;
    default: throw ParameterError("group order is defined for the 14 main types only");
  }
}

ExponentDiffs exponent_diffs(const HpgParams &p) { return {Rational(1) - p.C, p.C - p.A - p.B, p.A - p.B}; }

HpgParams params_from_diffs(const ExponentDiffs &e) {
  Rational s = Rational(1) - e.e0 - e.e1;
  return {(s + e.einf) / Rational(2), (s - e.einf) / Rational(2), Rational(1) - e.e0};
}

RiemannScheme riemann_scheme(const HpgParams &p) {
  return {{{{Rational(0), Rational(1) - p.C}, {Rational(0), p.C - p.A - p.B}, {p.A, p.B}}}};
}

QSeries gauss_series(const HpgParams &p, int order) {
  p.validate();
  if (order < 0) throw ParameterError("negative order");
  std::vector<Rational> c{Rational(1)};
  for (int k = 0; k < order; ++k) {
    Rational kk(k);
    c.push_back(c.back() * (p.A + kk) * (p.B + kk) / ((p.C + kk) * (kk + Rational(1))));
  }
  return QSeries(std::move(c), 0, order + 1);
}

SecondSolution second_solution_series(const HpgParams &p, int order) {
  const Rational e = Rational(1) - p.C;
  const Rational c2 = Rational(2) - p.C;
  if (c2.is_integer() && c2.sign() <= 0) throw ParameterError("2 - C = " + c2.str() + " is not allowed");
  HpgParams q{p.A + e, p.B + e, c2};
  QSeries f = gauss_series(q, order);
  const int r = static_cast<int>(e.den().get_si());
  const int v = static_cast<int>(e.num().get_si());
  QSeries lifted = f.lifted(r);
  SecondSolution out{QSeries::monomial(Rational(1), v, QSeries::kExact, r) * lifted, e.is_zero()};
  return out;
}

RationalFunction<Rational> normalized_potential(const ExponentDiffs &e) {
  using RF = RationalFunction<Rational>;
  const QPoly z = QPoly::variable(Var::Z);
  const QPoly one(Rational(1), Var::Z);
  auto sq = [](const Rational &x) { return x * x; };
  RF t1(QPoly(sq(e.e1) - Rational(1), Var::Z), QPoly(Rational(4), Var::Z) * (z - one) * (z - one));
  RF t0(QPoly(sq(e.e0) - Rational(1), Var::Z), QPoly(Rational(4), Var::Z) * z * z);
  RF t2(QPoly(Rational(1) + sq(e.einf) - sq(e.e0) - sq(e.e1), Var::Z), QPoly(Rational(4), Var::Z) * z * (z - one));
  return t1 + t0 + t2;
}

SchwartzType classify_schwartz(const ExponentDiffs &e) {
  const std::array<Rational, 3> in = e.as_array();
  std::array<int, 3> perm{0, 1, 2};
  for (const auto &row : rows()) {
    const std::array<Rational, 3> rep{row.a, row.b, row.c};
    std::sort(perm.begin(), perm.end());
    do {
      for (int signs = 0; signs < 8; ++signs) {
        mpz_class shift = 0;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          Rational u = in[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
          if (signs & (1 << i)) u = -u;
          Rational d = u - rep[static_cast<std::size_t>(i)];
          if (!d.is_integer()) ok = false;
          else shift += d.num();
        }
        if (ok && mpz_even_p(shift.get_mpz_t())) return row.type;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // Reducible equations: some signed sum is an odd integer.
  for (int signs = 0; signs < 4; ++signs) {
    Rational s = in[0] + ((signs & 1) ? -in[1] : in[1]) + ((signs & 2) ? -in[2] : in[2]);
    if (s.is_integer() && mpz_odd_p(s.num().get_mpz_t())) return SchwartzType::Cyclic;
  }
  int halves = 0;
  for (const auto &x : in) halves += is_half_odd(x) ? 1 : 0;
  if (halves >= 2) return SchwartzType::Dihedral;
  return SchwartzType::NonAlgebraic;
}

}  // namespace darboux
