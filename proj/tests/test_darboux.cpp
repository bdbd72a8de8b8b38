/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <numeric>

#include "darboux/covering.hpp"

using namespace darboux;

namespace {

Partition P(std::initializer_list<int> l) { return Partition(l); }
Partition repeat(int n, int r) { return Partition(static_cast<std::size_t>(n), r); }

ClosedPoint quartic_R() {
  return ClosedPoint::component(parse_xpoly("81*x^4+6156*x^3+4446*x^2-684*x+1"),
                                parse_xpoly("(27*x^3+1989*x^2+741*x-7)/150"));
}

// Table 1 as printed: Klein degree, then genus for deg gamma = m, l, k, 1.
struct GenusExpect {
  SchwartzType t;
  int klein;
  std::array<int, 4> g;
};
const std::vector<GenusExpect> &printed_genus() {
  static const std::vector<GenusExpect> v = {
      {SchwartzType::Tetra233, 1, {0, 0, 0, 0}},           {SchwartzType::Tetra_1_3_1_3_2_3, 2, {0, 0, 1, 1}},
      {SchwartzType::Octa234, 1, {0, 0, 0, 0}},            {SchwartzType::Octa_2_3_1_4_1_4, 2, {0, 1, 2, 3}},
      {SchwartzType::Icosa235, 1, {0, 0, 0, 0}},           {SchwartzType::Icosa_1_2_1_3_2_5, 7, {0, 0, 0, 0}},
      {SchwartzType::Icosa_1_2_1_5_2_5, 3, {0, 2, 2, 4}},  {SchwartzType::Icosa_1_3_1_3_2_5, 2, {1, 1, 3, 5}},
      {SchwartzType::Icosa_1_3_2_3_1_5, 6, {1, 1, 3, 5}},  {SchwartzType::Icosa_2_3_1_5_1_5, 2, {1, 3, 5, 9}},
      {SchwartzType::Icosa_1_3_2_5_3_5, 10, {1, 3, 5, 9}}, {SchwartzType::Icosa_1_3_1_5_3_5, 4, {1, 3, 5, 9}},
      {SchwartzType::Icosa_1_5_1_5_4_5, 6, {1, 5, 7, 13}}, {SchwartzType::Icosa_2_5_2_5_2_5, 6, {1, 5, 7, 13}},
  };
  return v;
}

}  // namespace

TEST(Registry, Keys) {
  for (const auto &k : covering_keys()) EXPECT_EQ(covering(k).key, k);
  EXPECT_THROW(covering("octa7"), ParameterError);
  EXPECT_EQ(covering("tetra4").degree, 4);
  EXPECT_EQ(covering("icosa30").degree, 30);
  EXPECT_EQ(covering("klein-1").degree, 7);
  EXPECT_EQ(covering("klein-2").degree, 6);
  EXPECT_EQ(covering("klein-3").degree, 10);
  EXPECT_TRUE(covering("phi5").elliptic());
  EXPECT_EQ(covering("phi1").map, covering("icosa12").map);
  EXPECT_THROW(genus0_covering("c", "3"), ParameterError);
}

TEST(Registry, EllipticDegreeFromDivisor) {
  for (const char *k : {"phi3", "phi4", "phi5", "phi6"}) {
    const Covering &c = covering(k);
    QDivisor d = principal_divisor(c.map);
    int zeros = 0;
    for (const auto &[p, coef] : d.terms())
      if (coef.sign() > 0) zeros += p.degree() * static_cast<int>(coef.num().get_si());
    EXPECT_EQ(zeros, c.degree) << k;
  }
}

TEST(Branching, Examples) {
  const Covering &phi1 = covering("phi1");
  EXPECT_EQ(branching_data(phi1, BaseValue::Zero), P({5, 5, 1, 1}));
  EXPECT_EQ(branching_data(phi1, BaseValue::Infinity), P({3, 3, 3, 3}));
  EXPECT_EQ(branching_data(phi1, BaseValue::One), repeat(6, 2));
  const Covering &id = covering("id");
  for (BaseValue v : kBaseValues) EXPECT_EQ(branching_data(id, v), P({1}));
  // x(x+4)^3 - 4(2x-1)^3 = (x^2-10x-2)^2
  const Covering &t4 = covering("tetra4");
  EXPECT_EQ(branching_data(t4, BaseValue::Zero), P({3, 1}));
  EXPECT_EQ(branching_data(t4, BaseValue::One), P({2, 2}));
  EXPECT_EQ(branching_data(t4, BaseValue::Infinity), P({3, 1}));
  // (x^2-6x-3)^3 - (x^2+6x-3)^3 = -36 x (x^2+3)^2, of degree 5
  EXPECT_EQ(branching_data(covering("tetra6"), BaseValue::One), P({2, 2, 1, 1}));
  // non-critical value of a user map
  Covering sq = genus0_covering("sq", "x^2");
  EXPECT_EQ(branching_data(sq, BaseValue::One), P({1, 1}));
  EXPECT_EQ(branching_data(sq, BaseValue::Infinity), P({2}));
}

TEST(Branching, EllipticFibers) {
  const Covering &phi3 = covering("phi3");
  EXPECT_EQ(branching_data(phi3, BaseValue::Zero), P({5, 5, 1, 1}));
  EXPECT_EQ(branching_data(phi3, BaseValue::One), P({3, 3, 3, 3}));
  EXPECT_EQ(branching_data(phi3, BaseValue::Infinity), P({3, 3, 3, 3}));
  EXPECT_EQ(branching_data(covering("phi6"), BaseValue::One), P({5, 5, 1, 1}));
  for (const char *k : {"phi3", "phi4", "phi5", "phi6"}) {
    const Covering &c = covering(k);
    std::vector<Partition> b;
    for (BaseValue v : kBaseValues) b.push_back(branching_data(c, v));
    EXPECT_EQ(hurwitz_genus(c.degree, 0, b), 1) << k;
  }
}

TEST(Branching, CatalogHurwitz) {
  for (const auto &k : covering_keys()) {
    const Covering &c = covering(k);
    if (c.elliptic()) continue;
    std::vector<Partition> b;
    for (BaseValue v : kBaseValues) b.push_back(branching_data(c, v));
    EXPECT_EQ(hurwitz_genus(c.degree, 0, b), 0) << k;
  }
}

TEST(Branching, Substitution) {
  const auto s = substituted_branching(covering("icosa12"), 5);
  EXPECT_EQ(s[0], repeat(12, 5));
  EXPECT_EQ(s[1], repeat(30, 2));
  EXPECT_EQ(s[2], repeat(20, 3));
  Covering big = genus0_covering("icosa60", "1728*x^5*(x^10-11*x^5-1)^5/(x^20+228*x^15+494*x^10-228*x^5+1)^3");
  EXPECT_EQ(big.degree, 60);
  for (BaseValue v : kBaseValues) EXPECT_EQ(branching_data(big, v), s[static_cast<std::size_t>(v)]);
  const auto t = substituted_branching(covering("tetra4"), 3);
  for (BaseValue v : kBaseValues) EXPECT_EQ(branching_data(covering("tetra12"), v), t[static_cast<std::size_t>(v)]);
  const auto o = substituted_branching(covering("octa6"), 4);
  EXPECT_EQ(o[0], repeat(6, 4));
  EXPECT_EQ(o[1], repeat(12, 2));
  EXPECT_EQ(o[2], repeat(8, 3));
  EXPECT_THROW(substituted_branching(covering("phi3"), 2), ParameterError);
}

TEST(Dramifico, Partitions) {
  EXPECT_EQ(dramifico_partition(12, 5), P({5, 5, 1, 1}));
  EXPECT_EQ(dramifico_partition(4, 3), P({3, 1}));
  EXPECT_EQ(dramifico_partition(6, 1), repeat(6, 1));
  EXPECT_TRUE(check_dramifico(covering("phi1"), 5));
  EXPECT_TRUE(check_dramifico(covering("tetra4"), 3));
  EXPECT_TRUE(check_dramifico(covering("tetra4"), 1));
  EXPECT_TRUE(check_dramifico(covering("icosa20"), BaseValue::Zero, 5));
}

TEST(Dramifico, StandardCoverings) {
  int agree = 0, total = 0;
  for (const auto &k : standard_covering_keys()) {
    const Covering &c = covering(k);
    std::array<Partition, 3> b;
    for (BaseValue v : kBaseValues) b[static_cast<std::size_t>(v)] = branching_data(c, v);
    const auto dens = placement(b);
    for (BaseValue v : kBaseValues) {
      const int kk = dens[static_cast<std::size_t>(v)];
      ++total;
      if (check_dramifico(c, v, kk)) ++agree;
      const auto &p = b[static_cast<std::size_t>(v)];
      EXPECT_EQ(std::accumulate(p.begin(), p.end(), 0), c.degree) << k;
    }
  }
  EXPECT_EQ(total, 27);
  // tetra6, octa12 and icosa30 carry two unramified points above the point of denominator 2
  EXPECT_EQ(agree, 24);
  EXPECT_EQ(branching_data(covering("octa12"), BaseValue::One), P({2, 2, 2, 2, 2, 1, 1}));
  EXPECT_FALSE(check_dramifico(covering("icosa30"), 2));
}

TEST(Hurwitz, Examples) {
  EXPECT_EQ(hurwitz_genus(12, 0, {P({5, 5, 1, 1}), repeat(6, 2), repeat(4, 3)}), 0);
  EXPECT_EQ(hurwitz_genus(5, 1, {}), 1);
  EXPECT_EQ(hurwitz_genus(2, 0, {P({2}), P({2}), P({2}), P({2})}), 1);
  EXPECT_THROW(hurwitz_genus(2, 0, {P({2})}), InconsistentBranching);
  EXPECT_THROW(hurwitz_genus(3, 0, {P({2})}), InconsistentBranching);
}

TEST(FiberProduct, GcdRule) {
  auto b = fiber_product_branching({P({2}), P({}), P({})}, {P({4}), P({}), P({})});
  EXPECT_EQ(b[0][0], P({2, 2}));
  b = fiber_product_branching({P({5}), P({}), P({})}, {P({3}), P({}), P({})});
  EXPECT_EQ(b[0][0], P({3}));
  // Klein degree 2 pull-back to (2/3,1/4,1/4) against the degree-6 octahedral covering
  const BaseBranching psi = klein_branching(SchwartzType::Octa_2_3_1_4_1_4);
  EXPECT_EQ(psi.degree, 2);
  const BaseBranching phi = darboux_branching(SchwartzType::Octa_2_3_1_4_1_4, 4);
  EXPECT_EQ(phi.degree, 6);
  std::array<Partition, 3> aligned;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (phi.denominators[k] == psi.denominators[i]) aligned[i] = phi.partitions[k];
  EXPECT_EQ(fiber_product_genus(psi.partitions, aligned, phi.degree), 0);
}

TEST(GenusTable, MatchesPrinted) {
  const auto rows = genus_table();
  ASSERT_EQ(rows.size(), 14u);
  const auto &want = printed_genus();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].type, want[i].t);
    EXPECT_EQ(rows[i].klein_degree, want[i].klein) << type_label(rows[i].type);
    EXPECT_EQ(rows[i].genus, want[i].g) << type_label(rows[i].type);
  }
}

TEST(GenusTable, PrintedKleinMapsMatchDerivation) {
  for (SchwartzType t : {SchwartzType::Icosa_1_2_1_3_2_5, SchwartzType::Icosa_1_3_2_3_1_5,
                         SchwartzType::Icosa_1_3_2_5_3_5}) {
    BaseBranching a = klein_branching(t), b = derived_klein_branching(t);
    EXPECT_EQ(a.degree, b.degree);
    // same multiset of (denominator, partition)
    std::vector<std::pair<int, Partition>> x, y;
    for (int i = 0; i < 3; ++i) {
      x.emplace_back(a.denominators[i], a.partitions[i]);
      y.emplace_back(b.denominators[i], b.partitions[i]);
    }
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    EXPECT_EQ(x, y) << type_label(t);
  }
}

TEST(Pullback, Phi3Schemes) {
  const Covering &phi3 = covering("phi3");
  const ClosedPoint R = quartic_R();
  PullbackScheme s = pullback_exponents(riemann_scheme({Rational(3, 10), Rational(-1, 30), Rational(3, 5)}), phi3);
  bool seen = false;
  for (const auto &p : s.points) {
    if (p.point == R) {
      seen = true;
      EXPECT_EQ(p.index, 3);
      EXPECT_EQ(std::min(p.lambda1, p.lambda2), Rational(-1, 10));
      EXPECT_EQ(std::max(p.lambda1, p.lambda2), Rational(9, 10));
    }
  }
  EXPECT_TRUE(seen);
  // O, (0,0), the degree-2 point of index 5 and R; the other fiber above 1 is ordinary
  EXPECT_EQ(s.singular().size(), 4u);
  PullbackScheme s2 = pullback_exponents(riemann_scheme({Rational(-1, 10), Rational(17, 30), Rational(4, 5)}), phi3);
  for (const auto &p : s2.points) {
    if (p.point == R) {
      EXPECT_EQ(std::min(p.lambda1, p.lambda2), Rational(-3, 10));
      EXPECT_EQ(std::max(p.lambda1, p.lambda2), Rational(17, 10));
    }
  }
  EXPECT_EQ(s2.singular().size(), 3u);
}

TEST(Pullback, Identity) {
  const RiemannScheme rs = riemann_scheme({Rational(1, 4), Rational(-1, 12), Rational(2, 3)});
  PullbackScheme s = pullback_exponents(rs, covering("id"));
  ASSERT_EQ(s.points.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(s.points[static_cast<std::size_t>(i)].index, 1);
    EXPECT_EQ(s.points[static_cast<std::size_t>(i)].lambda1, rs.exponents[static_cast<std::size_t>(i)].first);
    EXPECT_EQ(s.points[static_cast<std::size_t>(i)].lambda2, rs.exponents[static_cast<std::size_t>(i)].second);
  }
}

TEST(Candidates, Phi3) {
  const Covering &phi3 = covering("phi3");
  const ClosedPoint R = quartic_R(), O = ClosedPoint::infinity(), base = ClosedPoint::rational(Rational(0), Rational(0));
  auto s = pullback_exponents(riemann_scheme({Rational(3, 10), Rational(-1, 30), Rational(3, 5)}), phi3);
  auto c = candidate_divisors(s, *phi3.curve, 0);
  ASSERT_EQ(c.size(), 2u);
  const QDivisor a = QDivisor(O, Rational(2, 5)) + QDivisor(R, Rational(-1, 10));
  const QDivisor b = QDivisor(base, Rational(2, 5)) + QDivisor(R, Rational(-1, 10));
  EXPECT_TRUE(std::find(c.begin(), c.end(), a) != c.end());
  EXPECT_TRUE(std::find(c.begin(), c.end(), b) != c.end());
  EXPECT_EQ(candidate_divisors(s, *phi3.curve, 1).size(), 2u);

  auto s2 = pullback_exponents(riemann_scheme({Rational(-1, 10), Rational(17, 30), Rational(4, 5)}), phi3);
  auto c2 = candidate_divisors(s2, *phi3.curve, 1);
  EXPECT_EQ(c2.size(), 8u);
  EXPECT_TRUE(candidate_divisors(s2, *phi3.curve, 0).empty());
  for (const auto &d : c2) EXPECT_TRUE(d.degree().is_zero());
}

TEST(Candidates, NoSingularPoints) {
  PullbackScheme s;
  s.curve = &curve("E3");
  auto c = candidate_divisors(s, curve("E3"), 0);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c[0].is_zero());
  EXPECT_THROW(candidate_divisors(s, curve("E4"), 0), FieldMismatch);
}

TEST(Identities, Phi3Forms) {
  const WeierstrassCurve *e = &curve("E3");
  const CurveFunction phi3 = covering("phi3").map;
  const CurveFunction alt = CurveFunction::parse(
      e, "2/(1+(9*x^2+1)*(81*x^4-14094*x^3-90054*x^2+1566*x+1)/(72*xi*(9*x^2-33*x-1)^2))");
  EXPECT_EQ(phi3, alt);
  const CurveFunction one_minus = CurveFunction::parse(
      e, "(1-21*xi-117*x-9*x*xi-234*x^2)^3*(1-9*xi+54*x)/((1+21*xi-117*x+9*x*xi-234*x^2)^3*(1+9*xi+54*x))");
  EXPECT_EQ(CurveFunction::constant(e, Rational(1)) - phi3, one_minus);
  // divisor 3 R~ - 3 R
  EXPECT_EQ(principal_divisor(one_minus), QDivisor(quartic_R().negated(), Rational(3)) - QDivisor(quartic_R(), Rational(3)));
  // divisor (0,0) + O + 5 P - 3 R with P the conjugate pair of roots of 9x^2 - 33x - 1
  const QDivisor d = principal_divisor(phi3);
  const QDivisor want = QDivisor(ClosedPoint::rational(Rational(0), Rational(0))) + QDivisor(ClosedPoint::infinity()) +
                        QDivisor(ClosedPoint::component(parse_xpoly("9*x^2-33*x-1"), QPoly(Var::X)), Rational(5)) -
                        QDivisor(quartic_R(), Rational(3));
  EXPECT_EQ(d, want);
}

TEST(Identities, Phi6Divisor) {
  const QDivisor d = principal_divisor(covering("phi6").map);
  const auto q = ClosedPoint::conjugate_pair(
      KPoint::affine(QuadraticNumber(Rational(-2), Rational(1), 5), QuadraticNumber(Rational(-5), Rational(2), 5)));
  const QDivisor want = QDivisor(ClosedPoint::rational(Rational(0), Rational(0))) + QDivisor(ClosedPoint::infinity()) +
                        QDivisor(ClosedPoint::component(parse_xpoly("x^2-x-1"), QPoly(Var::X)), Rational(5)) -
                        QDivisor(ClosedPoint::rational(Rational(1), Rational(1))) -
                        QDivisor(ClosedPoint::rational(Rational(-1), Rational(1))) - QDivisor(q, Rational(5));
  EXPECT_EQ(d, want);
}
