/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <random>

#include "darboux/contiguous.hpp"

using namespace darboux;

namespace {

QRatFunc cst(const Rational &c) { return QRatFunc(QPoly(c, Var::Z)); }

bool generic(const HpgParams &p) { return !p.A.is_integer() && !p.B.is_integer() && !p.C.is_integer(); }

const HpgParams kTetra{Rational(1, 4), Rational(-1, 12), Rational(2, 3)};

// Coefficients of the target series agree with the basis combination.
void expect_matches(const HpgParams &p, const ShiftVector &s, int order) {
  BasisExpression e = express_in_basis(p, s);
  HpgParams t{p.A + Rational(s.k), p.B + Rational(s.l), p.C + Rational(s.m)};
  QSeries lhs = gauss_series(t, order);
  QSeries rhs = basis_series(e, p, order);
  auto bad = QSeries::first_mismatch(lhs, rhs);
  EXPECT_FALSE(bad.has_value()) << "shift " << s.k << "," << s.l << "," << s.m << " at index " << *bad;
}

}  // namespace

TEST(Relations, BUp) {
  BasisExpression e = relation_b_up(kTetra);
  EXPECT_EQ(e.p, cst(Rational(4)));
  EXPECT_EQ(e.q, cst(Rational(-3)));
  BasisExpression sym = relation_b_up({Rational(2, 7), Rational(2, 7), Rational(1, 3)});
  EXPECT_TRUE(sym.p.is_zero());
  EXPECT_EQ(sym.q, cst(Rational(1)));
  EXPECT_THROW(relation_b_up({Rational(1, 3), Rational(0), Rational(1, 2)}), DegeneratePathError);
  expect_matches(kTetra, {0, 1, 0}, 12);
}

TEST(Relations, CDown) {
  BasisExpression zero = relation_c_down({Rational(0), Rational(1, 3), Rational(3, 7)});
  EXPECT_TRUE(zero.q.is_zero());
  EXPECT_EQ(zero.p + zero.q, cst(Rational(1)));
  HpgParams p{Rational(1, 4), Rational(-1, 12), Rational(5, 3)};
  BasisExpression e = relation_c_down(p);
  EXPECT_EQ(e.p, cst(Rational(5, 8)));  // (C-A-1)/(C-1) = (5/12)/(2/3)
  EXPECT_EQ(e.q, cst(Rational(3, 8)));
  EXPECT_THROW(relation_c_down({Rational(1, 3), Rational(1, 5), Rational(1)}), DegeneratePathError);
  expect_matches(p, {0, 0, -1}, 12);
}

TEST(Relations, ADown) {
  BasisExpression e = relation_a_down(kTetra);
  Rational p0 = e.p(Rational(0)), q0 = e.q(Rational(0));
  EXPECT_EQ(p0 + q0, Rational(1));
  // 2A - C = -1/6, C - A = 5/12
  EXPECT_EQ(p0, Rational(2, 5));
  EXPECT_EQ(q0, Rational(3, 5));
  EXPECT_THROW(relation_a_down({Rational(1, 3), Rational(1, 5), Rational(1, 3)}), DegeneratePathError);
  expect_matches(kTetra, {-1, 0, 0}, 12);
}

TEST(ExpressInBasis, Trivial) {
  BasisExpression id = express_in_basis(kTetra, {0, 0, 0});
  EXPECT_EQ(id.p, cst(Rational(1)));
  EXPECT_TRUE(id.q.is_zero());
  BasisExpression up = express_in_basis(kTetra, {1, 0, 0});
  EXPECT_TRUE(up.p.is_zero());
  EXPECT_EQ(up.q, cst(Rational(1)));
  HpgParams g{Rational(2, 7), Rational(3, 11), Rational(5, 13)};
  BasisExpression b = express_in_basis(g, {0, 1, 0});
  EXPECT_EQ(b.p, cst((g.B - g.A) / g.B));
  EXPECT_EQ(b.q, cst(g.A / g.B));
}

TEST(ExpressInBasis, DegeneratePathNamesStep) {
  try {
    express_in_basis({Rational(1, 3), Rational(-1), Rational(1, 2)}, {0, 2, 0});
    FAIL();
  } catch (const DegeneratePathError &e) {
    EXPECT_NE(std::string(e.what()).find("b-up"), std::string::npos);
  }
  // A = -2 stalls at A = -1 going up; the exchanged path walks B instead.
  const HpgParams p{Rational(-2), Rational(1, 3), Rational(1, 2)};
  EXPECT_THROW(express_in_basis(p, {2, 0, 0}), DegeneratePathError);
  BasisExpression s = express_in_basis_symmetric(p, {2, 0, 0});
  QSeries lhs = gauss_series({Rational(0), Rational(1, 3), Rational(1, 2)}, 10);
  EXPECT_FALSE(QSeries::first_mismatch(lhs, basis_series(s, p, 10)));
}

TEST(ExpressInBasis, RandomShiftsMatchSeries) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-40, 40), sh(-4, 4);
  const int dens[] = {7, 11, 13, 17};
  int checked = 0;
  while (checked < 50) {
    HpgParams p{Rational(num(rng), dens[checked % 4]), Rational(num(rng), 19), Rational(2 * num(rng) + 1, 23)};
    if (!generic(p)) continue;
    ShiftVector s{sh(rng), sh(rng), sh(rng)};
    expect_matches(p, s, 15);
    BasisExpression e = express_in_basis(p, s);
    // Upward C steps bring poles at z = 0; the value check applies to regular coefficients.
    if (!e.p.den().coeff(0).is_zero() && !e.q.den().coeff(0).is_zero()) {
      EXPECT_EQ(e.p(Rational(0)) + e.q(Rational(0)), Rational(1));
    }
    ++checked;
  }
}

TEST(ExpressInBasis, CompositionCoherence) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> num(-40, 40), sh(-2, 2);
  for (int i = 0; i < 15; ++i) {
    HpgParams p{Rational(num(rng), 7), Rational(num(rng), 19), Rational(2 * num(rng) + 1, 23)};
    if (!generic(p)) continue;
    ShiftVector s1{sh(rng), sh(rng), sh(rng)}, s2{sh(rng), sh(rng), sh(rng)};
    BasisExpression e1 = express_in_basis(p, s1);
    BasisExpression e1a = express_in_basis(p, {s1.k + 1, s1.l, s1.m});
    HpgParams mid{p.A + Rational(s1.k), p.B + Rational(s1.l), p.C + Rational(s1.m)};
    BasisExpression e2 = express_in_basis(mid, s2);
    BasisExpression direct = express_in_basis(p, {s1.k + s2.k, s1.l + s2.l, s1.m + s2.m});
    EXPECT_EQ(e2.p * e1.p + e2.q * e1a.p, direct.p);
    EXPECT_EQ(e2.p * e1.q + e2.q * e1a.q, direct.q);
  }
}

TEST(Derivative, Examples) {
  BasisExpression zero = derivative_as_contiguous({Rational(0), Rational(1, 3), Rational(1, 2)});
  EXPECT_TRUE(zero.p.is_zero());
  EXPECT_TRUE(zero.q.is_zero());
  for (const HpgParams &p : {HpgParams{Rational(1), Rational(1), Rational(2)}, kTetra}) {
    BasisExpression d = derivative_as_contiguous(p);
    QSeries f = gauss_series(p, 13);
    QSeries lhs = f.derivative().truncated(12);
    EXPECT_FALSE(QSeries::first_mismatch(lhs, basis_series(d, p, 11)).has_value());
  }
  // Agrees with routing (AB/C) F(A+1,B+1;C+1) through the basis.
  BasisExpression routed = express_in_basis(kTetra, {1, 1, 1});
  const Rational f = kTetra.A * kTetra.B / kTetra.C;
  BasisExpression d = derivative_as_contiguous(kTetra);
  EXPECT_EQ(d.p, cst(f) * routed.p);
  EXPECT_EQ(d.q, cst(f) * routed.q);
}
