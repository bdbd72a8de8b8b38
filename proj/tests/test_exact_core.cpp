/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <random>

#include "darboux/factor.hpp"
#include "darboux/parse.hpp"
#include "darboux/ratfunc.hpp"
#include "darboux/series.hpp"

using namespace darboux;

namespace {

QPoly X() { return QPoly::variable(); }
QPoly C(long c) { return QPoly(Rational(c)); }

// Generalized binomial coefficient (q choose k).
Rational binom(const Rational &q, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * (q - Rational(i)) / Rational(i + 1);
  return r;
}

Rational poch(const Rational &a, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= a + Rational(i);
  return r;
}

QSeries random_series(std::mt19937 &rng, int order) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Rational> c{Rational(1)};
  for (int i = 1; i < order; ++i) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
  return QSeries(c, 0, order);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("+7").str(), "7");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rational, Roots) {
  EXPECT_EQ(*Rational(27, 8).root(3), Rational(3, 2));
  EXPECT_EQ(*Rational(-27, 8).root(3), Rational(-3, 2));
  EXPECT_FALSE(Rational(2).root(2).has_value());
  EXPECT_FALSE(Rational(-4).root(2).has_value());
}

TEST(Quadratic, NormIsMultiplicative) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (long disc : {5L, -3L, 2L, 21L}) {
    for (int i = 0; i < 50; ++i) {
      QuadraticNumber a(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng)), disc);
      QuadraticNumber b(Rational(d(rng)), Rational(d(rng), 1 + std::abs(d(rng))), disc);
      EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
      EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    }
  }
}

TEST(Quadratic, FieldsDoNotMix) {
  QuadraticNumber s5 = QuadraticNumber::sqrt_of(5), s2 = QuadraticNumber::sqrt_of(2);
  EXPECT_THROW(s5 + s2, FieldMismatch);
  EXPECT_EQ(s5 * s5, QuadraticNumber(Rational(5)));
  EXPECT_FALSE(QuadraticNumber(Rational(5)).root(2).has_value());
  auto r5 = QuadraticNumber(Rational(5), Rational(0), 5).root(2);
  ASSERT_TRUE(r5.has_value());
  EXPECT_EQ(*r5 * *r5, QuadraticNumber(Rational(5)));
  auto r = QuadraticNumber(Rational(6), Rational(2), 5).root(2);  // (1 + sqrt5)^2
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, QuadraticNumber(Rational(6), Rational(2), 5));
}

TEST(Polynomial, GcdExamples) {
  QPoly x = X();
  EXPECT_EQ(poly_gcd(x * x - C(1), x * x - C(2) * x + C(1)), x - C(1));
  QPoly f = C(3) * x * x + C(6);
  EXPECT_EQ(poly_gcd(f, QPoly()), f.monic());
  EXPECT_TRUE(poly_gcd(QPoly(), QPoly()).is_zero());
  // Numerator and denominator of the degree-12 icosahedral covering.
  QPoly num = C(1728) * x * (x * x - C(11) * x - C(1)).pow(5);
  QPoly den = parse_xpoly("x^4+228*x^3+494*x^2-228*x+1").pow(3);
  EXPECT_EQ(poly_gcd(num, den), C(1));
}

TEST(Polynomial, RingAxioms) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-5, 5), deg(0, 6);
  auto rnd = [&] {
    std::vector<Rational> c;
    int n = deg(rng);
    for (int i = 0; i <= n; ++i) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
    return QPoly(c);
  };
  for (int i = 0; i < 100; ++i) {
    QPoly a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    if (!b.is_zero()) {
      auto [q, r] = a.divmod(b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(Polynomial, VariablesDoNotMix) {
  EXPECT_THROW(QPoly::variable(Var::X) + QPoly::variable(Var::Z), FieldMismatch);
}

TEST(RationalFunction, ReducedForm) {
  QPoly x = X();
  QRatFunc f(x * x - C(1), C(2) * x - C(2));
  EXPECT_EQ(f.num(), C(1) / C(2) * (x + C(1)));
  EXPECT_EQ(f.den(), C(1));
  QRatFunc g(x, x + C(1));
  EXPECT_EQ(g - g, QRatFunc(Rational(0)));
  EXPECT_EQ(g * g.inverse(), QRatFunc(Rational(1)));
  EXPECT_EQ(g.compose(QRatFunc(x + C(1))), QRatFunc(x + C(1), x + C(2)));
}

TEST(Series, PowBinomial) {
  QSeries s = QSeries::from_poly(C(1) - C(2) * X(), 1, 12);
  QSeries p = s.pow(Rational(-1, 4));
  for (int k = 0; k < 12; ++k) {
    EXPECT_EQ(p.coeff(k), binom(Rational(-1, 4), k) * Rational(-2).pow(k));
  }
  EXPECT_EQ(p.coeff(1), Rational(1, 2));
  EXPECT_EQ(p.coeff(2), Rational(5, 8));
  EXPECT_EQ(p.precision(), 12);
}

TEST(Series, PowEdgeCases) {
  QSeries s = QSeries::from_poly(C(1) - C(2) * X(), 1, 8);
  EXPECT_EQ(s.pow(Rational(0)), QSeries::constant(Rational(1)));
  QSeries t2 = QSeries::monomial(Rational(1), 2, 10, 2);  // s^2 with s = x^(1/2)
  QSeries root = t2.pow(Rational(1, 2));
  EXPECT_EQ(root.valuation(), 1);
  EXPECT_EQ(root.ramification(), 2);
  EXPECT_EQ(root.leading(), Rational(1));
  QSeries x2 = QSeries::monomial(Rational(1), 2, 10);
  EXPECT_EQ(x2.pow(Rational(1, 2)), QSeries::monomial(Rational(1), 1, 5));
  QSeries two = QSeries::from_poly(C(2) + X(), 1, 6);
  EXPECT_THROW(two.pow(Rational(1, 2)), FieldExtensionNeeded);
  EXPECT_EQ(QSeries::from_poly(X(), 1, 5).pow(Rational(1, 3)).ramification(), 3);
}

TEST(Series, RamifiedPow) {
  QSeries x = QSeries::monomial(Rational(4), 1, 9);
  QSeries r = x.pow(Rational(1, 2));
  EXPECT_EQ(r.ramification(), 2);
  EXPECT_EQ(r.valuation(), 1);
  EXPECT_EQ(r.leading(), Rational(2));
}

TEST(Series, ComposeExamples) {
  QSeries u1 = QSeries::from_poly(C(1) + X());
  QSeries t2 = QSeries::monomial(Rational(1), 2, 10);
  EXPECT_EQ(QSeries::compose(u1, t2), QSeries::from_poly(C(1) + X() * X(), 1, 10));

  std::vector<Rational> geo(12, Rational(1));
  QSeries g(geo, 0, 12);
  QSeries two_t = QSeries::monomial(Rational(2), 1);
  QSeries r = QSeries::compose(g, two_t);
  ASSERT_EQ(r.precision(), 12);
  for (int k = 0; k < 12; ++k) EXPECT_EQ(r.coeff(k), Rational(2).pow(k));

  // 2F1(1/4,-1/12;2/3;u) against the degree-4 tetrahedral covering.
  const Rational a(1, 4), b(-1, 12), c(2, 3);
  std::vector<Rational> h;
  for (int k = 0; k < 6; ++k) h.push_back(poch(a, k) * poch(b, k) / (poch(c, k) * poch(Rational(1), k)));
  QSeries hs(h, 0, 6);
  QSeries num = QSeries::from_poly(X() * (X() + C(4)).pow(3), 1, 6);
  QSeries den = QSeries::from_poly(C(4) * (C(2) * X() - C(1)).pow(3), 1, 6);
  QSeries phi = num * den.inverse();
  EXPECT_EQ(phi.coeff(1), Rational(-16));
  EXPECT_EQ(phi.coeff(2), Rational(-108));
  QSeries lhs = QSeries::compose(hs, phi);
  QSeries rhs = QSeries::from_poly(C(1) - C(2) * X(), 1, 6).pow(Rational(-1, 4));
  EXPECT_EQ(lhs.coeff(1), Rational(1, 2));
  EXPECT_EQ(lhs.coeff(2), Rational(5, 8));
  EXPECT_FALSE(QSeries::first_mismatch(lhs, rhs).has_value());
}

TEST(Series, ComposeDivergence) {
  QSeries u1 = QSeries::from_poly(C(1) + X());
  EXPECT_THROW(QSeries::compose(u1, QSeries::from_poly(C(1) + X(), 1, 5)), CompositionDivergence);
}

TEST(Series, MixedPrecision) {
  QSeries a = QSeries::from_poly(C(1) + X(), 1, 5);
  QSeries b = QSeries::from_poly(C(1) - X(), 1, 9);
  EXPECT_EQ((a + b).precision(), 5);
  EXPECT_EQ((a * b).precision(), 5);
  EXPECT_EQ((QSeries::monomial(Rational(1), 3, 5) * b).precision(), 5);
  EXPECT_EQ((QSeries::monomial(Rational(1), 3) * b).precision(), 12);
}

TEST(SeriesProperty, PowerLaws) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int i = 0; i < 20; ++i) {
    QSeries s = random_series(rng, 20);
    Rational p(d(rng), 1 + std::abs(d(rng)) % 4), q(d(rng), 1 + std::abs(d(rng)) % 5);
    EXPECT_EQ(s.pow(p).pow(q), s.pow(p * q));
    EXPECT_EQ(s * s.inverse(), QSeries::constant(Rational(1), 20));
    EXPECT_EQ(QSeries::compose(s, QSeries::monomial(Rational(1), 1)), s);
  }
}

TEST(Factor, SquarefreeAndIrreducible) {
  QPoly x = X();
  auto sq = squarefree_decomposition((x - C(1)).pow(3) * (x + C(2)) * (x * x + C(1)).pow(2));
  ASSERT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq[0].first, x + C(2));
  EXPECT_EQ(sq[1].first, x * x + C(1));
  EXPECT_EQ(sq[2].second, 3);
  auto f = factor(C(2) * (x.pow(4) - C(1)));
  EXPECT_EQ(f.unit, Rational(2));
  EXPECT_EQ(f.factors.size(), 3u);
  EXPECT_TRUE(is_irreducible(parse_xpoly("81*x^4+6156*x^3+4446*x^2-684*x+1")));
  EXPECT_TRUE(is_irreducible(parse_xpoly("x^4+228*x^3+494*x^2-228*x+1")));
  EXPECT_FALSE(is_irreducible(parse_xpoly("x^4-5*x^2+6")));
}

TEST(Factor, RecoversRandomProducts) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int i = 0; i < 15; ++i) {
    std::vector<QPoly> parts{X() * X() + C(d(rng)) * X() + C(2 * d(rng) + 1), C(3) * X() - C(d(rng)),
                             X().pow(3) + C(d(rng)) * X() + C(7), C(d(rng) | 1) * X() + C(5)};
    QPoly prod = C(1);
    for (auto &p : parts) prod = prod * p;
    auto fz = factor(prod);
    QPoly back = QPoly(fz.unit);
    for (auto &[g, m] : fz.factors) {
      EXPECT_TRUE(is_irreducible(g));
      back = back * g.pow(static_cast<unsigned>(m));
    }
    EXPECT_EQ(back, prod);
  }
}

TEST(Factor, Charpoly) {
  std::vector<std::vector<Rational>> m{{Rational(2), Rational(1)}, {Rational(1), Rational(2)}};
  EXPECT_EQ(charpoly(m), X() * X() - C(4) * X() + C(3));
}

TEST(Parse, RoundTrip) {
  for (const char *s : {"1+21*xi-117*x+9*x*xi-234*x^2", "1-3/5*xi-34/5*x", "x^2/11-1", "-(xi+5*x)^2",
                        "1+50*x-125*xi^2+450*x*xi-500*x^2", "0", "x*(x+4)^3"}) {
    BiPoly p = parse_bipoly(s);
    std::string printed = p.str();
    EXPECT_EQ(parse_bipoly(printed), p) << s;
    EXPECT_EQ(parse_bipoly(printed).str(), printed);
  }
  EXPECT_THROW(parse_bipoly("1+y"), ParseError);
  EXPECT_THROW(parse_bipoly("x/(1+x)"), ParseError);
  EXPECT_THROW(parse_bipoly("(1+x"), ParseError);
  auto [n, d] = parse_fraction("x*(x+4)^3/(4*(2*x-1)^3)");
  EXPECT_EQ(d.xi_coeff(0), C(4) * (C(2) * X() - C(1)).pow(3));
  EXPECT_EQ(n.xi_coeff(0), X() * (X() + C(4)).pow(3));
}
