/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "darboux/evaluations.hpp"

using namespace darboux;

namespace {

const Catalog &cat() { return shipped_catalog(); }

CurveFunction genus0(const char *s) { return CurveFunction::parse(nullptr, s); }

// Records grouped by Schwartz type in catalog order.
std::map<SchwartzType, std::vector<const EvaluationRecord *>> by_type() {
  std::map<SchwartzType, std::vector<const EvaluationRecord *>> out;
  for (const auto &r : cat().records()) out[r.schwartz_type()].push_back(&r);
  return out;
}

bool shift_is_integral(const HpgParams &a, const HpgParams &b) {
  return (a.A - b.A).is_integer() && (a.B - b.B).is_integer() && (a.C - b.C).is_integer();
}

}  // namespace

TEST(Catalog, Shipped) {
  ASSERT_EQ(cat().size(), 56u);
  std::map<MonodromyGroup, int> groups;
  for (const auto &r : cat().records()) ++groups[monodromy_group(r.schwartz_type())];
  EXPECT_EQ(groups[MonodromyGroup::Tetrahedral], 8);
  EXPECT_EQ(groups[MonodromyGroup::Octahedral], 8);
  EXPECT_EQ(groups[MonodromyGroup::Icosahedral], 40);
  EXPECT_EQ(by_type().size(), 14u);
  const EvaluationRecord &r = cat().at("fptetra1");
  EXPECT_EQ(r.covering, "tetra4");
  EXPECT_EQ(r.rhs.factors.size(), 1u);
  EXPECT_EQ(r.rhs.factors[0].exp, Rational(-1, 4));
  EXPECT_EQ(cat().find("nope"), nullptr);
}

TEST(Catalog, RoundTrip) {
  const std::string text = cat().dump();
  Catalog again = Catalog::parse(text);
  EXPECT_EQ(again.records(), cat().records());
  EXPECT_EQ(again.dump(), text);
  EXPECT_EQ(cat().without("fptetra1").size(), 55u);
  EXPECT_THROW(cat().at("nope"), ParameterError);
}

TEST(Catalog, Errors) {
  EXPECT_THROW(Catalog::parse("{"), ParseError);
  EXPECT_THROW(Catalog::parse("{}"), ParseError);
  const std::string rec =
      R"({"id":"a","type":["1/2","1/3","1/3"],"params":["1/4","-1/12","2/3"],"covering":"tetra4",)"
      R"("rhs":{"constant":"1","factors":[{"poly":"1-2*x","exp":"-1/4"}]}})";
  EXPECT_EQ(Catalog::parse(R"({"records":[)" + rec + "]}").size(), 1u);
  EXPECT_THROW(Catalog::parse(R"({"records":[)" + rec + "," + rec + "]}"), ParameterError);
  std::string wrong_type = rec;
  wrong_type.replace(wrong_type.find("1/3\",\"1/3"), 9, "1/3\",\"1/4");
  EXPECT_THROW(Catalog::parse(R"({"records":[)" + wrong_type + "]}"), ClassificationError);
  std::string decimal = rec;
  decimal.replace(decimal.find("\"-1/4\""), 6, "-0.25");
  EXPECT_THROW(Catalog::parse(R"({"records":[)" + decimal + "]}"), ParseError);
  std::string missing = rec;
  missing.replace(missing.find("\"covering\""), 10, "\"cover\"");
  EXPECT_THROW(Catalog::parse(R"({"records":[)" + missing + "]}"), ParseError);
}

TEST(Verify, AllRecordsOrder25) {
  for (const auto &rep : verify_all(cat(), 25)) {
    EXPECT_TRUE(rep.ok()) << rep.id << " mismatch at " << rep.mismatch_index.value_or(-1) << " " << rep.error;
    EXPECT_EQ(rep.order, 25);
  }
}

TEST(Verify, Fptetra1LowOrder) {
  const EvaluationRecord &r = cat().at("fptetra1");
  QSeries rhs = expand_at_base(r.rhs_function(), 2);
  EXPECT_EQ(rhs.coeff(0), Rational(1));
  EXPECT_EQ(rhs.coeff(1), Rational(1, 2));
  EXPECT_EQ(rhs.coeff(2), Rational(5, 8));
  QSeries lhs = QSeries::compose(gauss_series(r.params, 2), expand_at_base(covering("tetra4").map, 2));
  EXPECT_FALSE(QSeries::first_mismatch(lhs.truncated(3), rhs).has_value());
  EXPECT_TRUE(verify(r, 2).ok());
}

TEST(Verify, OrderZeroAndMutation) {
  for (const auto &rep : verify_all(cat(), 0)) EXPECT_TRUE(rep.ok()) << rep.id;
  EvaluationRecord bad = cat().at("fptetra1");
  bad.rhs.factors[0].exp = Rational(-1, 2);
  VerificationReport rep = verify(bad, 25);
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.mismatch_index, 1);
  EXPECT_THROW(verify(bad, -1), ParameterError);
}

TEST(Verify, BasePoint) {
  const Covering shifted = genus0_covering("shifted", "1+x");
  EXPECT_THROW(verify(cat().at("fptetra1"), shifted, 4), BasePointError);
}

TEST(Verify, ParallelMatchesSerial) {
  Catalog small = cat().without("icoselliptz");
  auto a = verify_all(small, 12, 1), b = verify_all(small, 12, 4);
  ASSERT_EQ(a.size(), 55u);
  ASSERT_EQ(b.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, small.records()[i].id);
    EXPECT_EQ(b[i].id, a[i].id);
    EXPECT_EQ(b[i].ok(), a[i].ok());
  }
}

TEST(Verify, BranchOfIcoselliptm3) {
  // (xi + 5x)/xi at the base point: both factors vanish, the quotient is expanded as one series.
  const EvaluationRecord &r = cat().at("icoselliptm3");
  EXPECT_TRUE(verify(r, 25).ok());
  QSeries q = expand_at_base(CurveFunction::parse(&curve("E3"), "(xi+5*x)/xi"), 4);
  EXPECT_EQ(q.coeff(0), Rational(1));
  EXPECT_EQ(q.coeff(1), Rational(5));
}

TEST(Derive, PrintedRatios) {
  const EvaluationRecord &base = cat().at("fptetra1");
  EXPECT_EQ(contiguous_ratio(cat().at("fptetra1a").params, base), genus0("(1+x)/(1+x/4)^2"));
  EvaluationRecord d = derive_contiguous(cat().at("fptetra1a").params, base);
  EXPECT_TRUE(verify(d, 25).ok());
  EXPECT_EQ(derive_contiguous(base.params, base), base);
  // fptetra1z is contiguous to fptetra1b; its quotient by fptetra1 is still rational.
  EXPECT_THROW(derive_contiguous(cat().at("fptetra1z").params, base), ParameterError);
  const EvaluationRecord &b = cat().at("fptetra1b"), &z = cat().at("fptetra1z");
  EXPECT_EQ(contiguous_ratio(z.params, b), genus0("(1+5/2*x)*(1+x/4)/(1-2*x)^2"));
  QDivisor q = radical_divisor(z.rhs_function()) - radical_divisor(base.rhs_function());
  EXPECT_EQ(q, principal_divisor(genus0("(1+5/2*x)/(1-2*x)")));
}

TEST(Derive, Errors) {
  const EvaluationRecord &base = cat().at("fptetra1");
  EXPECT_THROW(derive_contiguous(cat().at("fpocta1").params, base), ClassificationError);
  HpgParams half = base.params;
  half.A += Rational(1, 2);
  half.B += Rational(1, 2);
  EXPECT_THROW(derive_contiguous(half, base), Error);
  HpgParams neg = base.params;
  neg.C = Rational(-1, 3);
  EXPECT_NO_THROW(derive_contiguous(neg, base));
}

TEST(Derive, Companions) {
  // Within each type: the second record from the first, the fourth from the third.
  int regenerated = 0;
  for (const auto &[type, recs] : by_type()) {
    ASSERT_EQ(recs.size(), 4u);
    for (std::size_t i : {0u, 2u}) {
      const EvaluationRecord &base = *recs[i], &other = *recs[i + 1];
      ASSERT_TRUE(shift_is_integral(other.params, base.params)) << other.id;
      const CurveFunction ratio = contiguous_ratio(other.params, base);
      EXPECT_TRUE(principal_divisor(ratio).is_integral()) << other.id;
      EvaluationRecord d = derive_contiguous(other.params, base);
      EXPECT_TRUE(verify(d, 15).ok()) << other.id;
      // same function as the shipped record
      EXPECT_EQ(radical_divisor(d.rhs_function()), radical_divisor(other.rhs_function())) << other.id;
      EXPECT_TRUE((radical_divisor(other.rhs_function()) - radical_divisor(base.rhs_function())).is_integral());
      ++regenerated;
    }
  }
  EXPECT_EQ(regenerated, 28);
}

TEST(Derive, RandomTargets) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> step(-2, 2);
  for (const auto &[type, recs] : by_type()) {
    const EvaluationRecord &base = *recs.front();
    int done = 0, tries = 0;
    while (done < 20 && tries < 400) {
      ++tries;
      HpgParams t{base.params.A + step(rng), base.params.B + step(rng), base.params.C + step(rng)};
      if (t == base.params) continue;
      if (t.C.is_integer() && t.C <= Rational(0)) continue;
      try {
        EvaluationRecord d = derive_contiguous(t, base);
        EXPECT_TRUE(verify(d, 15).ok()) << d.id;
        ++done;
      } catch (const DegeneratePathError &) {
      }
    }
    EXPECT_EQ(done, 20) << base.id;
  }
}

TEST(Property, RadicalDivisorMatchesScheme) {
  for (const auto &r : cat().records()) {
    const Covering &c = covering(r.covering);
    const QDivisor d = radical_divisor(r.rhs_function());
    for (const auto &p : pullback_exponents(riemann_scheme(r.params), c).singular()) {
      const Rational a = d.coefficient(p.point);
      EXPECT_TRUE((a - p.lambda1).is_integer() || (a - p.lambda2).is_integer())
          << r.id << " at " << p.point << ": " << a << " vs " << p.lambda1 << ", " << p.lambda2;
    }
  }
}

TEST(Search, Phi3FirstScheme) {
  const Covering &phi3 = covering("phi3");
  const EvaluationRecord &a = cat().at("icosellipta"), &c3 = cat().at("icoselliptc3");
  auto scheme = pullback_exponents(riemann_scheme(a.params), phi3);
  SearchResult res = radical_solution_search(a.params, phi3, scheme);
  ASSERT_EQ(res.candidates.size(), 2u);
  ASSERT_EQ(res.solutions.size(), 2u) << (res.diagnostics.empty() ? "" : res.diagnostics.front());
  for (const auto &s : res.solutions) {
    if (s.local_solution == 1) {
      EXPECT_EQ(radical_divisor(s.function), radical_divisor(a.rhs_function()));
    } else {
      // phi^(2/5) times the right-hand side of the companion with parameters (A-C+1, B-C+1, 2-C)
      EXPECT_EQ(s.local_solution, 2);
      EXPECT_EQ(c3.params, (HpgParams{a.params.A + Rational(2, 5), a.params.B + Rational(2, 5), Rational(7, 5)}));
      QDivisor want = radical_divisor(c3.rhs_function()) + Rational(2, 5) * principal_divisor(phi3.map);
      EXPECT_EQ(radical_divisor(s.function), want);
    }
  }
}

TEST(Search, Phi3SecondScheme) {
  const Covering &phi3 = covering("phi3");
  const EvaluationRecord &k = cat().at("icoselliptk3");
  auto scheme = pullback_exponents(riemann_scheme(k.params), phi3);
  SearchResult res = radical_solution_search(k.params, phi3, scheme);
  EXPECT_EQ(res.candidates.size(), 8u);
  const ClosedPoint X = ClosedPoint::rational(Rational(-1, 9), Rational(-5, 9));
  const ClosedPoint Y = ClosedPoint::rational(Rational(1), Rational(-5));
  bool first = false, second = false;
  for (const auto &s : res.solutions) {
    if (s.local_solution == 1) first = s.divisor.coefficient(X) == Rational(1);
    if (s.local_solution == 2) second = s.divisor.coefficient(Y) == Rational(1);
  }
  EXPECT_TRUE(first);
  EXPECT_TRUE(second);
  for (const auto &s : res.solutions) {
    if (s.local_solution == 1) EXPECT_EQ(radical_divisor(s.function), radical_divisor(k.rhs_function()));
  }
}

TEST(Search, NoSingularPoints) {
  PullbackScheme empty;
  empty.curve = &curve("E3");
  const HpgParams trivial{Rational(0), Rational(1, 3), Rational(2, 3)};
  SearchResult res = radical_solution_search(trivial, covering("phi3"), empty);
  ASSERT_EQ(res.solutions.size(), 1u);
  EXPECT_TRUE(res.solutions[0].divisor.is_zero());
  EXPECT_TRUE(res.solutions[0].function.factors.empty());
  EXPECT_EQ(res.solutions[0].local_solution, 1);
}

TEST(Search, Genus0) {
  const EvaluationRecord &r = cat().at("fptetra1");
  const Covering &c = covering(r.covering);
  SearchResult res = radical_solution_search(r.params, c, pullback_exponents(riemann_scheme(r.params), c));
  bool found = false;
  for (const auto &s : res.solutions) {
    found = found || (s.local_solution == 1 && radical_divisor(s.function) == radical_divisor(r.rhs_function()));
  }
  EXPECT_TRUE(found);
}
