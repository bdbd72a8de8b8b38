/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "darboux/curvefunc.hpp"
#include "darboux/hypergeom.hpp"

namespace darboux {

enum class BaseValue { Zero, One, Infinity };
inline constexpr std::array<BaseValue, 3> kBaseValues = {BaseValue::Zero, BaseValue::One, BaseValue::Infinity};
std::string base_value_str(BaseValue v);

/// Branching indices of one fiber, in decreasing order.
using Partition = std::vector<int>;

/// A covering of the z-line by P^1 (curve == nullptr) or by a Weierstrass curve.
struct Covering {
  std::string key;
  std::string label;
  const WeierstrassCurve *curve = nullptr;
  CurveFunction map;
  int degree = 0;

  bool elliptic() const { return curve != nullptr; }
};

/// A covering of P^1 by P^1 given as a rational function of x.
Covering genus0_covering(const std::string &key, const std::string &map, const std::string &label = "");

/// Registered coverings: "tetra4" ... "icosa30", "tetra4b", "octa6b", "phi1".."phi6", "klein-1".."klein-3", "id".
const Covering &covering(const std::string &key);
std::vector<std::string> covering_keys();
/// The nine standard Darboux coverings.
const std::vector<std::string> &standard_covering_keys();

/// One point of a fiber. On P^1 the roots of an irreducible p(x) are the closed point component(p, 0).
struct FiberPoint {
  ClosedPoint point;
  int index = 1;
};

std::vector<FiberPoint> fiber(const Covering &c, BaseValue v);
Partition branching_data(const Covering &c, BaseValue v);

/// Branching of x -> c(x^e) for a covering of P^1 by P^1.
std::array<Partition, 3> substituted_branching(const Covering &c, int e);

/// Largest index above each base value; for a Darboux covering this is the denominator placed there.
std::array<int, 3> placement(const std::array<Partition, 3> &branching);

/// floor(m/k) copies of k and (m mod k) ones.
Partition dramifico_partition(int m, int k);
/// The fiber above v agrees with dramifico_partition(degree, k).
bool check_dramifico(const Covering &c, BaseValue v, int k);
/// check_dramifico at every base value whose placed denominator is k.
bool check_dramifico(const Covering &c, int k);

/// g with 2g - 2 = (2 base_genus - 2) degree + sum (r - 1).
int hurwitz_genus(int degree, int base_genus, const std::vector<Partition> &branching);

/// For each base value and each point of psi above it, the indices of the fiber product's
/// projection to the source of psi: a point of phi of index a over a psi point of index r gives
/// gcd(a, r) points of index lcm(a, r)/r.
std::array<std::vector<Partition>, 3> fiber_product_branching(const std::array<Partition, 3> &psi,
                                                             const std::array<Partition, 3> &phi);
/// Genus of the fiber product when the psi source is P^1.
int fiber_product_genus(const std::array<Partition, 3> &psi, const std::array<Partition, 3> &phi, int phi_degree);

/// Branching of a covering as seen from the base: the denominators placed at the three base
/// values and the partitions above them.
struct BaseBranching {
  std::array<int, 3> denominators{};
  std::array<Partition, 3> partitions;
  int degree = 0;
};

/// Klein pull-back from the standard equation to the main representative of t.
/// Printed maps are used where registered; otherwise the branching follows from the exponents and Hurwitz.
BaseBranching klein_branching(SchwartzType t);
/// The derivation from exponents alone, also for types with a printed map.
BaseBranching derived_klein_branching(SchwartzType t);
/// Standard Darboux covering of degree |G|/e for the group of t.
BaseBranching darboux_branching(SchwartzType t, int e);

struct GenusRow {
  SchwartzType type;
  int klein_degree = 0;
  std::array<int, 4> genus{};  // deg gamma = m, l, k, 1
};
std::vector<GenusRow> genus_table();

/// Local exponents of the pull-back along a covering at one point above a base value.
struct SchemePoint {
  ClosedPoint point;
  BaseValue over = BaseValue::Zero;
  int index = 1;
  Rational lambda1, lambda2;
  bool integer_difference() const { return (lambda2 - lambda1).is_integer(); }
  /// Exponents {0, 1}: an ordinary point of the pull-back.
  bool ordinary() const;
};

struct PullbackScheme {
  const WeierstrassCurve *curve = nullptr;
  std::vector<SchemePoint> points;
  std::vector<SchemePoint> singular() const;
};

/// Exponents at each point above s of index r are r times the exponents at s.
PullbackScheme pullback_exponents(const RiemannScheme &s, const Covering &c);

/// Degree-0 divisors with coefficient at each singular point one of its exponents, plus up to
/// budget distinct Q-rational torsion points with coefficient 1, passing the torsion criterion.
std::vector<QDivisor> candidate_divisors(const PullbackScheme &s, const WeierstrassCurve &e, int budget = 1);

}  // namespace darboux
