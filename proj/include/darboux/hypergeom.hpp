/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "darboux/ratfunc.hpp"
#include "darboux/rational.hpp"
#include "darboux/series.hpp"

namespace darboux {

struct HpgParams {
  Rational A, B, C;

  /// Throws ParameterError when C is zero or a negative integer.
  void validate() const;
  std::string str() const;
  friend bool operator==(const HpgParams &, const HpgParams &) = default;
};

struct ExponentDiffs {
  Rational e0, e1, einf;
  std::array<Rational, 3> as_array() const { return {e0, e1, einf}; }
  std::string str() const;
  friend bool operator==(const ExponentDiffs &, const ExponentDiffs &) = default;
};

struct RiemannScheme {
  // Local exponent pairs above 0, 1 and infinity.
  std::array<std::pair<Rational, Rational>, 3> exponents;
  Rational fuchs_sum() const;
};

enum class SchwartzType {
  Cyclic,
  Dihedral,
  Tetra233,
  Tetra_1_3_1_3_2_3,
  Octa234,
  Octa_2_3_1_4_1_4,
  Icosa235,
  Icosa_1_2_1_3_2_5,
  Icosa_1_2_1_5_2_5,
  Icosa_1_3_1_3_2_5,
  Icosa_1_3_2_3_1_5,
  Icosa_2_3_1_5_1_5,
  Icosa_1_3_2_5_3_5,
  Icosa_1_3_1_5_3_5,
  Icosa_1_5_1_5_4_5,
  Icosa_2_5_2_5_2_5,
  NonAlgebraic,
};

enum class MonodromyGroup { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral, Infinite };

/// The 14 tetrahedral, octahedral and icosahedral types in table order.
const std::vector<SchwartzType> &main_types();
/// Exponent differences of the main representative, e.g. (1/2,1/3,1/5).
ExponentDiffs representative(SchwartzType t);
std::string type_label(SchwartzType t);
SchwartzType type_from_label(const std::string &label);
MonodromyGroup monodromy_group(SchwartzType t);
/// Order of the projective monodromy group (12, 24, 60) for the finite non-dihedral types.
int group_order(SchwartzType t);

ExponentDiffs exponent_diffs(const HpgParams &p);
/// Parameters with the given exponent differences: A = (1-e0-e1+einf)/2, B = (1-e0-e1-einf)/2, C = 1-e0.
HpgParams params_from_diffs(const ExponentDiffs &e);
RiemannScheme riemann_scheme(const HpgParams &p);

/// 2F1(A,B;C;z) through z^order.
QSeries gauss_series(const HpgParams &p, int order);

struct SecondSolution {
  QSeries series;
  bool degenerate = false;  // C = 1: coincides with the first solution
};

/// z^(1-C) 2F1(A+1-C, B+1-C; 2-C; z), the hypergeometric part through z^order.
SecondSolution second_solution_series(const HpgParams &p, int order);

/// Potential r(z) of the normalized equation y'' = r y.
RationalFunction<Rational> normalized_potential(const ExponentDiffs &e);

/// Schwartz type by permutation, sign changes and integer shifts with even sum.
SchwartzType classify_schwartz(const ExponentDiffs &e);

}  // namespace darboux
