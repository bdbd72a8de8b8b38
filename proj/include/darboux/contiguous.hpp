/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>

#include "darboux/hypergeom.hpp"
#include "darboux/ratfunc.hpp"

namespace darboux {

struct ShiftVector {
  int k = 0, l = 0, m = 0;  // shifts of A, B, C
  friend bool operator==(const ShiftVector &, const ShiftVector &) = default;
};

/// G = p*F(A,B;C) + q*F(A+1,B;C) with p, q rational in z.
struct BasisExpression {
  QRatFunc p;
  QRatFunc q;
  friend bool operator==(const BasisExpression &a, const BasisExpression &b) {
    return a.p == b.p && a.q == b.q;
  }
};

/// F(A,B+1;C).
BasisExpression relation_b_up(const HpgParams &p);
/// F(A,B;C-1).
BasisExpression relation_c_down(const HpgParams &p);
/// F(A-1,B;C).
BasisExpression relation_a_down(const HpgParams &p);

/// F(A+k,B+l;C+m) in the basis {F(A,B;C), F(A+1,B;C)}.
/// Throws DegeneratePathError naming the step that hits an excluded parameter.
BasisExpression express_in_basis(const HpgParams &p, const ShiftVector &s);

/// As express_in_basis, retrying with A and B exchanged when the direct path degenerates.
BasisExpression express_in_basis_symmetric(const HpgParams &p, const ShiftVector &s);

/// dF/dz in the basis.
BasisExpression derivative_as_contiguous(const HpgParams &p);

/// Series of p*F + q*F(A+1) through z^order.
QSeries basis_series(const BasisExpression &e, const HpgParams &p, int order);

/// Power series of a rational function in z (Laurent part allowed) with the given precision.
QSeries ratfunc_series(const QRatFunc &f, int prec);

}  // namespace darboux
