/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <gmpxx.h>

#include <vector>

#include "darboux/polynomial.hpp"

namespace darboux {

/// Integer polynomial used for content-free remainder sequences and factor search.
struct ZPoly {
  std::vector<mpz_class> c;  // low to high, no trailing zeros

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const mpz_class &lc() const { return c.back(); }
  void trim();
  mpz_class content() const;
  /// Divide by content and make the leading coefficient positive.
  ZPoly &make_primitive();

  static ZPoly primitive(const QPoly &p);
  QPoly to_q(Var v = Var::X) const;
};

/// Pseudo-remainder of a by b.
ZPoly zprem(const ZPoly &a, const ZPoly &b);
/// Primitive gcd with positive leading coefficient.
ZPoly zgcd(ZPoly a, ZPoly b);
/// Exact quotient a / b over Z if it exists.
bool zdiv_exact(const ZPoly &a, const ZPoly &b, ZPoly &q);

}  // namespace darboux
