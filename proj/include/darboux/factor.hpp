/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <utility>
#include <vector>

#include "darboux/polynomial.hpp"

namespace darboux {

/// Monic square-free parts with multiplicities: f = lc * prod g_i^i.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly &f);

struct Factorization {
  Rational unit;
  std::vector<std::pair<QPoly, int>> factors;  // monic irreducible, multiplicity
};

/// Complete factorization over Q.
Factorization factor(const QPoly &f);

/// Monic irreducible factors of a square-free polynomial.
std::vector<QPoly> factor_squarefree(const QPoly &f);

bool is_irreducible(const QPoly &f);

/// Characteristic polynomial of a square rational matrix (row-major, n x n).
QPoly charpoly(const std::vector<std::vector<Rational>> &m, Var v = Var::X);

}  // namespace darboux
