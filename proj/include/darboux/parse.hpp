/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Polynomial in x and xi with rational coefficients, keyed by (deg x, deg xi).
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rational &c) { add_term(0, 0, c); }  // NOLINT
  static BiPoly x() { BiPoly p; p.add_term(1, 0, Rational(1)); return p; }
  static BiPoly xi() { BiPoly p; p.add_term(0, 1, Rational(1)); return p; }
  static BiPoly from_x(const QPoly &p);

  const std::map<std::pair<int, int>, Rational> &terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  int xi_degree() const;
  /// Coefficient of xi^j as a polynomial in x.
  QPoly xi_coeff(int j) const;

  void add_term(int i, int j, const Rational &c);
  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly &a, const BiPoly &b);
  friend BiPoly operator-(const BiPoly &a, const BiPoly &b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly &a, const BiPoly &b);
  BiPoly pow(unsigned e) const;
  friend bool operator==(const BiPoly &a, const BiPoly &b) { return a.t_ == b.t_; }

  /// Canonical text form accepted by parse_bipoly.
  std::string str() const;

 private:
  std::map<std::pair<int, int>, Rational> t_;
};

/// Parses the polynomial grammar: rational literals, x, xi, + - * ^, parentheses,
/// and division by nonzero constants.
BiPoly parse_bipoly(std::string_view s);

/// Parses a quotient of two such polynomials, e.g. "x*(x+4)^3/(4*(2*x-1)^3)".
std::pair<BiPoly, BiPoly> parse_fraction(std::string_view s);

/// Parses a univariate polynomial in x.
QPoly parse_xpoly(std::string_view s);

}  // namespace darboux
