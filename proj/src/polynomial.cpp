/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/polynomial.hpp"

#include "darboux/zpoly.hpp"

namespace darboux {

const char *var_name(Var v) {
  switch (v) {
    case Var::X: return "x";
    case Var::Xi: return "xi";
    case Var::Z: return "z";
    case Var::T: return "t";
  }
  return "?";
}

template class Polynomial<Rational>;
template class Polynomial<QuadraticNumber>;

template <>
QPoly poly_gcd(QPoly a, QPoly b) {
  Var v = a.degree() >= 1 ? a.var() : b.var();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly g = zgcd(ZPoly::primitive(a), ZPoly::primitive(b));
  return g.to_q(v).monic();
}

}  // namespace darboux
