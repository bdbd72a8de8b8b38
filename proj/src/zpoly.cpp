/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/zpoly.hpp"

namespace darboux {

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto &x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly &ZPoly::make_primitive() {
  trim();
  if (c.empty()) return *this;
  mpz_class g = content();
  if (c.back() < 0) g = -g;
  if (g != 1) {
    for (auto &x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return *this;
}

ZPoly ZPoly::primitive(const QPoly &p) {
  ZPoly z;
  mpz_class l = 1;
  for (const auto &x : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
  for (const auto &x : p.coeffs()) {
    mpz_class v = x.num() * (l / x.den());
    z.c.push_back(v);
  }
  z.make_primitive();
  return z;
}

QPoly ZPoly::to_q(Var v) const {
  std::vector<Rational> cs;
  cs.reserve(c.size());
  for (const auto &x : c) cs.emplace_back(x);
  return QPoly(std::move(cs), v);
}

ZPoly zprem(const ZPoly &a, const ZPoly &b) {
  ZPoly r = a;
  const int db = b.degree();
  const mpz_class &l = b.lc();
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree() - db;
    mpz_class f = r.lc();
    for (auto &x : r.c) x *= l;
    for (int i = 0; i <= db; ++i) r.c[static_cast<std::size_t>(i + k)] -= f * b.c[static_cast<std::size_t>(i)];
    r.trim();
  }
  return r;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  a.make_primitive();
  b.make_primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly r = zprem(a, b);
    r.make_primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_primitive();
}

bool zdiv_exact(const ZPoly &a, const ZPoly &b, ZPoly &q) {
  ZPoly r = a;
  const int db = b.degree();
  q.c.assign(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree() - db;
    if (!mpz_divisible_p(r.lc().get_mpz_t(), b.lc().get_mpz_t())) return false;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), r.lc().get_mpz_t(), b.lc().get_mpz_t());
    q.c[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= db; ++i) r.c[static_cast<std::size_t>(i + k)] -= f * b.c[static_cast<std::size_t>(i)];
    r.trim();
  }
  q.trim();
  return r.is_zero();
}

}  // namespace darboux
