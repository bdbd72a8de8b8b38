/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "darboux/error.hpp"
#include "darboux/quadratic.hpp"
#include "darboux/rational.hpp"

namespace darboux {

enum class Var { X, Xi, Z, T };

const char *var_name(Var v);

/// Dense univariate polynomial over Q or Q(sqrt d), coefficients low to high.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Var v) : var_(v) {}
  Polynomial(std::vector<K> c, Var v = Var::X) : c_(std::move(c)), var_(v) { trim(); }
  Polynomial(const K &c, Var v = Var::X) : c_{c}, var_(v) { trim(); }  // NOLINT

  static Polynomial monomial(const K &c, int k, Var v = Var::X) {
    std::vector<K> cs(static_cast<std::size_t>(k) + 1, K(0));
    cs[static_cast<std::size_t>(k)] = c;
    return Polynomial(std::move(cs), v);
  }
  static Polynomial variable(Var v = Var::X) { return monomial(K(1), 1, v); }

  Var var() const { return var_; }
  Polynomial with_var(Var v) const { Polynomial p = *this; p.var_ = v; return p; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K> &coeffs() const { return c_; }
  K coeff(int i) const {
    return (i < 0 || i > degree()) ? K(0) : c_[static_cast<std::size_t>(i)];
  }
  K lc() const { return c_.empty() ? K(0) : c_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lc();
    Polynomial r = *this;
    for (auto &x : r.c_) x = x * inv;
    return r;
  }

  Polynomial &operator+=(const Polynomial &o) {
    join_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) {
    join_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto &x : r.c_) x = -x;
    return r;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    Polynomial r(a.var_);
    r.join_var_from(a, b);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  friend Polynomial operator*(const K &s, Polynomial p) {
    if (s.is_zero()) return Polynomial(p.var_);
    for (auto &x : p.c_) x = s * x;
    p.trim();
    return p;
  }

  /// Euclidean division; throws on zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial &d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial q(var_), r = *this;
    q.join_var_from(*this, d);
    r.var_ = q.var_;
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), K(0));
    K inv = K(1) / d.lc();
    const int dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
      const int k = r.degree() - dd;
      K f = r.lc() * inv;
      q.c_[static_cast<std::size_t>(k)] = f;
      for (int i = 0; i <= dd; ++i) {
        r.c_[static_cast<std::size_t>(i + k)] -= f * d.c_[static_cast<std::size_t>(i)];
      }
      r.c_.pop_back();
      r.trim();
    }
    q.trim();
    return {q, r};
  }
  friend Polynomial operator/(const Polynomial &a, const Polynomial &b) { return a.divmod(b).first; }
  friend Polynomial operator%(const Polynomial &a, const Polynomial &b) { return a.divmod(b).second; }

  /// Quotient that must be exact.
  Polynomial exact_div(const Polynomial &d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
  }
  bool divides(const Polynomial &f) const { return (f % *this).is_zero(); }

  Polynomial derivative() const {
    Polynomial r(var_);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r.c_.push_back(K(static_cast<long>(i)) * c_[i]);
    }
    r.trim();
    return r;
  }

  template <class V>
  V eval(const V &x) const {
    V acc = V(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }
  K operator()(const K &x) const { return eval<K>(x); }

  /// this(inner(.)).
  Polynomial compose(const Polynomial &inner) const {
    Polynomial acc(inner.var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Polynomial(*it, inner.var_);
    return acc;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r(K(1), var_), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return r;
  }

  /// p(x) -> x^deg p(1/x).
  Polynomial reversed(int n) const {
    Polynomial r(var_);
    r.c_.assign(static_cast<std::size_t>(n) + 1, K(0));
    for (int i = 0; i <= degree(); ++i) r.c_[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
    r.trim();
    return r;
  }

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

  std::string str() const { return str(var_name(var_)); }
  std::string str(const std::string &v) const;

  friend std::ostream &operator<<(std::ostream &os, const Polynomial &p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void join_var(const Polynomial &o) {
    if (o.degree() >= 1 && degree() >= 1 && o.var_ != var_) {
      throw FieldMismatch(std::string("polynomials in ") + var_name(var_) + " and " + var_name(o.var_));
    }
    if (degree() < 1) var_ = o.var_;
  }
  void join_var_from(const Polynomial &a, const Polynomial &b) {
    if (a.degree() >= 1 && b.degree() >= 1 && a.var_ != b.var_) {
      throw FieldMismatch(std::string("polynomials in ") + var_name(a.var_) + " and " + var_name(b.var_));
    }
    var_ = a.degree() >= 1 ? a.var_ : b.var_;
  }

  std::vector<K> c_;
  Var var_ = Var::X;
};

using QPoly = Polynomial<Rational>;
using KPoly = Polynomial<QuadraticNumber>;

template <class K>
std::string Polynomial<K>::str(const std::string &v) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const K &c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
    if (neg) cs = cs.substr(1);
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += v;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    Polynomial<K> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <>
QPoly poly_gcd(QPoly a, QPoly b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> poly_xgcd(const Polynomial<K> &a,
                                                                   const Polynomial<K> &b) {
  Polynomial<K> r0 = a, r1 = b;
  Polynomial<K> s0(K(1), a.var()), s1(a.var()), t0(a.var()), t1(K(1), a.var());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Polynomial<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

/// Inverse of a modulo m (m irreducible or gcd(a, m) = 1).
template <class K>
Polynomial<K> inverse_mod(const Polynomial<K> &a, const Polynomial<K> &m) {
  auto [g, s, t] = poly_xgcd(a % m, m);
  if (g.degree() != 0) throw DivisionByZero("polynomial not invertible modulo " + m.str());
  return s % m;
}

/// Largest k with p^k | f (f nonzero, deg p >= 1).
template <class K>
int poly_valuation(Polynomial<K> f, const Polynomial<K> &p) {
  if (f.is_zero()) throw Error("valuation of zero polynomial");
  int k = 0;
  for (;;) {
    auto [q, r] = f.divmod(p);
    if (!r.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

extern template class Polynomial<Rational>;
extern template class Polynomial<QuadraticNumber>;

}  // namespace darboux
