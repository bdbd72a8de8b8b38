/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "darboux/error.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/quadratic.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Truncated Puiseux series sum c_i s^i, s = t^(1/r), known exactly for exponents below prec.
/// Stored coefficients start at the valuation v; coefficients between the stored block and
/// prec are zero. prec == kExact marks a series known to all orders (a polynomial).
template <class K>
class PuiseuxSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  PuiseuxSeries() : r_(1), v_(kExact), prec_(kExact) {}

  /// Series with coefficients c for exponents v, v+1, ... in s = t^(1/r).
  PuiseuxSeries(std::vector<K> c, int v, int prec, int r = 1) : r_(r), v_(v), prec_(prec), c_(std::move(c)) {
    if (r_ < 1) throw ParameterError("ramification must be positive");
    normalize();
  }

  static PuiseuxSeries constant(const K &c, int prec = kExact, int r = 1) {
    return PuiseuxSeries({c}, 0, prec, r);
  }
  static PuiseuxSeries monomial(const K &c, int e, int prec = kExact, int r = 1) {
    return PuiseuxSeries({c}, e, prec, r);
  }
  /// Polynomial p(t) where t = s^r; exact unless prec is given.
  static PuiseuxSeries from_poly(const Polynomial<K> &p, int r = 1, int prec = kExact) {
    std::vector<K> c;
    for (int i = 0; i <= p.degree(); ++i) {
      c.push_back(p.coeff(i));
      if (i < p.degree()) {
        for (int j = 1; j < r; ++j) c.push_back(K(0));
      }
    }
    return PuiseuxSeries(std::move(c), 0, prec, r);
  }

  int ramification() const { return r_; }
  int valuation() const { return v_; }
  int precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  bool is_zero() const { return c_.empty(); }
  Rational valuation_q() const { return Rational(v_, r_); }

  /// Coefficient of s^e.
  K coeff(int e) const {
    if (e >= prec_) throw Error("coefficient beyond series precision");
    if (e < v_ || e >= v_ + static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(e - v_)];
  }
  K leading() const { return c_.empty() ? K(0) : c_.front(); }
  const std::vector<K> &coeffs() const { return c_; }

  PuiseuxSeries truncated(int prec) const {
    PuiseuxSeries s = *this;
    s.prec_ = std::min(prec_, prec);
    s.normalize();
    return s;
  }

  /// Same series written in s' = t^(1/r'), r' a multiple of r.
  PuiseuxSeries lifted(int r) const {
    if (r % r_) throw ParameterError("ramification must be a multiple");
    const int f = r / r_;
    if (f == 1) return *this;
    std::vector<K> c;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      c.push_back(c_[i]);
      if (i + 1 < c_.size()) {
        for (int j = 1; j < f; ++j) c.push_back(K(0));
      }
    }
    return PuiseuxSeries(std::move(c), v_ * f, scale(prec_, f), r);
  }

  friend PuiseuxSeries operator+(const PuiseuxSeries &a0, const PuiseuxSeries &b0) {
    const int r = std::lcm(a0.r_, b0.r_);
    PuiseuxSeries a = a0.lifted(r), b = b0.lifted(r);
    const int prec = std::min(a.prec_, b.prec_);
    if (a.is_zero()) return b.truncated(prec);
    if (b.is_zero()) return a.truncated(prec);
    const int lo = std::min(a.v_, b.v_);
    const int hi = std::min(prec, std::max(a.v_ + a.len(), b.v_ + b.len()));
    std::vector<K> c;
    for (int e = lo; e < hi; ++e) c.push_back(a.get(e) + b.get(e));
    return PuiseuxSeries(std::move(c), lo, prec, r);
  }
  PuiseuxSeries operator-() const {
    PuiseuxSeries s = *this;
    for (auto &x : s.c_) x = -x;
    return s;
  }
  friend PuiseuxSeries operator-(const PuiseuxSeries &a, const PuiseuxSeries &b) { return a + (-b); }

  friend PuiseuxSeries operator*(const PuiseuxSeries &a0, const PuiseuxSeries &b0) {
    const int r = std::lcm(a0.r_, b0.r_);
    PuiseuxSeries a = a0.lifted(r), b = b0.lifted(r);
    if (a.is_zero() || b.is_zero()) {
      return PuiseuxSeries({}, 0, std::min(shift(b.prec_, a.v_), shift(a.prec_, b.v_)), r);
    }
    const int v = a.v_ + b.v_;
    const int prec = std::min(shift(b.prec_, a.v_), shift(a.prec_, b.v_));
    const int hi = std::min(prec, v + a.len() + b.len() - 1);
    std::vector<K> c(static_cast<std::size_t>(std::max(0, hi - v)), K(0));
    for (int i = 0; i < a.len(); ++i) {
      if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < b.len() && i + j < hi - v; ++j) {
        c[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
      }
    }
    return PuiseuxSeries(std::move(c), v, prec, r);
  }
  friend PuiseuxSeries operator*(const K &k, const PuiseuxSeries &s) {
    PuiseuxSeries out = s;
    for (auto &x : out.c_) x = k * x;
    out.normalize();
    return out;
  }

  /// Leading coefficient, valuation and unit part u with u(0) = 1.
  PuiseuxSeries unit_part() const {
    if (is_zero()) throw DivisionByZero("unit part of zero series");
    K inv = K(1) / leading();
    std::vector<K> c;
    for (const auto &x : c_) c.push_back(inv * x);
    return PuiseuxSeries(std::move(c), 0, shift(prec_, -v_), r_);
  }

  PuiseuxSeries inverse() const { return pow(Rational(-1)); }

  /// s^q via leading coefficient root, monomial, and binomial expansion of the unit.
  PuiseuxSeries pow(const Rational &q) const {
    if (q.is_zero()) return constant(K(1), kExact, r_);
    if (is_zero()) {
      if (q.sign() < 0) throw DivisionByZero("negative power of zero series");
      throw Error("power of zero series with unknown valuation");
    }
    if (is_exact() && !(q.is_integer() && q.sign() > 0)) {
      if (len() == 1) {
        return monomial_pow(q);
      }
      throw Error("power of exact series needs a truncation");
    }
    if (q.is_integer() && q.sign() > 0 && is_exact()) {
      PuiseuxSeries r = constant(K(1), kExact, r_), b = *this;
      for (long e = q.num().get_si(); e; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
      }
      return r;
    }
    // Monomial part: (c s^v)^q = c^q s^(v q).
    PuiseuxSeries mono = monomial_pow(q);
    PuiseuxSeries u = unit_part();
    const int n = u.prec_;  // relative precision in s-units
    std::vector<K> w(static_cast<std::size_t>(n), K(0));
    w[0] = K(1);
    for (int k = 1; k < n; ++k) {
      K acc = K(0);
      for (int j = 1; j <= k; ++j) {
        K aj = u.get(j);
        if (aj.is_zero()) continue;
        Rational coef = q * Rational(j) - Rational(k - j);
        if (coef.is_zero()) continue;
        acc += K(coef) * aj * w[static_cast<std::size_t>(k - j)];
      }
      w[static_cast<std::size_t>(k)] = acc * K(Rational(1, k));
    }
    PuiseuxSeries unit(std::move(w), 0, n, r_);
    return mono * unit.lifted(mono.r_);
  }

  /// d/dt of the series, t = s^r.
  PuiseuxSeries derivative() const {
    std::vector<K> c;
    for (int i = 0; i < len(); ++i) {
      int e = v_ + i;
      c.push_back(K(Rational(e, r_)) * c_[static_cast<std::size_t>(i)]);
    }
    return PuiseuxSeries(std::move(c), v_ - r_, shift(prec_, -r_), r_);
  }

  /// outer(inner); outer must be unramified, inner must vanish at the base point.
  static PuiseuxSeries compose(const PuiseuxSeries &outer, const PuiseuxSeries &inner) {
    if (outer.r_ != 1) throw ParameterError("outer series must be unramified");
    if (inner.is_zero() || inner.v_ <= 0) {
      throw CompositionDivergence("inner series must have positive valuation");
    }
    const int r = inner.r_;
    PuiseuxSeries acc({}, 0, kExact, r);
    if (!outer.is_exact()) acc = PuiseuxSeries({}, 0, scale(outer.prec_, inner.v_), r);
    if (outer.is_zero()) return acc;
    const int vo = outer.v_;
    PuiseuxSeries power = constant(K(1), kExact, r);
    int have = 0;
    for (int k = 0; k < outer.len(); ++k) {
      const K &a = outer.c_[static_cast<std::size_t>(k)];
      const int e = vo + k;
      if (e >= 0) {
        while (have < e) {
          power = power * inner;
          ++have;
        }
        if (!a.is_zero()) acc = acc + a * power;
      } else if (!a.is_zero()) {
        acc = acc + a * inner.pow(Rational(e));
      }
    }
    return acc;
  }

  /// First exponent (in common s-units) where a and b differ, below their common precision.
  static std::optional<int> first_mismatch(const PuiseuxSeries &a0, const PuiseuxSeries &b0, int *common_r = nullptr) {
    const int r = std::lcm(a0.r_, b0.r_);
    PuiseuxSeries a = a0.lifted(r), b = b0.lifted(r);
    if (common_r) *common_r = r;
    const int prec = std::min(a.prec_, b.prec_);
    int lo = std::min(a.is_zero() ? prec : a.v_, b.is_zero() ? prec : b.v_);
    int hi = std::min(prec, std::max(a.v_ + a.len(), b.v_ + b.len()));
    for (int e = lo; e < hi; ++e) {
      if (!(a.get(e) == b.get(e))) return e;
    }
    return std::nullopt;
  }
  friend bool operator==(const PuiseuxSeries &a, const PuiseuxSeries &b) {
    return !first_mismatch(a, b).has_value();
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < len(); ++i) {
      const K &c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      int e = v_ + i;
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      if (e != 0) out += "*" + (r_ == 1 ? std::string("t") : std::string("s")) + "^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    if (!is_exact()) out += " + O(" + std::string(r_ == 1 ? "t" : "s") + "^" + std::to_string(prec_) + ")";
    return out;
  }

 private:
  int len() const { return static_cast<int>(c_.size()); }
  K get(int e) const {
    if (e < v_ || e >= v_ + len()) return K(0);
    return c_[static_cast<std::size_t>(e - v_)];
  }
  static int shift(int prec, int d) { return prec >= kExact ? kExact : std::min(kExact, prec + d); }
  static int scale(int prec, int f) { return prec >= kExact ? kExact : prec * f; }

  PuiseuxSeries monomial_pow(const Rational &q) const {
    // exponent (v/r) * q expressed over a new ramification
    Rational ex = Rational(v_, r_) * q;
    const long dd = ex.den().get_si();
    const int r = std::lcm(r_, static_cast<int>(dd));
    const int e = static_cast<int>((ex * Rational(r)).num().get_si());
    K c = leading();
    const long qn = q.num().get_si(), qd = q.den().get_si();
    auto root = c.root(static_cast<unsigned long>(qd));
    if (!root) {
      throw FieldExtensionNeeded("leading coefficient " + c.str() + " has no exact root of order " +
                                 std::to_string(qd));
    }
    K cq = root->pow(qn);
    return PuiseuxSeries({cq}, e, kExact, r);
  }

  void normalize() {
    std::size_t z = 0;
    while (z < c_.size() && c_[z].is_zero()) ++z;
    if (z) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
      v_ += static_cast<int>(z);
    }
    if (v_ + len() > prec_) c_.resize(static_cast<std::size_t>(std::max(0, prec_ - v_)));
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) v_ = prec_;
  }

  int r_;
  int v_;
  int prec_;
  std::vector<K> c_;
};

using QSeries = PuiseuxSeries<Rational>;

}  // namespace darboux
