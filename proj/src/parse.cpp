/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "darboux/parse.hpp"

#include <cctype>

#include "darboux/error.hpp"

namespace darboux {

BiPoly BiPoly::from_x(const QPoly &p) {
  BiPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term(i, 0, p.coeff(i));
  return out;
}

bool BiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == std::make_pair(0, 0));
}

int BiPoly::xi_degree() const {
  int d = -1;
  for (const auto &[k, c] : t_) d = std::max(d, k.second);
  return d;
}

QPoly BiPoly::xi_coeff(int j) const {
  std::vector<Rational> c;
  for (const auto &[k, v] : t_) {
    if (k.second != j) continue;
    if (static_cast<int>(c.size()) <= k.first) c.resize(static_cast<std::size_t>(k.first) + 1, Rational(0));
    c[static_cast<std::size_t>(k.first)] = v;
  }
  return QPoly(c, Var::X);
}

void BiPoly::add_term(int i, int j, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(std::make_pair(i, j), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto &[k, c] : r.t_) c = -c;
  return r;
}

BiPoly operator+(const BiPoly &a, const BiPoly &b) {
  BiPoly r = a;
  for (const auto &[k, c] : b.t_) r.add_term(k.first, k.second, c);
  return r;
}

BiPoly operator*(const BiPoly &a, const BiPoly &b) {
  BiPoly r;
  for (const auto &[ka, ca] : a.t_) {
    for (const auto &[kb, cb] : b.t_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(Rational(1)), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto &[k, c] : t_) {
    std::string mono;
    if (k.first == 1) mono = "x";
    if (k.first > 1) mono = "x^" + std::to_string(k.first);
    if (k.second >= 1) {
      if (!mono.empty()) mono += "*";
      mono += "xi";
      if (k.second > 1) mono += "^" + std::to_string(k.second);
    }
    Rational a = c.abs();
    std::string term;
    if (mono.empty()) {
      term = a.str();
    } else if (a.is_one()) {
      term = mono;
    } else {
      term = a.str() + "*" + mono;
    }
    if (out.empty()) {
      out = c.sign() < 0 ? "-" + term : term;
    } else {
      out += (c.sign() < 0 ? "-" : "+") + term;
    }
  }
  return out;
}

namespace {

using Frac = std::pair<BiPoly, BiPoly>;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Frac parse() {
    Frac f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Frac add(const Frac &a, const Frac &b, bool minus) {
    BiPoly bn = minus ? -b.first : b.first;
    if (a.second == b.second) return {a.first + bn, a.second};
    return {a.first * b.second + bn * a.second, a.second * b.second};
  }

  Frac expr() {
    Frac acc;
    skip();
    if (eat('-')) {
      Frac t = term();
      acc = {-t.first, t.second};
    } else {
      eat('+');
      acc = term();
    }
    for (;;) {
      if (eat('+')) {
        acc = add(acc, term(), false);
      } else if (eat('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Frac term() {
    Frac acc = power();
    for (;;) {
      if (eat('*')) {
        Frac f = power();
        acc = {acc.first * f.first, acc.second * f.second};
      } else if (eat('/')) {
        Frac f = power();
        if (f.first.is_zero()) fail("division by zero");
        acc = {acc.first * f.second, acc.second * f.first};
      } else {
        return acc;
      }
    }
  }

  Frac power() {
    Frac base = unary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      return {base.first.pow(static_cast<unsigned>(e)), base.second.pow(static_cast<unsigned>(e))};
    }
    return base;
  }

  Frac unary() {
    if (eat('-')) {
      Frac f = unary();
      return {-f.first, f.second};
    }
    return primary();
  }

  Frac primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Frac f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {BiPoly(Rational(mpz_class(std::string(s_.substr(start, pos_ - start))))), BiPoly(Rational(1))};
    }
    if (s_.substr(pos_, 2) == "xi") {
      pos_ += 2;
      return {BiPoly::xi(), BiPoly(Rational(1))};
    }
    if (c == 'x') {
      ++pos_;
      return {BiPoly::x(), BiPoly(Rational(1))};
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::pair<BiPoly, BiPoly> parse_fraction(std::string_view s) {
  Frac f = Parser(s).parse();
  // Keep constant denominators folded into the numerator.
  if (f.second.is_constant()) {
    Rational d = f.second.terms().begin()->second;
    return {BiPoly(d.inverse()) * f.first, BiPoly(Rational(1))};
  }
  return f;
}

BiPoly parse_bipoly(std::string_view s) {
  auto [n, d] = parse_fraction(s);
  if (!d.is_constant()) throw ParseError("not a polynomial: \"" + std::string(s) + "\"");
  return n;
}

QPoly parse_xpoly(std::string_view s) {
  BiPoly p = parse_bipoly(s);
  if (p.xi_degree() > 0) throw ParseError("unexpected xi in \"" + std::string(s) + "\"");
  return p.xi_coeff(0);
}

}  // namespace darboux
