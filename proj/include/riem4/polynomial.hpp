#pragma once

#include <stdexcept>
#include <vector>

#include "riem4/rational.hpp"

// Univariate polynomials and rational functions in one formal variable
// (epsilon throughout this project) with exact rational coefficients.
// Rational functions are kept reduced with a monic denominator, so symbolic
// equality is plain coefficient comparison.

namespace riem4 {

struct Polynomial {
  std::vector<Rational> c;  // ascending, no trailing zeros

  Polynomial() = default;
  /*implicit*/ Polynomial(Rational v) : c{std::move(v)} { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static Polynomial constant(Rational v) { return Polynomial{std::move(v)}; }
  static Polynomial x() { return Polynomial{Rational(0), Rational(1)}; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  Rational coeff(size_t k) const { return k < c.size() ? c[k] : Rational(0); }
  Rational leading() const { return c.empty() ? Rational(0) : c.back(); }

  Rational operator()(const Rational& x) const {
    Rational v(0);
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Polynomial(std::move(r));
  }
  Polynomial operator-(const Polynomial& o) const {
    std::vector<Rational> r(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return Polynomial(std::move(r));
  }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return Polynomial(std::move(r));
  }
  Polynomial operator*(const Rational& s) const {
    Polynomial r = *this;
    for (auto& v : r.c) v *= s;
    r.trim();
    return r;
  }
  Polynomial operator-() const { return *this * Rational(-1); }
  bool operator==(const Polynomial& o) const { return c == o.c; }
};

// quotient/remainder of exact polynomial division
inline std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial q;
  q.c.assign(a.c.size(), Rational(0));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    Rational f = a.leading() / b.leading();
    q.c[shift] += f;
    for (size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= f * b.c[i];
    a.trim();
  }
  q.trim();
  return {q, a};
}

inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a * (Rational(1) / a.leading());  // monic
  return a;
}

struct RationalFunction {
  Polynomial num;
  Polynomial den = Polynomial::constant(Rational(1));

  RationalFunction() = default;
  RationalFunction(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) { reduce(); }
  /*implicit*/ RationalFunction(Polynomial n) : num(std::move(n)) {}
  /*implicit*/ RationalFunction(Rational v) : num(Polynomial(std::move(v))) {}
  static RationalFunction constant(Rational v) { return RationalFunction(Polynomial::constant(std::move(v))); }

  void reduce() {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
      den = Polynomial::constant(Rational(1));
      return;
    }
    Polynomial g = poly_gcd(num, den);
    num = divmod(num, g).first;
    den = divmod(den, g).first;
    Rational lead = den.leading();
    num = num * (Rational(1) / lead);
    den = den * (Rational(1) / lead);
  }

  Rational operator()(const Rational& x) const {
    Rational d = den(x);
    if (d == 0) throw std::domain_error("rational function pole");
    return num(x) / d;
  }

  RationalFunction operator+(const RationalFunction& o) const {
    return {num * o.den + o.num * den, den * o.den};
  }
  RationalFunction operator-(const RationalFunction& o) const {
    return {num * o.den - o.num * den, den * o.den};
  }
  RationalFunction operator*(const RationalFunction& o) const { return {num * o.num, den * o.den}; }
  RationalFunction operator/(const RationalFunction& o) const {
    if (o.num.is_zero()) throw std::domain_error("rational function division by zero");
    return {num * o.den, den * o.num};
  }
  RationalFunction operator-() const { return {-num, den}; }
  bool operator==(const RationalFunction& o) const { return num == o.num && den == o.den; }
};

}  // namespace riem4
