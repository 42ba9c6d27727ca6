#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

// Forward-mode jets in 4 coordinates. Jet1 carries value + gradient,
// Jet2 additionally the full Hessian. Nesting (Jet2<Jet2<double>> etc.)
// yields higher derivatives; the Kahler pipeline goes up to order 5.

namespace riem4 {

inline double scalar_value(double x) { return x; }

template <class T>
struct Jet1 {
  T v{};
  std::array<T, 4> d{};

  Jet1() = default;
  Jet1(double c) : v(c) {}
  template <class U = T, class = std::enable_if_t<!std::is_same_v<U, double>>>
  Jet1(const T& c) : v(c) {}

  static Jet1 variable(const T& x, int axis) {
    Jet1 j(x);
    j.d[axis] = T(1.0);
    return j;
  }
};

template <class T>
double scalar_value(const Jet1<T>& j) { return scalar_value(j.v); }

template <class T>
struct Jet2 {
  T v{};
  std::array<T, 4> d{};
  std::array<std::array<T, 4>, 4> h{};

  Jet2() = default;
  Jet2(double c) : v(c) {}
  template <class U = T, class = std::enable_if_t<!std::is_same_v<U, double>>>
  Jet2(const T& c) : v(c) {}

  static Jet2 variable(const T& x, int axis) {
    Jet2 j(x);
    j.d[axis] = T(1.0);
    return j;
  }
};

template <class T>
double scalar_value(const Jet2<T>& j) { return scalar_value(j.v); }

// ---- Jet1 arithmetic ----

template <class T>
Jet1<T> operator+(const Jet1<T>& a, const Jet1<T>& b) {
  Jet1<T> r(a.v + b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
template <class T>
Jet1<T> operator-(const Jet1<T>& a, const Jet1<T>& b) {
  Jet1<T> r(a.v - b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}
template <class T>
Jet1<T> operator-(const Jet1<T>& a) {
  Jet1<T> r(-a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = -a.d[i];
  return r;
}
template <class T>
Jet1<T> operator*(const Jet1<T>& a, const Jet1<T>& b) {
  Jet1<T> r(a.v * b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
template <class T>
Jet1<T> operator/(const Jet1<T>& a, const Jet1<T>& b) {
  T inv = T(1.0) / b.v;
  Jet1<T> r(a.v * inv);
  for (int i = 0; i < 4; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) * inv;
  return r;
}

template <class T> Jet1<T> operator+(const Jet1<T>& a, double c) { return a + Jet1<T>(c); }
template <class T> Jet1<T> operator+(double c, const Jet1<T>& a) { return Jet1<T>(c) + a; }
template <class T> Jet1<T> operator-(const Jet1<T>& a, double c) { return a - Jet1<T>(c); }
template <class T> Jet1<T> operator-(double c, const Jet1<T>& a) { return Jet1<T>(c) - a; }
template <class T> Jet1<T> operator*(const Jet1<T>& a, double c) {
  Jet1<T> r(a.v * c);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] * c;
  return r;
}
template <class T> Jet1<T> operator*(double c, const Jet1<T>& a) { return a * c; }
template <class T> Jet1<T> operator/(const Jet1<T>& a, double c) { return a * (1.0 / c); }
template <class T> Jet1<T> operator/(double c, const Jet1<T>& a) { return Jet1<T>(c) / a; }

// ---- Jet2 arithmetic ----

template <class T>
Jet2<T> operator+(const Jet2<T>& a, const Jet2<T>& b) {
  Jet2<T> r(a.v + b.v);
  for (int i = 0; i < 4; ++i) {
    r.d[i] = a.d[i] + b.d[i];
    for (int j = 0; j < 4; ++j) r.h[i][j] = a.h[i][j] + b.h[i][j];
  }
  return r;
}
template <class T>
Jet2<T> operator-(const Jet2<T>& a, const Jet2<T>& b) {
  Jet2<T> r(a.v - b.v);
  for (int i = 0; i < 4; ++i) {
    r.d[i] = a.d[i] - b.d[i];
    for (int j = 0; j < 4; ++j) r.h[i][j] = a.h[i][j] - b.h[i][j];
  }
  return r;
}
template <class T>
Jet2<T> operator-(const Jet2<T>& a) {
  Jet2<T> r(-a.v);
  for (int i = 0; i < 4; ++i) {
    r.d[i] = -a.d[i];
    for (int j = 0; j < 4; ++j) r.h[i][j] = -a.h[i][j];
  }
  return r;
}
template <class T>
Jet2<T> operator*(const Jet2<T>& a, const Jet2<T>& b) {
  Jet2<T> r(a.v * b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.h[i][j] = a.h[i][j] * b.v + a.d[i] * b.d[j] + a.d[j] * b.d[i] + a.v * b.h[i][j];
  return r;
}
template <class T>
Jet2<T> operator/(const Jet2<T>& a, const Jet2<T>& b) {
  T inv = T(1.0) / b.v;
  T inv2 = inv * inv;
  Jet2<T> r(a.v * inv);
  for (int i = 0; i < 4; ++i) r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) * inv2;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.h[i][j] = (a.h[i][j] - r.d[i] * b.d[j] - r.d[j] * b.d[i] - r.v * b.h[i][j]) * inv;
  return r;
}

template <class T> Jet2<T> operator+(const Jet2<T>& a, double c) { return a + Jet2<T>(c); }
template <class T> Jet2<T> operator+(double c, const Jet2<T>& a) { return Jet2<T>(c) + a; }
template <class T> Jet2<T> operator-(const Jet2<T>& a, double c) { return a - Jet2<T>(c); }
template <class T> Jet2<T> operator-(double c, const Jet2<T>& a) { return Jet2<T>(c) - a; }
template <class T> Jet2<T> operator*(const Jet2<T>& a, double c) {
  Jet2<T> r(a.v * c);
  for (int i = 0; i < 4; ++i) {
    r.d[i] = a.d[i] * c;
    for (int j = 0; j < 4; ++j) r.h[i][j] = a.h[i][j] * c;
  }
  return r;
}
template <class T> Jet2<T> operator*(double c, const Jet2<T>& a) { return a * c; }
template <class T> Jet2<T> operator/(const Jet2<T>& a, double c) { return a * (1.0 / c); }
template <class T> Jet2<T> operator/(double c, const Jet2<T>& a) { return Jet2<T>(c) / a; }

// Chain rule helper: given f(u.v), f'(u.v), f''(u.v).
template <class T>
Jet2<T> jet2_chain(const Jet2<T>& u, const T& f, const T& fp, const T& fpp) {
  Jet2<T> r(f);
  for (int i = 0; i < 4; ++i) r.d[i] = fp * u.d[i];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.h[i][j] = fp * u.h[i][j] + fpp * u.d[i] * u.d[j];
  return r;
}

// ---- transcendental functions ----

using std::cos;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;
using std::sinh;
using std::cosh;
using std::tan;

template <class T>
Jet1<T> sin(const Jet1<T>& u) {
  Jet1<T> r(sin(u.v));
  T c = cos(u.v);
  for (int i = 0; i < 4; ++i) r.d[i] = c * u.d[i];
  return r;
}
template <class T>
Jet1<T> cos(const Jet1<T>& u) {
  Jet1<T> r(cos(u.v));
  T ms = -sin(u.v);
  for (int i = 0; i < 4; ++i) r.d[i] = ms * u.d[i];
  return r;
}
template <class T>
Jet1<T> exp(const Jet1<T>& u) {
  T e = exp(u.v);
  Jet1<T> r(e);
  for (int i = 0; i < 4; ++i) r.d[i] = e * u.d[i];
  return r;
}
template <class T>
Jet1<T> log(const Jet1<T>& u) {
  Jet1<T> r(log(u.v));
  T inv = T(1.0) / u.v;
  for (int i = 0; i < 4; ++i) r.d[i] = inv * u.d[i];
  return r;
}
template <class T>
Jet1<T> sqrt(const Jet1<T>& u) {
  T s = sqrt(u.v);
  Jet1<T> r(s);
  T half = T(0.5) / s;
  for (int i = 0; i < 4; ++i) r.d[i] = half * u.d[i];
  return r;
}

template <class T>
Jet2<T> sin(const Jet2<T>& u) {
  T s = sin(u.v), c = cos(u.v);
  return jet2_chain(u, s, c, -s);
}
template <class T>
Jet2<T> cos(const Jet2<T>& u) {
  T s = sin(u.v), c = cos(u.v);
  return jet2_chain(u, c, -s, -c);
}
template <class T>
Jet2<T> exp(const Jet2<T>& u) {
  T e = exp(u.v);
  return jet2_chain(u, e, e, e);
}
template <class T>
Jet2<T> log(const Jet2<T>& u) {
  T inv = T(1.0) / u.v;
  return jet2_chain(u, log(u.v), inv, -inv * inv);
}
template <class T>
Jet2<T> sqrt(const Jet2<T>& u) {
  T s = sqrt(u.v);
  T fp = T(0.5) / s;
  T fpp = T(-0.25) / (s * u.v);
  return jet2_chain(u, s, fp, fpp);
}

// Integer powers by repeated multiplication; n >= 0.
template <class J>
J ipow(const J& u, int n) {
  J r(1.0);
  J base = u;
  int e = n;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

inline double ipow(double u, int n) { return std::pow(u, n); }

}  // namespace riem4
