#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "riem4/jet.hpp"

// Small fixed-size matrix helpers, templated over the scalar so the same
// code runs on doubles and on jets.

namespace riem4 {

template <class T>
using Vec4 = std::array<T, 4>;

template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

using Vec4d = Vec4<double>;
using Mat4d = Mat4<double>;
using Mat3d = std::array<std::array<double, 3>, 3>;
using Mat6d = std::array<std::array<double, 6>, 6>;

struct DegenerateMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
Mat4<T> mat4_zero() {
  Mat4<T> m{};
  for (auto& row : m)
    for (auto& x : row) x = T(0.0);
  return m;
}

template <class T>
Mat4<T> mat4_identity() {
  Mat4<T> m = mat4_zero<T>();
  for (int i = 0; i < 4; ++i) m[i][i] = T(1.0);
  return m;
}

template <class T>
Mat4<T> operator+(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

template <class T>
Mat4<T> operator-(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

template <class T, class S>
Mat4<T> scale(const Mat4<T>& a, const S& c) {
  Mat4<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] * c;
  return r;
}

template <class T>
Mat4<T> matmul(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> r = mat4_zero<T>();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

template <class T>
T det3_of(const Mat4<T>& m, int r0, int r1, int r2, int c0, int c1, int c2) {
  return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
         m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
         m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
}

template <class T>
T det4(const Mat4<T>& m) {
  return m[0][0] * det3_of(m, 1, 2, 3, 1, 2, 3) - m[0][1] * det3_of(m, 1, 2, 3, 0, 2, 3) +
         m[0][2] * det3_of(m, 1, 2, 3, 0, 1, 3) - m[0][3] * det3_of(m, 1, 2, 3, 0, 1, 2);
}

// Adjugate-based inverse: no pivot comparisons, so it works on jets.
template <class T>
Mat4<T> inv4(const Mat4<T>& m, const T& det) {
  static const int rows[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  Mat4<T> r;
  T invdet = T(1.0) / det;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int* rr = rows[j];
      const int* cc = rows[i];
      T cof = det3_of(m, rr[0], rr[1], rr[2], cc[0], cc[1], cc[2]);
      double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      r[i][j] = cof * sgn * invdet;
    }
  return r;
}

template <class T>
Mat4<T> inv4(const Mat4<T>& m) {
  return inv4(m, det4(m));
}

// Cholesky on doubles; returns false when the matrix is not positive definite.
inline bool cholesky4(const Mat4d& a, Mat4d& l) {
  l = mat4_zero<double>();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) return false;
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  return true;
}

inline bool is_spd4(const Mat4d& a) {
  Mat4d l;
  return cholesky4(a, l);
}

inline double max_abs(const Mat4d& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (double x : row) m = std::max(m, std::abs(x));
  return m;
}

// Frobenius-type tensor norm squared with both indices raised by ginv:
// T_ab T_cd ginv^ac ginv^bd.
inline double tensor_norm_sq(const Mat4d& t, const Mat4d& ginv) {
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) s += t[a][b] * t[c][d] * ginv[a][c] * ginv[b][d];
  return s;
}

// Eigenvalues of a symmetric 3x3 matrix, closed form (trigonometric method),
// ascending order.
inline std::array<double, 3> eig3_sym(const Mat3d& a) {
  double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
  double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
  if (p1 < 1e-30) {
    std::array<double, 3> e = {a[0][0], a[1][1], a[2][2]};
    std::sort(e.begin(), e.end());
    return e;
  }
  double p2 = 0.0;
  for (int i = 0; i < 3; ++i) p2 += (a[i][i] - q) * (a[i][i] - q);
  p2 += 2.0 * p1;
  double p = std::sqrt(p2 / 6.0);
  Mat3d b{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
  double detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  double r = detb / 2.0;
  r = std::max(-1.0, std::min(1.0, r));
  double phi = std::acos(r) / 3.0;
  double e0 = q + 2.0 * p * std::cos(phi);
  double e2 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  double e1 = 3.0 * q - e0 - e2;
  std::array<double, 3> e = {e0, e1, e2};
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace riem4
