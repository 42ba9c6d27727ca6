#pragma once

#include <cmath>

#include "riem4/mat.hpp"

// Pointwise algebra of 2-forms on an oriented Riemannian 4-dimensional
// tangent space. A TwoForm is its antisymmetric coordinate-component matrix.
//
// Inner product convention: <F,G> = (1/2) F_{ab} G^{ab}, so a unit
// coordinate plane dx^a ^ dx^b has norm 1 in an orthonormal frame.

namespace riem4 {

template <class T>
using TwoFormT = Mat4<T>;
using TwoForm = Mat4d;

// Signed permutation symbol, eps_{0123} = +1.
inline int levi_civita(int a, int b, int c, int d) {
  int p[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) {
        std::swap(p[i], p[j]);
        sign = -sign;
      }
    }
  return sign;
}

template <class T>
TwoFormT<T> raise_indices(const Mat4<T>& ginv, const TwoFormT<T>& f) {
  TwoFormT<T> up = mat4_zero<T>();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      T s(0.0);
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) s = s + ginv[a][c] * ginv[b][d] * f[c][d];
      up[a][b] = s;
    }
  return up;
}

template <class T>
T form_inner(const Mat4<T>& ginv, const TwoFormT<T>& f, const TwoFormT<T>& g) {
  TwoFormT<T> gup = raise_indices(ginv, g);
  T s(0.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) s = s + f[a][b] * gup[a][b];
  return s * 0.5;
}

// (*F)_{ab} = (1/2) sqrt(det g) eps_{abcd} F^{cd}, orientation = +-1 flips eps.
template <class T>
TwoFormT<T> hodge_star(const Mat4<T>& g, int orientation, const TwoFormT<T>& f) {
  T det = det4(g);
  if (scalar_value(det) <= 0.0)
    throw DegenerateMetricError("hodge_star: metric has non-positive determinant");
  Mat4<T> ginv = inv4(g, det);
  TwoFormT<T> fup = raise_indices(ginv, f);
  T vol = sqrt(det);
  TwoFormT<T> r = mat4_zero<T>();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      T s(0.0);
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          int e = levi_civita(a, b, c, d);
          if (e != 0) s = s + fup[c][d] * (0.5 * e * orientation);
        }
      r[a][b] = s * vol;
    }
  return r;
}

struct SplitForm {
  TwoForm plus;
  TwoForm minus;
};

inline SplitForm split(const Mat4d& g, int orientation, const TwoForm& f) {
  TwoForm sf = hodge_star(g, orientation, f);
  SplitForm r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      r.plus[a][b] = 0.5 * (f[a][b] + sf[a][b]);
      r.minus[a][b] = 0.5 * (f[a][b] - sf[a][b]);
    }
  return r;
}

// (F o G)_{jk} = F_j^l G_{lk}: composition as endomorphisms of TM.
template <class T>
Mat4<T> compose(const Mat4<T>& g, const TwoFormT<T>& f, const TwoFormT<T>& gform) {
  Mat4<T> ginv = inv4(g);
  Mat4<T> r = mat4_zero<T>();
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      T s(0.0);
      for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m) s = s + f[j][m] * ginv[m][l] * gform[l][k];
      r[j][k] = s;
    }
  return r;
}

// Trace-free part with respect to g.
template <class T>
Mat4<T> traceless(const Mat4<T>& g, const Mat4<T>& t) {
  Mat4<T> ginv = inv4(g);
  T tr(0.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) tr = tr + ginv[a][b] * t[a][b];
  Mat4<T> r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r[a][b] = t[a][b] - g[a][b] * (tr * 0.25);
  return r;
}

// Max-norm residual of [F o F]_0 = 2 F^+ o F^-.
inline double traceless_composition_identity(const Mat4d& g, int orientation, const TwoForm& f) {
  SplitForm s = split(g, orientation, f);
  Mat4d lhs = traceless(g, compose(g, f, f));
  Mat4d rhs = scale(compose(g, s.plus, s.minus), 2.0);
  return max_abs(lhs - rhs);
}

}  // namespace riem4
