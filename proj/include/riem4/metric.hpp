#pragma once

#include <functional>
#include <utility>

#include "riem4/chart.hpp"
#include "riem4/jet.hpp"
#include "riem4/mat.hpp"

namespace riem4 {

using Jet1d = Jet1<double>;
using Jet2d = Jet2<double>;

// A metric (or symmetric tensor) field evaluable on plain points and on
// jet-seeded points; the jet instantiations carry analytic first and second
// derivatives through every downstream formula.
struct TensorField {
  std::function<Mat4d(const Vec4d&)> value;
  std::function<Mat4<Jet1d>(const Vec4<Jet1d>&)> jet1;
  std::function<Mat4<Jet2d>(const Vec4<Jet2d>&)> jet2;

  Mat4d operator()(const Vec4d& x) const { return value(x); }
};

using MetricField = TensorField;
using SymmetricPerturbation = TensorField;

template <class T>
Vec4<T> seed_jets(const Vec4d& x) {
  Vec4<T> v;
  for (int a = 0; a < 4; ++a) v[a] = T::variable(x[a], a);
  return v;
}

// Build a TensorField from a generic functor callable with any jet scalar.
template <class F>
TensorField make_field(F f) {
  TensorField m;
  m.value = [f](const Vec4d& x) { return f(x); };
  m.jet1 = [f](const Vec4<Jet1d>& x) { return f(x); };
  m.jet2 = [f](const Vec4<Jet2d>& x) { return f(x); };
  return m;
}

namespace detail {

template <class T>
Mat4<T> strip_jet(const Mat4<Jet2<T>>& m) {
  Mat4<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = m[i][j].v;
  return r;
}

}  // namespace detail

// Numerical-derivative fallback for user metrics supplied only as a plain
// closure: central differences of configurable step, wrapped as jets.
inline TensorField make_field_numeric(std::function<Mat4d(const Vec4d&)> f, double step = 1e-4) {
  TensorField m;
  m.value = f;
  auto d1 = [f, step](const Vec4d& x, int a) {
    Vec4d xp = x, xm = x;
    xp[a] += step;
    xm[a] -= step;
    Mat4d gp = f(xp), gm = f(xm);
    Mat4d r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i][j] = (gp[i][j] - gm[i][j]) / (2.0 * step);
    return r;
  };
  auto d2 = [f, step](const Vec4d& x, int a, int b) {
    Mat4d r;
    if (a == b) {
      Vec4d xp = x, xm = x;
      xp[a] += step;
      xm[a] -= step;
      Mat4d gp = f(xp), gm = f(xm), g0 = f(x);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          r[i][j] = (gp[i][j] - 2.0 * g0[i][j] + gm[i][j]) / (step * step);
    } else {
      Vec4d xpp = x, xpm = x, xmp = x, xmm = x;
      xpp[a] += step; xpp[b] += step;
      xpm[a] += step; xpm[b] -= step;
      xmp[a] -= step; xmp[b] += step;
      xmm[a] -= step; xmm[b] -= step;
      Mat4d gpp = f(xpp), gpm = f(xpm), gmp = f(xmp), gmm = f(xmm);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          r[i][j] = (gpp[i][j] - gpm[i][j] - gmp[i][j] + gmm[i][j]) / (4.0 * step * step);
    }
    return r;
  };
  m.jet1 = [f, d1](const Vec4<Jet1d>& xj) {
    Vec4d x;
    for (int a = 0; a < 4; ++a) x[a] = xj[a].v;
    Mat4d g0 = f(x);
    std::array<Mat4d, 4> dg;
    for (int a = 0; a < 4; ++a) dg[a] = d1(x, a);
    Mat4<Jet1d> r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        r[i][j].v = g0[i][j];
        for (int a = 0; a < 4; ++a) r[i][j].d[a] = dg[a][i][j];
      }
    return r;
  };
  m.jet2 = [f, d1, d2](const Vec4<Jet2d>& xj) {
    Vec4d x;
    for (int a = 0; a < 4; ++a) x[a] = xj[a].v;
    Mat4d g0 = f(x);
    std::array<Mat4d, 4> dg;
    for (int a = 0; a < 4; ++a) dg[a] = d1(x, a);
    Mat4<Jet2d> r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        r[i][j].v = g0[i][j];
        for (int a = 0; a < 4; ++a) r[i][j].d[a] = dg[a][i][j];
      }
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) {
        Mat4d dd = d2(x, a, b);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) {
            r[i][j].h[a][b] = dd[i][j];
            r[i][j].h[b][a] = dd[i][j];
          }
      }
    return r;
  };
  return m;
}

// g + t*h, keeping analytic derivatives of both pieces.
inline TensorField perturbed(const TensorField& g, const TensorField& h, double t) {
  TensorField m;
  m.value = [g, h, t](const Vec4d& x) { return g.value(x) + scale(h.value(x), t); };
  m.jet1 = [g, h, t](const Vec4<Jet1d>& x) { return g.jet1(x) + scale(h.jet1(x), t); };
  m.jet2 = [g, h, t](const Vec4<Jet2d>& x) { return g.jet2(x) + scale(h.jet2(x), t); };
  return m;
}

// Conformal rescale u^2 g for a scalar factor field supplied as a generic
// functor of the coordinates.
template <class F>
TensorField conformal(const TensorField& g, F u) {
  TensorField m;
  m.value = [g, u](const Vec4d& x) {
    double s = u(x);
    return scale(g.value(x), s * s);
  };
  m.jet1 = [g, u](const Vec4<Jet1d>& x) {
    auto s = u(x);
    return scale(g.jet1(x), s * s);
  };
  m.jet2 = [g, u](const Vec4<Jet2d>& x) {
    auto s = u(x);
    return scale(g.jet2(x), s * s);
  };
  return m;
}

}  // namespace riem4
