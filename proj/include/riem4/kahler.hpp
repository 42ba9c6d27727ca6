#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "riem4/blocks.hpp"
#include "riem4/frame.hpp"
#include "riem4/two_form.hpp"

// Kahler charts on C^2 from a real potential K(z, zbar). Real coordinates
// are (x1, y1, x2, y2) with z^j = x_j + i y_j and the standard complex
// structure J dx = dy. The induced metric is
//   g(dx_i, dx_j) = g(dy_i, dy_j) = 2 Re H_ij,   g(dx_i, dy_j) = 2 Im H_ij
// with H_ij = dd K / dz^i dzbar^j, so the flat potential |z1|^2 + |z2|^2
// gives twice the Euclidean metric. All derivatives are exact via nested
// jets: the Ricci form needs four derivatives of the potential, the Maxwell
// field residual five.

namespace riem4 {

// Closed-form potential grammar: sum of terms c * f(b + a1*u1 + a2*u2)
// with u_i = |z^i|^2 and f one of {identity, log, exp}, plus monomials
// c * u1^p1 * u2^p2.
struct PotentialTerm {
  enum class Kind { Linear, Log, Exp, Monomial };
  Kind kind = Kind::Linear;
  double coeff = 1.0;
  double a1 = 0.0, a2 = 0.0, b = 0.0;
  int p1 = 0, p2 = 0;  // Monomial only

  template <class T>
  T eval(const T& u1, const T& u2) const {
    switch (kind) {
      case Kind::Linear:
        return (u1 * a1 + u2 * a2 + b) * coeff;
      case Kind::Log:
        return log(u1 * a1 + u2 * a2 + b) * coeff;
      case Kind::Exp:
        return exp(u1 * a1 + u2 * a2 + b) * coeff;
      case Kind::Monomial:
        return ipow(u1, p1) * ipow(u2, p2) * coeff;
    }
    return T(0.0);
  }
};

struct KahlerPotential {
  std::vector<PotentialTerm> terms;

  template <class T>
  T eval_real(const Vec4<T>& x) const {
    T u1 = x[0] * x[0] + x[1] * x[1];
    T u2 = x[2] * x[2] + x[3] * x[3];
    T s(0.0);
    for (const auto& t : terms) s = s + t.eval(u1, u2);
    return s;
  }

  static KahlerPotential flat() {
    return {{{PotentialTerm::Kind::Linear, 1.0, 1.0, 1.0, 0.0, 0, 0}}};
  }
  // Round S^2(a) x S^2(b): factor metrics 4a^2/(1+|z|^2)^2 |dz|^2.
  static KahlerPotential sphere_product(double a, double b) {
    return {{{PotentialTerm::Kind::Log, 2.0 * a * a, 1.0, 0.0, 1.0, 0, 0},
             {PotentialTerm::Kind::Log, 2.0 * b * b, 0.0, 1.0, 1.0, 0, 0}}};
  }
  // Fubini-Study on the affine chart of CP^2.
  static KahlerPotential fubini_study() {
    return {{{PotentialTerm::Kind::Log, 1.0, 1.0, 1.0, 1.0, 0, 0}}};
  }
  // Poincare-disk product, curvature -1 per factor.
  static KahlerPotential hyperbolic_product() {
    return {{{PotentialTerm::Kind::Log, -2.0, -1.0, 0.0, 1.0, 0, 0},
             {PotentialTerm::Kind::Log, -2.0, 0.0, -1.0, 1.0, 0, 0}}};
  }
};

namespace detail {

// Hermitian H_ij = dd K / dz^i dzbar^j from the real Hessian of K at a
// jet-seeded point. Returns the four independent real numbers
// (ReH11, ReH22, ReH12, ImH12) as scalars of type T.
template <class T>
struct HermitianHessian {
  T re11, re22, re12, im12;
};

template <class T>
HermitianHessian<T> hermitian_hessian(const KahlerPotential& pot, const Vec4<T>& x) {
  Jet2<T> k = [&] {
    Vec4<Jet2<T>> xs;
    for (int a = 0; a < 4; ++a) xs[a] = Jet2<T>::variable(x[a], a);
    return pot.eval_real(xs);
  }();
  // H_ij = (1/4)[(K_{x_i x_j} + K_{y_i y_j}) + i (K_{x_i y_j} - K_{y_i x_j})]
  // with x_1,y_1,x_2,y_2 at slots 0,1,2,3.
  HermitianHessian<T> h;
  h.re11 = (k.h[0][0] + k.h[1][1]) * 0.25;
  h.re22 = (k.h[2][2] + k.h[3][3]) * 0.25;
  h.re12 = (k.h[0][2] + k.h[1][3]) * 0.25;
  h.im12 = (k.h[0][3] - k.h[1][2]) * 0.25;
  return h;
}

// Assemble the real symmetric matrix 2 Re(H dz dzbar) in (x1,y1,x2,y2).
template <class T>
Mat4<T> real_metric(const HermitianHessian<T>& h) {
  Mat4<T> g = mat4_zero<T>();
  g[0][0] = h.re11 * 2.0;
  g[1][1] = h.re11 * 2.0;
  g[2][2] = h.re22 * 2.0;
  g[3][3] = h.re22 * 2.0;
  g[0][2] = h.re12 * 2.0;
  g[2][0] = g[0][2];
  g[1][3] = h.re12 * 2.0;
  g[3][1] = g[1][3];
  g[0][3] = h.im12 * 2.0;
  g[3][0] = g[0][3];
  g[1][2] = h.im12 * -2.0;
  g[2][1] = g[1][2];
  return g;
}

// The 2-form i H_ij dz^i ^ dzbar^j in real components.
template <class T>
Mat4<T> hermitian_two_form(const HermitianHessian<T>& h) {
  Mat4<T> w = mat4_zero<T>();
  auto set = [&w](int a, int b, const T& v) {
    w[a][b] = v;
    w[b][a] = -v;
  };
  set(0, 1, h.re11 * 2.0);   // dx1^dy1
  set(2, 3, h.re22 * 2.0);   // dx2^dy2
  set(0, 3, h.re12 * 2.0);   // dx1^dy2
  set(2, 1, h.re12 * 2.0);   // dx2^dy1
  set(0, 2, h.im12 * -2.0);  // dx1^dx2
  set(1, 3, h.im12 * -2.0);  // dy1^dy2
  return w;
}

template <class T>
T log_det_hermitian(const KahlerPotential& pot, const Vec4<T>& x) {
  HermitianHessian<T> h = hermitian_hessian(pot, x);
  return log(h.re11 * h.re22 - h.re12 * h.re12 - h.im12 * h.im12);
}

}  // namespace detail

struct KahlerChart {
  KahlerPotential potential;
  Chart chart;           // sample box in (x1,y1,x2,y2)
  int orientation = +1;  // complex orientation of the coordinate order

  template <class T>
  Mat4<T> metric_at(const Vec4<T>& x) const {
    auto h = detail::hermitian_hessian(pot_(), x);
    return detail::real_metric(h);
  }

  MetricField metric_field() const {
    KahlerPotential p = potential;
    return make_field([p](const auto& x) {
      using T = std::decay_t<decltype(x[0])>;
      auto h = detail::hermitian_hessian(p, x);
      Mat4<T> g = detail::real_metric(h);
      return g;
    });
  }

  // Kahler form omega = g(J., .).
  template <class T>
  Mat4<T> kahler_form_at(const Vec4<T>& x) const {
    return detail::hermitian_two_form(detail::hermitian_hessian(pot_(), x));
  }

  // Ricci form rho = -i ddbar log det H.
  template <class T>
  Mat4<T> ricci_form_at(const Vec4<T>& x) const {
    const KahlerPotential& p = pot_();
    Vec4<Jet2<T>> xs;
    for (int a = 0; a < 4; ++a) xs[a] = Jet2<T>::variable(x[a], a);
    Jet2<T> u = detail::log_det_hermitian(p, xs);
    detail::HermitianHessian<T> hu;
    hu.re11 = (u.h[0][0] + u.h[1][1]) * 0.25;
    hu.re22 = (u.h[2][2] + u.h[3][3]) * 0.25;
    hu.re12 = (u.h[0][2] + u.h[1][3]) * 0.25;
    hu.im12 = (u.h[0][3] - u.h[1][2]) * 0.25;
    Mat4<T> rho = detail::hermitian_two_form(hu);
    for (auto& row : rho)
      for (auto& v : row) v = -v;
    return rho;
  }

 private:
  const KahlerPotential& pot_() const { return potential; }
};

inline TwoForm kahler_form(const KahlerChart& kc, const Vec4d& x) {
  Mat4d g = kc.metric_at(x);
  if (!is_spd4(g)) throw DegenerateMetricError("kahler_form: potential Hessian not positive definite");
  return kc.kahler_form_at(x);
}

inline TwoForm ricci_form(const KahlerChart& kc, const Vec4d& x) { return kc.ricci_form_at(x); }

// A Maxwell field with first-derivative access.
struct MaxwellField {
  std::function<TwoForm(const Vec4d&)> value;
  std::function<Mat4<Jet1d>(const Vec4<Jet1d>&)> jet1;
};

struct NonConstantScalarError : std::runtime_error {
  double spread;
  NonConstantScalarError(const std::string& msg, double sp) : std::runtime_error(msg), spread(sp) {}
};

inline double scalar_spread(const KahlerChart& kc, const std::vector<Vec4d>& samples,
                            double* mean_out = nullptr) {
  MetricField g = kc.metric_field();
  double smin = 0.0, smax = 0.0, sum = 0.0;
  bool first = true;
  for (const auto& x : samples) {
    double s = frame_data(g, x).scalar;
    if (first) {
      smin = smax = s;
      first = false;
    }
    smin = std::min(smin, s);
    smax = std::max(smax, s);
    sum += s;
  }
  if (mean_out) *mean_out = sum / samples.size();
  double scale = std::max(1.0, std::max(std::abs(smin), std::abs(smax)));
  return (smax - smin) / scale;
}

// F = omega + ring(rho)/2 for a constant-scalar-curvature Kahler chart.
// The constancy gate (relative spread <= tol over the samples) is the
// construction's precondition; the gate failure carries the spread.
inline MaxwellField canonical_maxwell(const KahlerChart& kc, const std::vector<Vec4d>& samples,
                                      double constancy_tol = 1e-6) {
  double s_mean = 0.0;
  double spread = scalar_spread(kc, samples, &s_mean);
  if (spread > constancy_tol)
    throw NonConstantScalarError("canonical_maxwell: scalar curvature is not constant on the chart",
                                 spread);
  KahlerChart chart = kc;
  auto eval = [chart, s_mean](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    Mat4<T> omega = chart.kahler_form_at(x);
    Mat4<T> rho = chart.ricci_form_at(x);
    Mat4<T> f;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        f[a][b] = omega[a][b] + (rho[a][b] - omega[a][b] * (s_mean / 4.0)) * 0.5;
    return f;
  };
  MaxwellField F;
  F.value = [eval](const Vec4d& x) { return eval(x); };
  F.jet1 = [eval](const Vec4<Jet1d>& x) { return eval(x); };
  return F;
}

inline MaxwellField kahler_form_field(const KahlerChart& kc) {
  KahlerChart chart = kc;
  MaxwellField F;
  F.value = [chart](const Vec4d& x) { return chart.kahler_form_at(x); };
  F.jet1 = [chart](const Vec4<Jet1d>& x) { return chart.kahler_form_at(x); };
  return F;
}

// Max-norm of the exterior derivative (dF)_{abc} = d_a F_bc + d_b F_ca + d_c F_ab.
inline double exterior_derivative_norm(const Mat4<Jet1d>& fj) {
  double m = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        double v = fj[b][c].d[a] + fj[c][a].d[b] + fj[a][b].d[c];
        m = std::max(m, std::abs(v));
      }
  return m;
}

struct EmResidual {
  double dF = 0.0;       // max |dF|
  double dstarF = 0.0;   // max |d star F|
  double einstein = 0.0; // max |[r + F o F]_0| (tensor norm)
};

// Residuals of the Einstein-Maxwell system dF = 0, d*F = 0, [r + FoF]_0 = 0,
// maximized over the sample set.
inline EmResidual em_residual(const MetricField& metric, const MaxwellField& F,
                              const std::vector<Vec4d>& samples) {
  EmResidual r;
  for (const auto& x : samples) {
    Vec4<Jet1d> xj = seed_jets<Jet1d>(x);
    Mat4<Jet1d> fj = F.jet1(xj);
    r.dF = std::max(r.dF, exterior_derivative_norm(fj));

    Mat4<Jet1d> gj = metric.jet1(xj);
    Mat4<Jet1d> sfj = hodge_star(gj, +1, fj);
    r.dstarF = std::max(r.dstarF, exterior_derivative_norm(sfj));

    PointFrameData fd = frame_data(metric, x);
    TwoForm fv = F.value(x);
    Mat4d t = traceless(fd.g, fd.ricci + compose(fd.g, fv, fv));
    r.einstein = std::max(r.einstein, std::sqrt(std::max(0.0, tensor_norm_sq(t, fd.g_inv))));
  }
  return r;
}

// Max over samples of | |W+|^2 - s^2/24 | for the chart's own metric and
// complex orientation.
inline double kahler_identity_check(const KahlerChart& kc, const std::vector<Vec4d>& samples) {
  MetricField g = kc.metric_field();
  double m = 0.0;
  for (const auto& x : samples) {
    auto cb = curvature_blocks(frame_data(g, x), kc.orientation);
    auto n = pointwise_norms(cb);
    m = std::max(m, std::abs(n.w_plus_sq - n.scalar_sq / 24.0));
  }
  return m;
}

}  // namespace riem4
