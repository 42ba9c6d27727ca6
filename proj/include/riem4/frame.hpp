#pragma once

#include <cmath>

#include "riem4/metric.hpp"

// Pointwise Levi-Civita curvature data from a metric field with analytic
// second derivatives.
//
// Conventions (pinned by the test suite, not by any external source):
//   R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
//               + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}
//   r_{bd} = R^a_{bad},  s = g^{bd} r_{bd}
// so the round sphere has positive sectional and scalar curvature.

namespace riem4 {

struct PointFrameData {
  Mat4d g;
  Mat4d g_inv;
  double gamma[4][4][4];          // Gamma^a_{bc}
  double dgamma[4][4][4][4];      // d_e Gamma^a_{bc}  (index order: e,a,b,c)
  double riemann[4][4][4][4];     // R_{abcd}, all indices down
  Mat4d ricci;
  double scalar = 0.0;
  Mat4d ricci_traceless;
  double vol = 0.0;               // sqrt(det g)
};

inline PointFrameData frame_data(const MetricField& metric, const Vec4d& x) {
  Mat4<Jet2d> gj = metric.jet2(seed_jets<Jet2d>(x));

  PointFrameData f{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f.g[i][j] = gj[i][j].v;

  Mat4d chol;
  if (!cholesky4(f.g, chol))
    throw DegenerateMetricError("metric is not positive definite at sample point");

  double det = det4(f.g);
  f.g_inv = inv4(f.g, det);
  f.vol = std::sqrt(det);

  double dg[4][4][4];      // d_c g_{ab}
  double ddg[4][4][4][4];  // d_c d_d g_{ab}
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        dg[c][a][b] = gj[a][b].d[c];
        for (int d = 0; d < 4; ++d) ddg[c][d][a][b] = gj[a][b].h[c][d];
      }
    }

  // d_c g^{ab} = -g^{ae} (d_c g_{ef}) g^{fb}
  double dginv[4][4][4];
  for (int c = 0; c < 4; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int e = 0; e < 4; ++e)
          for (int d = 0; d < 4; ++d) s += f.g_inv[a][e] * dg[c][e][d] * f.g_inv[d][b];
        dginv[c][a][b] = -s;
      }

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int d = 0; d < 4; ++d)
          s += f.g_inv[a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c]);
        f.gamma[a][b][c] = 0.5 * s;
      }

  for (int e = 0; e < 4; ++e)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          double s = 0.0;
          for (int d = 0; d < 4; ++d) {
            s += dginv[e][a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c]);
            s += f.g_inv[a][d] * (ddg[e][b][d][c] + ddg[e][c][d][b] - ddg[e][d][b][c]);
          }
          f.dgamma[e][a][b][c] = 0.5 * s;
        }

  // R^a_{bcd}, then lower the first index.
  double rup[4][4][4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = f.dgamma[c][a][d][b] - f.dgamma[d][a][c][b];
          for (int e = 0; e < 4; ++e)
            s += f.gamma[a][c][e] * f.gamma[e][d][b] - f.gamma[a][d][e] * f.gamma[e][c][b];
          rup[a][b][c][d] = s;
        }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int e = 0; e < 4; ++e) s += f.g[a][e] * rup[e][b][c][d];
          f.riemann[a][b][c][d] = s;
        }

  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) s += rup[a][b][a][d];
      f.ricci[b][d] = s;
    }
  f.scalar = 0.0;
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) f.scalar += f.g_inv[b][d] * f.ricci[b][d];

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      f.ricci_traceless[a][b] = f.ricci[a][b] - 0.25 * f.scalar * f.g[a][b];

  return f;
}

inline double scalar_curvature(const MetricField& metric, const Vec4d& x) {
  return frame_data(metric, x).scalar;
}

// First variation of the scalar curvature along g + t h at t = 0:
//   s' = -lap(tr h) + div div h - <h, r>
// with lap f = g^{ab} (d_a d_b f - Gamma^c_{ab} d_c f) the rough Laplacian.
inline double scalar_linearization(const MetricField& metric, const SymmetricPerturbation& h,
                                   const Vec4d& x) {
  PointFrameData f = frame_data(metric, x);
  Mat4<Jet2d> hj = h.jet2(seed_jets<Jet2d>(x));
  Mat4<Jet2d> gj = metric.jet2(seed_jets<Jet2d>(x));

  // tr_g h as a scalar jet: contract with g^{-1} in jet arithmetic.
  Mat4<Jet2d> ginvj = inv4(gj);
  Jet2d trh(0.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) trh = trh + ginvj[a][b] * hj[a][b];

  double lap_trh = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double second = trh.h[a][b];
      for (int c = 0; c < 4; ++c) second -= f.gamma[c][a][b] * trh.d[c];
      lap_trh += f.g_inv[a][b] * second;
    }

  // nabla_d h_{ab} and its coordinate derivative d_c(nabla_d h_{ab}).
  double nh[4][4][4];
  for (int d = 0; d < 4; ++d)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double s = hj[a][b].d[d];
        for (int e = 0; e < 4; ++e)
          s -= f.gamma[e][d][a] * hj[e][b].v + f.gamma[e][d][b] * hj[a][e].v;
        nh[d][a][b] = s;
      }
  auto dnh = [&](int c, int d, int a, int b) {
    double s = hj[a][b].h[c][d];
    for (int e = 0; e < 4; ++e) {
      s -= f.dgamma[c][e][d][a] * hj[e][b].v + f.gamma[e][d][a] * hj[e][b].d[c];
      s -= f.dgamma[c][e][d][b] * hj[a][e].v + f.gamma[e][d][b] * hj[a][e].d[c];
    }
    return s;
  };

  // nabla_c nabla_d h_{ab}, contracted as g^{ca} g^{db} nabla_c nabla_d h_{ab}.
  double divdiv = 0.0;
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          double s = dnh(c, d, a, b);
          for (int e = 0; e < 4; ++e) {
            s -= f.gamma[e][c][d] * nh[e][a][b];
            s -= f.gamma[e][c][a] * nh[d][e][b];
            s -= f.gamma[e][c][b] * nh[d][a][e];
          }
          divdiv += f.g_inv[c][a] * f.g_inv[d][b] * s;
        }

  double hr = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          hr += f.g_inv[a][c] * f.g_inv[b][d] * hj[c][d].v * f.ricci[a][b];

  return -lap_trh + divdiv - hr;
}

// First variation of the volume element: (1/2) tr_g h * sqrt(det g).
inline double volume_linearization(const MetricField& metric, const SymmetricPerturbation& h,
                                   const Vec4d& x) {
  Mat4d g = metric.value(x);
  Mat4d hv = h.value(x);
  Mat4d chol;
  if (!cholesky4(g, chol))
    throw DegenerateMetricError("metric is not positive definite at sample point");
  double det = det4(g);
  Mat4d ginv = inv4(g, det);
  double trh = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) trh += ginv[a][b] * hv[a][b];
  return 0.5 * trh * std::sqrt(det);
}

}  // namespace riem4
