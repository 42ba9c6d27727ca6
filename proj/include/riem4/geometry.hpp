#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "riem4/kahler.hpp"
#include "riem4/metric.hpp"
#include "riem4/quadrature.hpp"

// Built-in compact example geometries. Each carries an integration chart
// with a closed-form metric (fast to differentiate), a node generator that
// folds in any fundamental-domain normalization, topological invariants,
// and -- for the Kahler examples -- a potential chart used by the
// Einstein-Maxwell and Kahler-identity checks.

namespace riem4 {

struct Geometry {
  std::string name;
  int chi = 0;
  int tau = 0;
  MetricField metric;  // integration-chart metric
  Chart chart;
  int orientation = +1;
  std::function<std::vector<QuadratureNode>(int)> nodes;  // includes weights
  std::optional<KahlerChart> kahler;  // pointwise-check chart (may differ from integration chart)
  bool constant_scalar = true;
  double c1_dot_omega = 0.0;  // pairing numbers of the Kahler class
  double omega_sq = 0.0;
};

namespace detail {

inline std::function<std::vector<QuadratureNode>(int)> plain_nodes(Chart chart) {
  return [chart](int res) { return product_rule(chart, res); };
}

}  // namespace detail

inline Geometry flat_torus_geometry() {
  Geometry g;
  g.name = "flat_torus";
  g.chi = 0;
  g.tau = 0;
  g.chart = Chart::torus();
  g.metric = make_field([](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    return mat4_identity<T>();
  });
  g.nodes = detail::plain_nodes(g.chart);
  KahlerChart kc;
  kc.potential = KahlerPotential::flat();
  kc.chart = Chart::box(-0.5, 0.5);
  g.kahler = kc;
  g.c1_dot_omega = 0.0;
  g.omega_sq = 2.0 * std::pow(2.0 * M_PI, 4);
  return g;
}

// Round S^2(a) x S^2(b) in double spherical coordinates
// (theta1, phi1, theta2, phi2).
inline Geometry sphere_product_geometry(double a, double b) {
  Geometry g;
  g.name = "sphere_product";
  g.chi = 4;
  g.tau = 0;
  g.chart = Chart({{{0.0, M_PI}, {0.0, 2.0 * M_PI}, {0.0, M_PI}, {0.0, 2.0 * M_PI}}},
                  {false, true, false, true});
  g.metric = make_field([a, b](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    Mat4<T> m = mat4_zero<T>();
    T s1 = sin(x[0]), s2 = sin(x[2]);
    m[0][0] = T(a * a);
    m[1][1] = s1 * s1 * (a * a);
    m[2][2] = T(b * b);
    m[3][3] = s2 * s2 * (b * b);
    return m;
  });
  g.nodes = detail::plain_nodes(g.chart);
  KahlerChart kc;
  kc.potential = KahlerPotential::sphere_product(a, b);
  kc.chart = Chart::box(-0.4, 0.4);
  g.kahler = kc;
  g.c1_dot_omega = 8.0 * M_PI * (a * a + b * b);
  g.omega_sq = 32.0 * M_PI * M_PI * a * a * b * b;
  return g;
}

// Product of two genus-2 hyperbolic surfaces (curvature -1). The chart is a
// coordinate box inside the Poincare-disk product; weights are rescaled so
// the box integrates like one fundamental domain of total volume
// (4 pi)^2 = 16 pi^2 (area 4 pi per genus-2 factor by Gauss-Bonnet). For
// the constant-curvature integrands this reduction is exact.
inline Geometry hyperbolic_product_geometry() {
  Geometry g;
  g.name = "hyperbolic_product";
  g.chi = 4;
  g.tau = 0;
  g.chart = Chart::box(-0.5, 0.5);
  g.metric = make_field([](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    Mat4<T> m = mat4_zero<T>();
    T u1 = x[0] * x[0] + x[1] * x[1];
    T u2 = x[2] * x[2] + x[3] * x[3];
    T f1 = 4.0 / ((1.0 - u1) * (1.0 - u1));
    T f2 = 4.0 / ((1.0 - u2) * (1.0 - u2));
    m[0][0] = f1;
    m[1][1] = f1;
    m[2][2] = f2;
    m[3][3] = f2;
    return m;
  });
  Chart chart = g.chart;
  MetricField metric = g.metric;
  g.nodes = [chart, metric](int res) {
    auto nodes = product_rule(chart, res);
    std::vector<double> vols;
    vols.reserve(nodes.size());
    for (const auto& n : nodes) vols.push_back(n.weight * std::sqrt(det4(metric.value(n.x))));
    double v_box = pairwise_sum(std::move(vols));
    double scale = 16.0 * M_PI * M_PI / v_box;
    for (auto& n : nodes) n.weight *= scale;
    return nodes;
  };
  KahlerChart kc;
  kc.potential = KahlerPotential::hyperbolic_product();
  kc.chart = Chart::box(-0.35, 0.35);
  g.kahler = kc;
  g.c1_dot_omega = -16.0 * M_PI;
  g.omega_sq = 32.0 * M_PI * M_PI;
  return g;
}

// Fubini-Study on the affine chart of CP^2, integrated through the joint
// polar substitution z_1 = tan(u) cos(a) e^{i theta_1},
// z_2 = tan(u) sin(a) e^{i theta_2} with u, a in (0, pi/2) Gauss-Legendre
// and periodic thetas. u = pi/2 is the line at infinity; smooth functions
// on the projective plane pull back smoothly, so the rule converges
// spectrally. Coordinate measure: tan^3(u) sec^2(u) cos(a) sin(a).
inline Geometry fubini_study_geometry() {
  Geometry g;
  g.name = "fubini_study";
  g.chi = 3;
  g.tau = 1;
  KahlerChart kc;
  kc.potential = KahlerPotential::fubini_study();
  kc.chart = Chart::box(-0.45, 0.45);
  g.kahler = kc;
  // closed-form Hermitian Hessian of log(1 + |z|^2): H = I/w - zbar z^T/w^2
  g.metric = make_field([](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    T u1 = x[0] * x[0] + x[1] * x[1];
    T u2 = x[2] * x[2] + x[3] * x[3];
    T w = u1 + u2 + 1.0;
    T iw = 1.0 / w, iw2 = iw * iw;
    detail::HermitianHessian<T> h;
    h.re11 = iw - u1 * iw2;
    h.re22 = iw - u2 * iw2;
    h.re12 = (x[0] * x[2] + x[1] * x[3]) * iw2 * -1.0;
    h.im12 = (x[0] * x[3] - x[2] * x[1]) * iw2 * -1.0;
    return detail::real_metric(h);
  });
  g.chart = Chart({{{0.0, M_PI / 2}, {0.0, 2.0 * M_PI}, {0.0, M_PI / 2}, {0.0, 2.0 * M_PI}}},
                  {false, true, false, true});
  Chart uchart = g.chart;
  g.nodes = [uchart](int res) {
    auto raw = product_rule(uchart, res);
    std::vector<QuadratureNode> nodes;
    nodes.reserve(raw.size());
    for (const auto& n : raw) {
      double u = n.x[0], a = n.x[2];
      double tu = std::tan(u), su = std::sin(u), cu = std::cos(u);
      double r1 = tu * std::cos(a), r2 = tu * std::sin(a);
      double jac = (su * su * su) / (cu * cu * cu * cu * cu) * std::cos(a) * std::sin(a);
      nodes.push_back({{r1 * std::cos(n.x[1]), r1 * std::sin(n.x[1]), r2 * std::cos(n.x[3]),
                        r2 * std::sin(n.x[3])},
                       n.weight * jac});
    }
    return nodes;
  };
  g.c1_dot_omega = 6.0 * M_PI;
  g.omega_sq = 4.0 * M_PI * M_PI;
  return g;
}

// User-supplied potential on a coordinate box; topology unknown (chi/tau
// must come from the scenario when topological checks are requested).
inline Geometry kahler_potential_geometry(KahlerPotential pot, double half_width = 0.4) {
  Geometry g;
  g.name = "kahler_potential";
  KahlerChart kc;
  kc.potential = std::move(pot);
  kc.chart = Chart::box(-half_width, half_width);
  g.kahler = kc;
  g.metric = kc.metric_field();
  g.chart = kc.chart;
  g.nodes = detail::plain_nodes(g.chart);
  g.constant_scalar = false;  // not assumed; checks may establish it
  return g;
}

}  // namespace riem4
