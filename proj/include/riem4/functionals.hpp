#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "riem4/blocks.hpp"
#include "riem4/geometry.hpp"
#include "riem4/quadrature.hpp"

// Curvature functionals by quadrature and the integral identity checks they
// feed. One pass over the node set evaluates the full curvature decomposition
// per node and caches every integrand; all identity checks then share one
// norm convention by construction.

namespace riem4 {

struct CurvatureSamples {
  std::vector<QuadratureNode> nodes;
  std::vector<PointwiseNorms> norms;
  std::vector<double> vol;  // sqrt(det g) at each node
};

inline CurvatureSamples curvature_samples(const Geometry& geo, int resolution) {
  CurvatureSamples cs;
  cs.nodes = geo.nodes(resolution);
  cs.norms.reserve(cs.nodes.size());
  cs.vol.reserve(cs.nodes.size());
  for (const auto& n : cs.nodes) {
    PointFrameData f = frame_data(geo.metric, n.x);
    cs.norms.push_back(pointwise_norms(curvature_blocks(f, geo.orientation)));
    cs.vol.push_back(f.vol);
  }
  return cs;
}

// integral of w(node index) against the cached volume weights
template <class F>
double integrate_samples(const CurvatureSamples& cs, F&& pointwise) {
  std::vector<double> terms(cs.nodes.size());
  for (size_t i = 0; i < cs.nodes.size(); ++i)
    terms[i] = cs.nodes[i].weight * cs.vol[i] * pointwise(i);
  return pairwise_sum(std::move(terms));
}

template <class F>
double integrate(const Geometry& geo, F&& f, int resolution) {
  auto nodes = geo.nodes(resolution);
  std::vector<double> terms(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    double v = std::sqrt(det4(geo.metric.value(nodes[i].x)));
    terms[i] = nodes[i].weight * v * f(nodes[i].x);
  }
  return pairwise_sum(std::move(terms));
}

struct FunctionalReport {
  double volume = 0.0;
  double total_scalar = 0.0;
  double action_s2 = 0.0;     // integral of s^2
  double action_ric2 = 0.0;   // integral of |r|^2
  double action_riem2 = 0.0;  // integral of |R|^2 (curvature operator norm)
  double action_w_plus = 0.0;
  double action_w_minus = 0.0;
  double action_sw = 0.0;     // integral of (s - sqrt6 |W+|)^2
  std::map<std::string, double> residuals;
};

// Euler-characteristic integrand check:
// (1/4pi^2) integral of (s^2/24 + 2|W+|^2 - |ring r|^2/2) = 2 chi + 3 tau.
inline double gauss_bonnet_check(const CurvatureSamples& cs, int chi, int tau) {
  double I = integrate_samples(cs, [&](size_t i) {
    const auto& n = cs.norms[i];
    return n.scalar_sq / 24.0 + 2.0 * n.w_plus_sq - 0.5 * n.ricci_traceless_sq;
  });
  return std::abs(I / (4.0 * M_PI * M_PI) - (2.0 * chi + 3.0 * tau));
}

// integral of |r|^2 = -8pi^2(2chi+3tau) + 8 integral of (s^2/24 + |W+|^2/2),
// residual relative to 8pi^2 scale.
inline double ricci_identity_check(const CurvatureSamples& cs, int chi, int tau) {
  double lhs = integrate_samples(cs, [&](size_t i) {
    const auto& n = cs.norms[i];
    return n.ricci_traceless_sq + n.scalar_sq / 4.0;
  });
  double rhs = -8.0 * M_PI * M_PI * (2.0 * chi + 3.0 * tau) +
               8.0 * integrate_samples(cs, [&](size_t i) {
                 const auto& n = cs.norms[i];
                 return n.scalar_sq / 24.0 + 0.5 * n.w_plus_sq;
               });
  return std::abs(lhs - rhs) / (8.0 * M_PI * M_PI);
}

// integral of |R|^2 = -8pi^2(chi+3tau) + 2 integral of (s^2/24 + 2|W+|^2).
inline double riemann_identity_check(const CurvatureSamples& cs, int chi, int tau) {
  double lhs = integrate_samples(cs, [&](size_t i) { return cs.norms[i].riemann_op_sq; });
  double rhs = -8.0 * M_PI * M_PI * (chi + 3.0 * tau) +
               2.0 * integrate_samples(cs, [&](size_t i) {
                 const auto& n = cs.norms[i];
                 return n.scalar_sq / 24.0 + 2.0 * n.w_plus_sq;
               });
  return std::abs(lhs - rhs) / (8.0 * M_PI * M_PI);
}

// (1/12pi^2) integral of (|W+|^2 - |W-|^2) = tau.
inline double signature_check(const CurvatureSamples& cs, int tau) {
  double I = integrate_samples(cs, [&](size_t i) { return cs.norms[i].w_plus_sq - cs.norms[i].w_minus_sq; });
  return std::abs(I / (12.0 * M_PI * M_PI) - tau);
}

// Relative residual of integral of s^2 = 32 pi^2 (c1.[omega])^2 / [omega]^2,
// the equality case of the scalar-curvature bound on CSC Kahler metrics.
inline double calabi_equality_check(const CurvatureSamples& cs, double c1_dot_omega, double omega_sq) {
  double lhs = integrate_samples(cs, [&](size_t i) { return cs.norms[i].scalar_sq; });
  double rhs = 32.0 * M_PI * M_PI * c1_dot_omega * c1_dot_omega / omega_sq;
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

// integral of (s - sqrt6 |W+|)^2 minus the supplied right-hand side.
inline double sw_integrand_bound(const CurvatureSamples& cs, double rhs) {
  double lhs = integrate_samples(cs, [&](size_t i) {
    const auto& n = cs.norms[i];
    double d = n.scalar - std::sqrt(6.0 * n.w_plus_sq);
    return d * d;
  });
  return lhs - rhs;
}

inline FunctionalReport functional_report(const Geometry& geo, int resolution) {
  CurvatureSamples cs = curvature_samples(geo, resolution);
  FunctionalReport r;
  r.volume = integrate_samples(cs, [](size_t) { return 1.0; });
  r.total_scalar = integrate_samples(cs, [&](size_t i) { return cs.norms[i].scalar; });
  r.action_s2 = integrate_samples(cs, [&](size_t i) { return cs.norms[i].scalar_sq; });
  r.action_ric2 = integrate_samples(cs, [&](size_t i) {
    return cs.norms[i].ricci_traceless_sq + cs.norms[i].scalar_sq / 4.0;
  });
  r.action_riem2 = integrate_samples(cs, [&](size_t i) { return cs.norms[i].riemann_op_sq; });
  r.action_w_plus = integrate_samples(cs, [&](size_t i) { return cs.norms[i].w_plus_sq; });
  r.action_w_minus = integrate_samples(cs, [&](size_t i) { return cs.norms[i].w_minus_sq; });
  r.action_sw = integrate_samples(cs, [&](size_t i) {
    double d = cs.norms[i].scalar - std::sqrt(6.0 * cs.norms[i].w_plus_sq);
    return d * d;
  });
  r.residuals["gauss_bonnet"] = gauss_bonnet_check(cs, geo.chi, geo.tau);
  r.residuals["ricci_identity"] = ricci_identity_check(cs, geo.chi, geo.tau);
  r.residuals["riemann_identity"] = riemann_identity_check(cs, geo.chi, geo.tau);
  r.residuals["signature"] = signature_check(cs, geo.tau);
  if (geo.constant_scalar && geo.omega_sq > 0.0)
    r.residuals["calabi_equality"] = calabi_equality_check(cs, geo.c1_dot_omega, geo.omega_sq);
  return r;
}

struct VariationReport {
  double analytic = 0.0;             // d/dt integral of s^2 at t = 0
  std::vector<double> t_values;
  std::vector<double> finite_diff;   // central differences at each t
  std::vector<double> richardson;    // error(t) / error(t/2)
  double relative_error = 0.0;       // at the smallest t
};

inline double s2_action(const MetricField& g, const std::vector<QuadratureNode>& nodes) {
  std::vector<double> terms(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    PointFrameData f = frame_data(g, nodes[i].x);
    terms[i] = nodes[i].weight * f.vol * f.scalar * f.scalar;
  }
  return pairwise_sum(std::move(terms));
}

// d/dt integral of s^2 dmu along g + t h:
// integral of (2 s sdot + (1/2) s^2 tr_g h) dmu, compared against central
// finite differences of the action. t_values should be decreasing by 2x for
// the Richardson ratios.
inline VariationReport first_variation_check(const Geometry& geo, const SymmetricPerturbation& h,
                                             std::vector<double> t_values, int resolution) {
  VariationReport rep;
  rep.t_values = std::move(t_values);
  auto nodes = geo.nodes(resolution);

  std::vector<double> terms(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    const auto& x = nodes[i].x;
    PointFrameData f = frame_data(geo.metric, x);
    double sdot = scalar_linearization(geo.metric, h, x);
    Mat4d hx = h.value(x);
    double trh = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) trh += f.g_inv[a][b] * hx[a][b];
    terms[i] = nodes[i].weight * f.vol * (2.0 * f.scalar * sdot + 0.5 * f.scalar * f.scalar * trh);
  }
  rep.analytic = pairwise_sum(std::move(terms));

  for (double t : rep.t_values) {
    double plus = s2_action(perturbed(geo.metric, h, t), nodes);
    double minus = s2_action(perturbed(geo.metric, h, -t), nodes);
    rep.finite_diff.push_back((plus - minus) / (2.0 * t));
  }
  for (size_t i = 0; i + 1 < rep.finite_diff.size(); ++i) {
    double e0 = rep.finite_diff[i] - rep.analytic;
    double e1 = rep.finite_diff[i + 1] - rep.analytic;
    rep.richardson.push_back(e1 != 0.0 ? e0 / e1 : 0.0);
  }
  if (!rep.finite_diff.empty()) {
    double fd = rep.finite_diff.back();
    double scale = std::max({1.0, std::abs(rep.analytic), std::abs(fd)});
    rep.relative_error = std::abs(fd - rep.analytic) / scale;
  }
  return rep;
}

// residual(resolution) table for convergence reporting
template <class CheckFn>
std::map<int, double> convergence_table(const Geometry& geo, CheckFn&& check,
                                        std::vector<int> resolutions) {
  std::map<int, double> table;
  for (int res : resolutions) {
    CurvatureSamples cs = curvature_samples(geo, res);
    table[res] = check(cs);
  }
  return table;
}

}  // namespace riem4
