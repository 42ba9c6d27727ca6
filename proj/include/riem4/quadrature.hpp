#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "riem4/chart.hpp"

// Product quadrature on chart boxes: Gauss-Legendre on non-periodic axes,
// uniform trapezoid (= midpoint) on periodic ones. Node sets are built once
// per (chart, resolution) and reused by every integrand.

namespace riem4 {

struct QuadratureNode {
  Vec4d x;
  double weight;
};

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // recurrence for P_n(x) and P_n'(x)
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

struct AxisRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline AxisRule axis_rule(const Interval& iv, bool periodic, int n) {
  AxisRule r;
  if (periodic) {
    double h = iv.length() / n;
    for (int i = 0; i < n; ++i) {
      r.nodes.push_back(iv.lo + (i + 0.5) * h);
      r.weights.push_back(h);
    }
  } else {
    std::vector<double> xs, ws;
    gauss_legendre(n, xs, ws);
    double mid = 0.5 * (iv.lo + iv.hi), half = 0.5 * iv.length();
    for (int i = 0; i < n; ++i) {
      r.nodes.push_back(mid + half * xs[i]);
      r.weights.push_back(half * ws[i]);
    }
  }
  return r;
}

inline std::vector<QuadratureNode> product_rule(const Chart& chart, int per_axis) {
  std::array<AxisRule, 4> ax;
  for (int a = 0; a < 4; ++a) ax[a] = axis_rule(chart.bounds[a], chart.periodic[a], per_axis);
  std::vector<QuadratureNode> nodes;
  nodes.reserve(static_cast<size_t>(per_axis) * per_axis * per_axis * per_axis);
  for (int i0 = 0; i0 < per_axis; ++i0)
    for (int i1 = 0; i1 < per_axis; ++i1)
      for (int i2 = 0; i2 < per_axis; ++i2)
        for (int i3 = 0; i3 < per_axis; ++i3)
          nodes.push_back({{ax[0].nodes[i0], ax[1].nodes[i1], ax[2].nodes[i2], ax[3].nodes[i3]},
                           ax[0].weights[i0] * ax[1].weights[i1] * ax[2].weights[i2] * ax[3].weights[i3]});
  return nodes;
}

// Deterministic summation: fixed-order pairwise reduction, independent of
// chunking or evaluation order of the caller.
inline double pairwise_sum(std::vector<double> v) {
  if (v.empty()) return 0.0;
  size_t n = v.size();
  while (n > 1) {
    size_t m = 0;
    for (size_t i = 0; i + 1 < n; i += 2) v[m++] = v[i] + v[i + 1];
    if (n % 2) v[m++] = v[n - 1];
    n = m;
  }
  return v[0];
}

}  // namespace riem4
