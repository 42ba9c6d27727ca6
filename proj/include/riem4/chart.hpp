#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "riem4/mat.hpp"

namespace riem4 {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
};

// A single coordinate box covering (up to measure zero) one of the built-in
// geometries. Axes may be periodic; quadrature and sample grids honor that.
struct Chart {
  std::array<Interval, 4> bounds;
  std::array<bool, 4> periodic = {false, false, false, false};

  Chart() {
    for (auto& b : bounds) b = {0.0, 1.0};
  }
  Chart(std::array<Interval, 4> bs, std::array<bool, 4> per) : bounds(bs), periodic(per) {
    for (const auto& b : bounds)
      if (!(b.length() > 0.0)) throw std::invalid_argument("chart interval must have positive length");
  }

  bool contains(const Vec4d& x) const {
    for (int a = 0; a < 4; ++a) {
      if (periodic[a]) continue;
      if (x[a] < bounds[a].lo || x[a] > bounds[a].hi) return false;
    }
    return true;
  }

  static Chart box(double lo, double hi) {
    Chart c;
    for (auto& b : c.bounds) b = {lo, hi};
    return c;
  }

  static Chart torus(double period = 2.0 * M_PI) {
    Chart c;
    for (auto& b : c.bounds) b = {0.0, period};
    c.periodic = {true, true, true, true};
    return c;
  }
};

// Tensor-product sample grid, interior points only (one-cell margin on
// non-periodic axes).
inline std::vector<Vec4d> sample_grid(const Chart& chart, int per_axis) {
  std::vector<Vec4d> pts;
  pts.reserve(static_cast<size_t>(per_axis) * per_axis * per_axis * per_axis);
  std::array<std::vector<double>, 4> axis;
  for (int a = 0; a < 4; ++a) {
    const auto& b = chart.bounds[a];
    double h = b.length() / per_axis;
    for (int i = 0; i < per_axis; ++i) {
      // offset by half a cell; never lands on a non-periodic boundary
      axis[a].push_back(b.lo + (i + 0.5) * h);
    }
  }
  for (double x0 : axis[0])
    for (double x1 : axis[1])
      for (double x2 : axis[2])
        for (double x3 : axis[3]) pts.push_back({x0, x1, x2, x3});
  return pts;
}

}  // namespace riem4
