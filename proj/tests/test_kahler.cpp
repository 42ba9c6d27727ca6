#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "riem4/chart.hpp"
#include "riem4/frame.hpp"
#include "riem4/kahler.hpp"

using namespace riem4;

namespace {

KahlerChart make_chart(KahlerPotential pot, double half = 0.45) {
  KahlerChart kc;
  kc.potential = std::move(pot);
  kc.chart = Chart::box(-half, half);
  kc.orientation = +1;
  return kc;
}

std::vector<Vec4d> samples(const KahlerChart& kc, int per_axis = 3) {
  return sample_grid(kc.chart, per_axis);
}

}  // namespace

TEST_CASE("flat potential gives twice the Euclidean metric and zero Ricci form") {
  auto kc = make_chart(KahlerPotential::flat());
  for (const auto& x : samples(kc)) {
    Mat4d g = kc.metric_at(x);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(g[a][b] == doctest::Approx(a == b ? 2.0 : 0.0).epsilon(1e-12));
    CHECK(max_abs(ricci_form(kc, x)) < 1e-12);
    TwoForm w = kahler_form(kc, x);
    CHECK(w[0][1] == doctest::Approx(2.0));
    CHECK(w[2][3] == doctest::Approx(2.0));
    CHECK(w[0][2] == doctest::Approx(0.0));
  }
}

TEST_CASE("sphere-product potential reproduces scalar curvature 2/a^2 + 2/b^2") {
  const double a = 1.0, b = 2.0;
  auto kc = make_chart(KahlerPotential::sphere_product(a, b));
  MetricField g = kc.metric_field();
  for (const auto& x : samples(kc)) {
    PointFrameData f = frame_data(g, x);
    CHECK(f.scalar == doctest::Approx(2.0 / (a * a) + 2.0 / (b * b)).epsilon(1e-9));
  }
}

TEST_CASE("Kahler form is closed and compatible: omega = g(J.,.)") {
  auto kc = make_chart(KahlerPotential::fubini_study());
  MaxwellField W = kahler_form_field(kc);
  for (const auto& x : samples(kc)) {
    Vec4<Jet1d> xj = seed_jets<Jet1d>(x);
    CHECK(exterior_derivative_norm(W.jet1(xj)) < 1e-8);
    // omega is self-dual with unit norm: <omega,omega> = 2
    Mat4d gm = kc.metric_at(x);
    TwoForm w = W.value(x);
    SplitForm s = split(gm, kc.orientation, w);
    CHECK(max_abs(s.minus) < 1e-10);
    CHECK(form_inner(inv4(gm), w, w) == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("Fubini-Study: Einstein with s = 12 and rho = (s/4) omega") {
  auto kc = make_chart(KahlerPotential::fubini_study());
  MetricField g = kc.metric_field();
  for (const auto& x : samples(kc)) {
    PointFrameData f = frame_data(g, x);
    CHECK(f.scalar == doctest::Approx(12.0).epsilon(1e-9));
    CHECK(std::sqrt(tensor_norm_sq(f.ricci_traceless, f.g_inv)) < 1e-8);
    TwoForm rho = ricci_form(kc, x);
    TwoForm w = kahler_form(kc, x);
    CHECK(max_abs(rho - scale(w, 3.0)) < 1e-7);
  }
}

TEST_CASE("Ricci form matches r(J.,.) computed from the real curvature") {
  // On a Kahler surface the Ricci form is the Ricci tensor composed with J.
  // J in these coordinates: J dx_i = dy_i, so (r(J.,.))_{ab} = J^c_a r_cb with
  // J = [[0,-1],[1,0]] blocks acting on (x_i, y_i).
  auto kc = make_chart(KahlerPotential::sphere_product(1.0, 2.0), 0.4);
  MetricField g = kc.metric_field();
  for (const auto& x : samples(kc)) {
    PointFrameData f = frame_data(g, x);
    Mat4d jr = mat4_zero<double>();
    // J^c_a: column a -> c; J(d/dx_i) = d/dy_i, J(d/dy_i) = -d/dx_i
    int jmap[4] = {1, 0, 3, 2};
    double jsgn[4] = {1.0, -1.0, 1.0, -1.0};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) jr[a][b] = jsgn[a] * f.ricci[jmap[a]][b];
    CHECK(max_abs(jr - ricci_form(kc, x)) < 1e-7);
  }
}

TEST_CASE("hyperbolic product: Einstein, canonical field equals the Kahler form") {
  auto kc = make_chart(KahlerPotential::hyperbolic_product(), 0.35);
  MetricField g = kc.metric_field();
  auto pts = samples(kc);
  for (const auto& x : pts) {
    PointFrameData f = frame_data(g, x);
    CHECK(f.scalar == doctest::Approx(-4.0).epsilon(1e-9));
  }
  // rho = -omega here, so ring(rho) = 0 and F = omega.
  MaxwellField F = canonical_maxwell(kc, pts);
  for (const auto& x : pts) CHECK(max_abs(F.value(x) - kahler_form(kc, x)) < 1e-8);
  EmResidual r = em_residual(g, F, pts);
  CHECK(r.dF < 1e-6);
  CHECK(r.dstarF < 1e-6);
  CHECK(r.einstein < 1e-6);
}

TEST_CASE("unequal sphere product: canonical field solves the full system") {
  auto kc = make_chart(KahlerPotential::sphere_product(1.0, 2.0), 0.4);
  MetricField g = kc.metric_field();
  auto pts = samples(kc);

  // scalar curvature is constant, traceless Ricci is not zero
  MaxwellField F = canonical_maxwell(kc, pts);
  EmResidual r = em_residual(g, F, pts);
  CHECK(r.dF < 1e-6);
  CHECK(r.dstarF < 1e-6);
  CHECK(r.einstein < 1e-6);

  // the primitive part of rho is orthogonal to omega
  for (const auto& x : pts) {
    Mat4d gm = kc.metric_at(x);
    TwoForm w = kahler_form(kc, x);
    TwoForm rho = ricci_form(kc, x);
    double s_mean = frame_data(g, x).scalar;
    TwoForm ring = rho - scale(w, s_mean / 4.0);
    CHECK(std::abs(form_inner(inv4(gm), ring, w)) < 1e-9);
  }

  // a harmonic but wrongly-normalized field fails the Einstein equation
  MaxwellField W = kahler_form_field(kc);
  EmResidual bad = em_residual(g, W, pts);
  CHECK(bad.dF < 1e-6);
  CHECK(bad.dstarF < 1e-6);
  CHECK(bad.einstein > 0.1);
}

TEST_CASE("canonical field construction rejects non-constant scalar curvature") {
  // generic perturbed potential: flat + quartic monomial
  KahlerPotential pot = KahlerPotential::flat();
  pot.terms.push_back({PotentialTerm::Kind::Monomial, 0.05, 0.0, 0.0, 0.0, 2, 0});
  auto kc = make_chart(pot, 0.4);
  auto pts = samples(kc);
  CHECK_THROWS_AS((void)canonical_maxwell(kc, pts), NonConstantScalarError);
  try {
    (void)canonical_maxwell(kc, pts);
  } catch (const NonConstantScalarError& e) {
    CHECK(e.spread > 1e-6);
  }
}

TEST_CASE("Kahler pointwise identity |W+|^2 = s^2/24 for the complex orientation") {
  for (auto pot : {KahlerPotential::fubini_study(), KahlerPotential::sphere_product(1.0, 2.0),
                   KahlerPotential::hyperbolic_product()}) {
    auto kc = make_chart(pot, 0.35);
    CHECK(kahler_identity_check(kc, samples(kc)) < 1e-7);
  }
}
