#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "riem4/functionals.hpp"
#include "riem4/geometry.hpp"

using namespace riem4;

namespace {
const double PI2 = M_PI * M_PI;
}

TEST_CASE("flat torus: unit integrand integrates to (2 pi)^4 exactly") {
  auto geo = flat_torus_geometry();
  double v = integrate(geo, [](const Vec4d&) { return 1.0; }, 8);
  CHECK(v == doctest::Approx(std::pow(2.0 * M_PI, 4)).epsilon(1e-14));
}

TEST_CASE("volumes of the curved built-ins") {
  CHECK(integrate(sphere_product_geometry(1.0, 1.0), [](const Vec4d&) { return 1.0; }, 16) ==
        doctest::Approx(16.0 * PI2).epsilon(1e-8));
  CHECK(integrate(sphere_product_geometry(1.0, 2.0), [](const Vec4d&) { return 1.0; }, 16) ==
        doctest::Approx(64.0 * PI2).epsilon(1e-8));
  // normalized to one fundamental domain of the genus-2 x genus-2 quotient
  CHECK(integrate(hyperbolic_product_geometry(), [](const Vec4d&) { return 1.0; }, 12) ==
        doctest::Approx(16.0 * PI2).epsilon(1e-12));
}

TEST_CASE("Fubini-Study volume converges to 2 pi^2") {
  auto geo = fubini_study_geometry();
  double v8 = integrate(geo, [](const Vec4d&) { return 1.0; }, 8);
  double v16 = integrate(geo, [](const Vec4d&) { return 1.0; }, 16);
  CHECK(v16 == doctest::Approx(2.0 * PI2).epsilon(1e-10));
  CHECK(std::abs(v16 - v8) / std::abs(v16) < 1e-10);
}

TEST_CASE("integral identities on the flat torus are identically zero") {
  auto cs = curvature_samples(flat_torus_geometry(), 4);
  CHECK(gauss_bonnet_check(cs, 0, 0) < 1e-12);
  CHECK(ricci_identity_check(cs, 0, 0) < 1e-12);
  CHECK(riemann_identity_check(cs, 0, 0) < 1e-12);
  CHECK(signature_check(cs, 0) < 1e-12);
}

TEST_CASE("integral identities on S2(1) x S2(1): targets 8, 64 pi^2, 32 pi^2, 0") {
  auto geo = sphere_product_geometry(1.0, 1.0);
  auto cs = curvature_samples(geo, 16);
  // raw values first
  double euler_like = integrate_samples(cs, [&](size_t i) {
    const auto& n = cs.norms[i];
    return n.scalar_sq / 24.0 + 2.0 * n.w_plus_sq - 0.5 * n.ricci_traceless_sq;
  });
  CHECK(euler_like / (4.0 * PI2) == doctest::Approx(8.0).epsilon(1e-8));
  double ric2 = integrate_samples(cs, [&](size_t i) {
    return cs.norms[i].ricci_traceless_sq + cs.norms[i].scalar_sq / 4.0;
  });
  CHECK(ric2 == doctest::Approx(64.0 * PI2).epsilon(1e-8));
  double riem2 = integrate_samples(cs, [&](size_t i) { return cs.norms[i].riemann_op_sq; });
  CHECK(riem2 == doctest::Approx(32.0 * PI2).epsilon(1e-8));

  CHECK(gauss_bonnet_check(cs, 4, 0) < 1e-6);
  CHECK(ricci_identity_check(cs, 4, 0) < 1e-6);
  CHECK(riemann_identity_check(cs, 4, 0) < 1e-6);
  CHECK(signature_check(cs, 0) < 1e-6);
}

TEST_CASE("integral identities on the remaining built-ins") {
  for (auto geo : {sphere_product_geometry(1.0, 2.0), hyperbolic_product_geometry()}) {
    auto cs = curvature_samples(geo, 12);
    CHECK(gauss_bonnet_check(cs, geo.chi, geo.tau) < 1e-6);
    CHECK(ricci_identity_check(cs, geo.chi, geo.tau) < 1e-6);
    CHECK(riemann_identity_check(cs, geo.chi, geo.tau) < 1e-6);
    CHECK(signature_check(cs, geo.tau) < 1e-6);
  }
}

TEST_CASE("Fubini-Study: signature +1 and Euler characteristic 3") {
  auto geo = fubini_study_geometry();
  auto cs = curvature_samples(geo, 12);
  CHECK(signature_check(cs, 1) < 1e-6);
  CHECK(gauss_bonnet_check(cs, 3, 1) < 1e-6);
  CHECK(riemann_identity_check(cs, 3, 1) < 1e-6);
  CHECK(ricci_identity_check(cs, 3, 1) < 1e-6);
  // refinement: residual drops by >= 4x or is already at the rounding floor
  auto cs6 = curvature_samples(geo, 6);
  double r6 = signature_check(cs6, 1);
  double r12 = signature_check(cs, 1);
  CHECK((r12 < 1e-9 || r12 < r6 / 4.0));
}

TEST_CASE("scalar-curvature equality case on every CSC built-in") {
  for (auto geo : {flat_torus_geometry(), sphere_product_geometry(1.0, 1.0),
                   sphere_product_geometry(1.0, 2.0), hyperbolic_product_geometry()}) {
    auto cs = curvature_samples(geo, 12);
    CHECK(calabi_equality_check(cs, geo.c1_dot_omega, geo.omega_sq) < 1e-6);
  }
  auto fs = fubini_study_geometry();
  auto cs = curvature_samples(fs, 16);
  CHECK(calabi_equality_check(cs, fs.c1_dot_omega, fs.omega_sq) < 1e-3);
}

TEST_CASE("(s - sqrt6 |W+|)^2 integrand on Kahler built-ins") {
  // pointwise |W+| = |s|/sqrt(24), so the integrand is s^2/4 for s > 0 and
  // (3s/2)^2 = 9 s^2/4 for s < 0.
  auto sp = sphere_product_geometry(1.0, 1.0);
  auto cs = curvature_samples(sp, 12);
  CHECK(sw_integrand_bound(cs, 64.0 * PI2) == doctest::Approx(0.0).epsilon(1e-8));
  auto hp = hyperbolic_product_geometry();
  auto ch = curvature_samples(hp, 12);
  CHECK(sw_integrand_bound(ch, 9.0 / 4.0 * 256.0 * PI2) == doctest::Approx(0.0).scale(256.0 * PI2).epsilon(1e-8));
}

TEST_CASE("functional report collects values and residuals consistently") {
  auto geo = sphere_product_geometry(1.0, 1.0);
  auto rep = functional_report(geo, 12);
  CHECK(rep.volume == doctest::Approx(16.0 * PI2).epsilon(1e-8));
  CHECK(rep.total_scalar == doctest::Approx(64.0 * PI2).epsilon(1e-8));
  CHECK(rep.action_s2 == doctest::Approx(256.0 * PI2).epsilon(1e-8));
  CHECK(rep.action_sw == doctest::Approx(64.0 * PI2).epsilon(1e-8));
  CHECK(rep.residuals.at("gauss_bonnet") < 1e-6);
  CHECK(rep.residuals.at("calabi_equality") < 1e-6);
  CHECK(rep.volume > 0.0);
}

TEST_CASE("first variation vanishes identically on the scalar-flat torus") {
  auto geo = flat_torus_geometry();
  auto h = make_field([](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    Mat4<T> m = mat4_zero<T>();
    m[0][0] = sin(x[1]);
    m[1][1] = cos(x[0]) * 0.5;
    m[0][1] = sin(x[2]) * 0.25;
    m[1][0] = m[0][1];
    return m;
  });
  auto rep = first_variation_check(geo, h, {1e-3, 5e-4}, 4);
  CHECK(rep.analytic == doctest::Approx(0.0).epsilon(1e-12));
  // the action is O(t^2) around the flat metric, so FD ~ O(t)
  CHECK(std::abs(rep.finite_diff.back()) < 1e-2);
}

TEST_CASE("conformal variation of a constant-scalar-curvature metric is critical") {
  auto geo = sphere_product_geometry(1.0, 1.0);
  MetricField g = geo.metric;
  auto h = make_field([g](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    auto gm = [&] {
      if constexpr (std::is_same_v<T, double>) return g.value(x);
      else if constexpr (std::is_same_v<T, Jet1d>) return g.jet1(x);
      else return g.jet2(x);
    }();
    T v = cos(x[0]);
    return scale(gm, v);
  });
  auto rep = first_variation_check(geo, h, {1e-4}, 12);
  CHECK(std::abs(rep.analytic) < 1e-6);
  CHECK(std::abs(rep.finite_diff.back()) < 1e-6);
}

TEST_CASE("generic variation matches finite differences with O(t^2) Richardson ratios") {
  auto geo = sphere_product_geometry(1.0, 2.0);
  auto h = make_field([](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    Mat4<T> m = mat4_zero<T>();
    m[0][0] = sin(x[0]) * sin(x[0]) * 0.3 + 1.0 * 0.0;
    m[2][2] = cos(x[2]) * sin(x[2]) * 0.2;
    m[0][2] = sin(x[0]) * sin(x[2]) * 0.1;
    m[2][0] = m[0][2];
    m[1][1] = sin(x[0]) * sin(x[0]) * sin(x[0]) * 0.15;
    return m;
  });
  auto rep = first_variation_check(geo, h, {8e-4, 4e-4, 2e-4, 1e-4}, 8);
  double scale_ref = std::max(1.0, std::abs(rep.analytic));
  CHECK(std::abs(rep.finite_diff.back() - rep.analytic) / scale_ref < 1e-3);
  REQUIRE(rep.richardson.size() == 3);
  for (double r : rep.richardson) CHECK((r > 3.5 && r < 4.5));
}
