#pragma once

#include <json.hpp>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "riem4/fine_family.hpp"
#include "riem4/functionals.hpp"
#include "riem4/geometry.hpp"
#include "riem4/lattice.hpp"
#include "riem4/version.hpp"

// Declarative scenario execution: a scenario file names a geometry and an
// ordered list of checks; running it produces a machine-readable report.
// Configuration problems (unknown geometry, unknown check, missing topology
// data) throw ConfigError and are distinct from check failures.

namespace riem4 {

using nlohmann::json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string name;
  std::string description;
  json geometry;
  int resolution = 16;
  std::vector<json> checks;
};

struct CheckResult {
  std::string name;
  json values = json::object();
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string note;
  std::map<int, double> convergence;  // resolution -> residual (optional)
};

struct RunOptions {
  int resolution = 0;  // 0 = use scenario value
  double tolerance_scale = 1.0;
  bool deterministic = false;
};

struct ScenarioReport {
  json document;
  bool pass = false;
};

inline Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ConfigError("scenario: top level must be an object");
  Scenario s;
  s.name = doc.value("name", std::string("unnamed"));
  s.description = doc.value("description", std::string());
  if (!doc.contains("geometry") || !doc["geometry"].is_object() || !doc["geometry"].contains("kind"))
    throw ConfigError("scenario '" + s.name + "': geometry.kind is required");
  s.geometry = doc["geometry"];
  s.resolution = doc.value("resolution", 16);
  if (s.resolution < 2 || s.resolution > 256)
    throw ConfigError("scenario '" + s.name + "': resolution out of range [2, 256]");
  if (!doc.contains("checks") || !doc["checks"].is_array() || doc["checks"].empty())
    throw ConfigError("scenario '" + s.name + "': non-empty checks array is required");
  for (const auto& c : doc["checks"]) {
    if (!c.is_object() || !c.contains("name"))
      throw ConfigError("scenario '" + s.name + "': each check needs a name");
    if (c.contains("tolerance") && !(c["tolerance"].get<double>() > 0.0))
      throw ConfigError("scenario '" + s.name + "': tolerances must be positive");
    s.checks.push_back(c);
  }
  return s;
}

namespace scenario_detail {

inline KahlerPotential potential_from_json(const json& terms) {
  if (!terms.is_array() || terms.empty())
    throw ConfigError("kahler_potential geometry: terms array is required");
  KahlerPotential pot;
  for (const auto& t : terms) {
    PotentialTerm term;
    std::string kind = t.value("kind", std::string());
    if (kind == "linear") term.kind = PotentialTerm::Kind::Linear;
    else if (kind == "log") term.kind = PotentialTerm::Kind::Log;
    else if (kind == "exp") term.kind = PotentialTerm::Kind::Exp;
    else if (kind == "monomial") term.kind = PotentialTerm::Kind::Monomial;
    else throw ConfigError("potential term kind must be linear/log/exp/monomial");
    term.coeff = t.value("coeff", 1.0);
    term.a1 = t.value("a1", 0.0);
    term.a2 = t.value("a2", 0.0);
    term.b = t.value("b", 0.0);
    term.p1 = t.value("p1", 0);
    term.p2 = t.value("p2", 0);
    pot.terms.push_back(term);
  }
  return pot;
}

struct Context {
  Scenario scenario;
  RunOptions options;
  int resolution = 16;
  std::optional<Geometry> geo;
  std::optional<IntersectionLattice> lattice;
  std::optional<SurfaceInvariants> invariants;
  bool topology_known = false;
  std::optional<CurvatureSamples> samples_cache;

  const Geometry& geometry() const {
    if (!geo) throw ConfigError("check requires a metric geometry, but the scenario supplies none");
    return *geo;
  }
  const CurvatureSamples& samples() {
    if (!samples_cache) samples_cache = curvature_samples(geometry(), resolution);
    return *samples_cache;
  }
  const KahlerChart& kahler() const {
    if (!geo || !geo->kahler)
      throw ConfigError("check requires a Kahler potential chart, but the geometry has none");
    return *geo->kahler;
  }
  std::pair<int, int> chi_tau(const json& params) const {
    int chi, tau;
    if (params.contains("chi") && params.contains("tau")) {
      chi = params["chi"].get<int>();
      tau = params["tau"].get<int>();
    } else if (topology_known) {
      chi = geo->chi;
      tau = geo->tau;
    } else {
      throw ConfigError("topological check on a user geometry requires explicit chi and tau");
    }
    return {chi, tau};
  }
};

inline Context make_context(const Scenario& s, const RunOptions& opt) {
  Context ctx;
  ctx.scenario = s;
  ctx.options = opt;
  ctx.resolution = opt.resolution > 0 ? opt.resolution : s.resolution;
  std::string kind = s.geometry["kind"].get<std::string>();
  if (kind == "flat_torus") {
    ctx.geo = flat_torus_geometry();
    ctx.topology_known = true;
  } else if (kind == "sphere_product") {
    double a = s.geometry.value("a", 1.0), b = s.geometry.value("b", 1.0);
    if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("sphere_product: radii must be positive");
    ctx.geo = sphere_product_geometry(a, b);
    ctx.topology_known = true;
  } else if (kind == "hyperbolic_product") {
    ctx.geo = hyperbolic_product_geometry();
    ctx.topology_known = true;
  } else if (kind == "fubini_study") {
    ctx.geo = fubini_study_geometry();
    ctx.topology_known = true;
  } else if (kind == "kahler_potential") {
    ctx.geo = kahler_potential_geometry(potential_from_json(s.geometry.value("terms", json())),
                                        s.geometry.value("half_width", 0.4));
  } else if (kind == "kodaira") {
    long p = s.geometry.value("p", 0), q = s.geometry.value("q", 0), tau = s.geometry.value("tau", 0);
    try {
      auto [L, inv] = kodaira_lattice(p, q, tau);
      ctx.lattice = L;
      ctx.invariants = inv;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else {
    throw ConfigError("unknown geometry kind '" + kind + "'");
  }
  return ctx;
}

inline json rational_json(const Rational& r) {
  return json{{"decimal", std::to_string(to_double(r))},
              {"num", to_string(numerator(r))},
              {"den", to_string(denominator(r))}};
}

inline json rational_function_json(const RationalFunction& f) {
  json num = json::array(), den = json::array();
  for (const auto& c : f.num.c) num.push_back(to_string(c));
  for (const auto& c : f.den.c) den.push_back(to_string(c));
  return json{{"num", num}, {"den", den}};
}

inline Rational rational_from_json(const json& v, const char* what) {
  try {
    if (v.is_string()) return Rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string(what) + ": expected an exact rational like \"1/100\"");
}

inline std::vector<Vec4d> check_samples(Context& ctx, const json& params) {
  int n = params.value("samples", 5);
  if (n < 1 || n > 64) throw ConfigError("samples per axis out of range [1, 64]");
  return sample_grid(ctx.kahler().chart, n);
}

// ---- individual checks ------------------------------------------------

inline CheckResult check_volume(Context& ctx, const json& params, double tol_scale) {
  CheckResult r;
  r.tolerance = params.value("tolerance", 1e-6) * tol_scale;
  double vol = integrate_samples(ctx.samples(), [](size_t) { return 1.0; });
  r.values["volume"] = vol;
  if (params.contains("expect_pi2")) {
    double expect = params["expect_pi2"].get<double>() * M_PI * M_PI;
    r.values["expected"] = expect;
    r.pass = std::abs(vol - expect) / std::max(1.0, std::abs(expect)) <= r.tolerance;
  } else {
    r.pass = vol > 0.0;
  }
  return r;
}

inline CheckResult check_em_residual(Context& ctx, const json& params, double tol_scale) {
  CheckResult r;
  r.tolerance = params.value("tolerance", 1e-6) * tol_scale;
  auto pts = check_samples(ctx, params);
  const KahlerChart& kc = ctx.kahler();
  MetricField g = kc.metric_field();
  std::string field = params.value("field", std::string("canonical"));
  MaxwellField F;
  if (field == "canonical") {
    try {
      F = canonical_maxwell(kc, pts);
    } catch (const NonConstantScalarError& e) {
      r.values["scalar_spread"] = e.spread;
      r.note = "canonical field undefined: scalar curvature is not constant";
      r.pass = false;
      return r;
    }
  } else if (field == "kahler_form") {
    F = kahler_form_field(kc);
  } else {
    throw ConfigError("em_residual: field must be 'canonical' or 'kahler_form'");
  }
  EmResidual res = em_residual(g, F, pts);
  r.values["dF"] = res.dF;
  r.values["d_star_F"] = res.dstarF;
  r.values["einstein"] = res.einstein;
  if (params.value("expect_violation", false)) {
    double threshold = params.value("violation_threshold", 0.1);
    r.values["violation_threshold"] = threshold;
    r.pass = res.dF <= r.tolerance && res.dstarF <= r.tolerance && res.einstein > threshold;
  } else {
    r.pass = res.dF <= r.tolerance && res.dstarF <= r.tolerance && res.einstein <= r.tolerance;
  }
  return r;
}

inline CheckResult check_scalar_constancy(Context& ctx, const json& params, double tol_scale) {
  CheckResult r;
  r.tolerance = params.value("tolerance", 1e-6) * tol_scale;
  double mean = 0.0;
  double spread = scalar_spread(ctx.kahler(), check_samples(ctx, params), &mean);
  r.values["mean_scalar"] = mean;
  r.values["relative_spread"] = spread;
  r.pass = spread <= r.tolerance;
  return r;
}

inline CheckResult check_kahler_identity(Context& ctx, const json& params, double tol_scale) {
  CheckResult r;
  r.tolerance = params.value("tolerance", 1e-8) * tol_scale;
  double dev = kahler_identity_check(ctx.kahler(), check_samples(ctx, params));
  r.values["max_deviation"] = dev;
  r.pass = dev <= r.tolerance;
  return r;
}

template <class Fn>
CheckResult integral_check(Context& ctx, const json& params, double tol_scale, double default_tol,
                           Fn&& residual_of) {
  CheckResult r;
  r.tolerance = params.value("tolerance", default_tol) * tol_scale;
  double res = residual_of(ctx.samples());
  r.values["residual"] = res;
  r.pass = res <= r.tolerance;
  if (params.value("convergence", false)) {
    int coarse = std::max(2, ctx.resolution / 2);
    auto cs = curvature_samples(ctx.geometry(), coarse);
    r.convergence[coarse] = residual_of(cs);
    r.convergence[ctx.resolution] = res;
  }
  return r;
}

inline CheckResult check_calabi_equality(Context& ctx, const json& params, double tol_scale) {
  CheckResult r;
  r.tolerance = params.value("tolerance", 1e-3) * tol_scale;
  double c1w, w2;
  if (params.contains("c1_dot_omega") && params.contains("omega_sq")) {
    c1w = params["c1_dot_omega"].get<double>();
    w2 = params["omega_sq"].get<double>();
  } else if (ctx.geometry().omega_sq > 0.0) {
    c1w = ctx.geometry().c1_dot_omega;
    w2 = ctx.geometry().omega_sq;
  } else {
    throw ConfigError("calabi_equality: pairing numbers unavailable; supply c1_dot_omega and omega_sq");
  }
  double res = calabi_equality_check(ctx.samples(), c1w, w2);
  r.values["relative_residual"] = res;
  r.values["lattice_rhs"] = 32.0 * M_PI * M_PI * c1w * c1w / w2;
  r.pass = res <= r.tolerance;
  return r;
}

inline CheckResult check_sw_bound(Context& ctx, const json& params, double tol_scale) {
  CheckResult r;
  r.tolerance = params.value("tolerance", 1e-3) * tol_scale;
  const Geometry& geo = ctx.geometry();
  if (geo.omega_sq <= 0.0) throw ConfigError("sw_bound: pairing numbers unavailable");
  if (geo.c1_dot_omega > 0.0) {
    r.skipped = true;
    r.note = "bound applies to classes with c1.[omega] <= 0";
    r.pass = true;
    return r;
  }
  double rhs = 72.0 * M_PI * M_PI * geo.c1_dot_omega * geo.c1_dot_omega / geo.omega_sq;
  double margin = sw_integrand_bound(ctx.samples(), rhs);
  r.values["rhs"] = rhs;
  r.values["margin"] = margin;
  r.pass = margin >= -r.tolerance * std::max(1.0, rhs);
  return r;
}

inline CheckResult check_first_variation(Context& ctx, const json& params, double tol_scale) {
  CheckResult r;
  std::string kind = params.value("perturbation", std::string("generic"));
  const Geometry& geo = ctx.geometry();
  int res = std::min(ctx.resolution, 8);
  if (kind == "conformal") {
    r.tolerance = params.value("tolerance", 1e-6) * tol_scale;
    MetricField g = geo.metric;
    auto h = make_field([g](const auto& x) {
      using T = std::decay_t<decltype(x[0])>;
      auto gm = [&] {
        if constexpr (std::is_same_v<T, double>) return g.value(x);
        else if constexpr (std::is_same_v<T, Jet1d>) return g.jet1(x);
        else return g.jet2(x);
      }();
      return scale(gm, cos(x[0]));
    });
    auto rep = first_variation_check(geo, h, {1e-4}, res);
    r.values["analytic"] = rep.analytic;
    r.values["finite_difference"] = rep.finite_diff.back();
    r.pass = std::abs(rep.analytic) <= r.tolerance && std::abs(rep.finite_diff.back()) <= r.tolerance;
  } else if (kind == "generic") {
    r.tolerance = params.value("tolerance", 1e-3) * tol_scale;
    auto h = make_field([](const auto& x) {
      using T = std::decay_t<decltype(x[0])>;
      Mat4<T> m = mat4_zero<T>();
      m[0][0] = sin(x[0]) * sin(x[0]) * 0.3;
      m[2][2] = cos(x[2]) * sin(x[2]) * 0.2;
      m[0][2] = sin(x[0]) * sin(x[2]) * 0.1;
      m[2][0] = m[0][2];
      m[1][1] = sin(x[0]) * sin(x[0]) * sin(x[0]) * 0.15;
      return m;
    });
    auto rep = first_variation_check(geo, h, {8e-4, 4e-4, 2e-4, 1e-4}, res);
    r.values["analytic"] = rep.analytic;
    r.values["finite_difference"] = rep.finite_diff.back();
    json ratios = json::array();
    bool ratios_ok = true;
    for (double q : rep.richardson) {
      ratios.push_back(q);
      if (!(q > 3.5 && q < 4.5)) ratios_ok = false;
    }
    r.values["richardson_ratios"] = ratios;
    r.pass = rep.relative_error <= r.tolerance && ratios_ok;
  } else {
    throw ConfigError("first_variation: perturbation must be 'conformal' or 'generic'");
  }
  return r;
}

// Randomized pointwise-algebra audit: [F o F]_0 = 2 F+ o F-, star-star
// involution, and orthogonality of the split, over seeded random
// (SPD metric, 2-form) pairs. Geometry-independent.
inline CheckResult check_composition_identity(Context&, const json& params, double tol_scale) {
  CheckResult r;
  r.tolerance = params.value("tolerance", 1e-11) * tol_scale;
  double star_tol = params.value("star_tolerance", 1e-12) * tol_scale;
  int n = params.value("pairs", 10000);
  if (n < 1 || n > 1000000) throw ConfigError("composition_identity: pairs out of range");
  std::mt19937 rng(params.value("seed", 20240817u));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_comp = 0.0, worst_star = 0.0, worst_orth = 0.0;
  for (int k = 0; k < n; ++k) {
    Mat4d a;
    for (auto& row : a)
      for (auto& v : row) v = u(rng);
    Mat4d g = mat4_zero<double>();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        for (int l = 0; l < 4; ++l) g[i][j] += a[l][i] * a[l][j];
        if (i == j) g[i][j] += 0.5;
      }
    TwoForm f = mat4_zero<double>();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        f[i][j] = u(rng);
        f[j][i] = -f[i][j];
      }
    worst_comp = std::max(worst_comp, traceless_composition_identity(g, +1, f));
    TwoForm ss = hodge_star(g, +1, hodge_star(g, +1, f));
    worst_star = std::max(worst_star, max_abs(ss - f));
    SplitForm sp = split(g, +1, f);
    worst_orth = std::max(worst_orth, std::abs(form_inner(inv4(g), sp.plus, sp.minus)));
  }
  r.values["pairs"] = n;
  r.values["max_composition_residual"] = worst_comp;
  r.values["max_star_involution_residual"] = worst_star;
  r.values["max_split_orthogonality"] = worst_orth;
  r.pass = worst_comp <= r.tolerance && worst_star <= star_tol && worst_orth <= star_tol;
  return r;
}

inline void require_lattice(const Context& ctx) {
  if (!ctx.lattice) throw ConfigError("check requires a kodaira(p, q, tau) geometry");
}

inline CheckResult check_cohomology_identities(Context& ctx, const json&, double) {
  CheckResult r;
  require_lattice(ctx);
  const auto& L = *ctx.lattice;
  const auto& inv = *ctx.invariants;
  auto f = fine_family(L, inv);
  auto t = taubes_class_projections(L, inv);
  Rational chi(inv.chi), tau(inv.tau), c1sq = inv.c1_sq();

  bool a = f.c1_dot_omega == Polynomial{-chi, -c1sq};
  bool b = f.omega_sq == Polynomial{Rational(0), 2 * chi, c1sq};
  bool c = t.c1_bar_dot_omega == Polynomial{-chi, -3 * tau};
  bool d = (t.minus_sq - t.plus_sq) == RationalFunction(Polynomial(2 * chi - 3 * tau));
  r.values["c1_dot_omega"] = rational_function_json(RationalFunction(f.c1_dot_omega));
  r.values["omega_sq"] = rational_function_json(RationalFunction(f.omega_sq));
  r.values["c1_bar_dot_omega"] = rational_function_json(RationalFunction(t.c1_bar_dot_omega));
  r.values["plus_sq"] = rational_function_json(t.plus_sq);
  r.values["identities"] = {{"c1_pairing", a}, {"volume_pairing", b}, {"taubes_pairing", c},
                            {"almost_complex_defect", d}};
  r.pass = a && b && c && d;
  return r;
}

inline CheckResult check_counterexample_gap(Context& ctx, const json& params, double) {
  CheckResult r;
  require_lattice(ctx);
  auto g = counterexample_gap(*ctx.lattice, *ctx.invariants);
  r.values["gap"] = rational_function_json(g.gap);
  r.values["routes_agree"] = g.routes_agree;
  r.values["negative_for_all_positive_eps"] = g.negative_for_all_positive_eps;
  r.values["certificate"] = g.certificate;
  if (g.eps_star) r.values["eps_star"] = rational_json(*g.eps_star);
  bool ok = g.routes_agree;
  if (params.contains("eps")) {
    Rational eps = rational_from_json(params["eps"], "counterexample_gap.eps");
    Rational value = g.gap(eps);
    r.values["gap_at_eps"] = rational_json(value);
    if (params.contains("expect")) {
      Rational expect = rational_from_json(params["expect"], "counterexample_gap.expect");
      ok = ok && (value == expect);
      r.values["expected"] = rational_json(expect);
    }
    auto f = fine_family(*ctx.lattice, *ctx.invariants);
    r.values["s2_over_pi2_at_eps"] = rational_json(f.s2_over_32pi2(eps) * 32);
    if (params.contains("expect_s2_over_pi2")) {
      Rational expect = rational_from_json(params["expect_s2_over_pi2"], "expect_s2_over_pi2");
      ok = ok && (f.s2_over_32pi2(eps) * 32 == expect);
    }
  }
  if (ctx.invariants->tau > 0) ok = ok && g.negative_for_all_positive_eps;
  r.pass = ok;
  return r;
}

inline CheckResult check_hitchin_thorpe(Context& ctx, const json& params, double) {
  CheckResult r;
  int chi, tau;
  if (ctx.invariants) {
    chi = static_cast<int>(ctx.invariants->chi);
    tau = static_cast<int>(ctx.invariants->tau);
  } else {
    auto [c, t] = ctx.chi_tau(params);
    chi = c;
    tau = t;
  }
  auto [fwd, rev] = hitchin_thorpe({chi, tau});
  r.values["chi"] = chi;
  r.values["tau"] = tau;
  r.values["forward"] = fwd;
  r.values["reversed"] = rev;
  r.pass = true;
  if (params.contains("expect")) {
    auto e = params["expect"];
    if (!e.is_array() || e.size() != 2) throw ConfigError("hitchin_thorpe.expect: [bool, bool]");
    r.pass = (fwd == e[0].get<bool>()) && (rev == e[1].get<bool>());
  }
  return r;
}

inline CheckResult run_check(Context& ctx, const json& params, double tol_scale) {
  std::string name = params["name"].get<std::string>();
  CheckResult r;
  if (name == "volume") r = check_volume(ctx, params, tol_scale);
  else if (name == "em_residual") r = check_em_residual(ctx, params, tol_scale);
  else if (name == "scalar_constancy") r = check_scalar_constancy(ctx, params, tol_scale);
  else if (name == "kahler_identity") r = check_kahler_identity(ctx, params, tol_scale);
  else if (name == "gauss_bonnet") {
    auto [chi, tau] = ctx.chi_tau(params);
    r = integral_check(ctx, params, tol_scale, 1e-4,
                       [&](const CurvatureSamples& cs) { return gauss_bonnet_check(cs, chi, tau); });
  } else if (name == "ricci_identity") {
    auto [chi, tau] = ctx.chi_tau(params);
    r = integral_check(ctx, params, tol_scale, 1e-4,
                       [&](const CurvatureSamples& cs) { return ricci_identity_check(cs, chi, tau); });
  } else if (name == "riemann_identity") {
    auto [chi, tau] = ctx.chi_tau(params);
    r = integral_check(ctx, params, tol_scale, 1e-4,
                       [&](const CurvatureSamples& cs) { return riemann_identity_check(cs, chi, tau); });
  } else if (name == "signature") {
    auto [chi, tau] = ctx.chi_tau(params);
    (void)chi;
    r = integral_check(ctx, params, tol_scale, 1e-4,
                       [&](const CurvatureSamples& cs) { return signature_check(cs, tau); });
  } else if (name == "calabi_equality") r = check_calabi_equality(ctx, params, tol_scale);
  else if (name == "sw_bound") r = check_sw_bound(ctx, params, tol_scale);
  else if (name == "first_variation") r = check_first_variation(ctx, params, tol_scale);
  else if (name == "composition_identity") r = check_composition_identity(ctx, params, tol_scale);
  else if (name == "cohomology_identities") r = check_cohomology_identities(ctx, params, tol_scale);
  else if (name == "counterexample_gap") r = check_counterexample_gap(ctx, params, tol_scale);
  else if (name == "hitchin_thorpe") r = check_hitchin_thorpe(ctx, params, tol_scale);
  else throw ConfigError("unknown check '" + name + "'");
  r.name = name;
  return r;
}

}  // namespace scenario_detail

inline ScenarioReport run_scenario(const Scenario& s, const RunOptions& opt = {}) {
  scenario_detail::Context ctx = scenario_detail::make_context(s, opt);
  json checks = json::array();
  bool all_pass = true;
  for (const auto& c : s.checks) {
    CheckResult r;
    if (c.value("skip", false)) {
      r.name = c["name"].get<std::string>();
      r.skipped = true;
      r.pass = true;
      r.note = "skipped by scenario configuration";
    } else {
      r = scenario_detail::run_check(ctx, c, opt.tolerance_scale);
    }
    json jc{{"name", r.name}, {"pass", r.pass}, {"skipped", r.skipped},
            {"tolerance", r.tolerance}, {"values", r.values}};
    if (!r.note.empty()) jc["note"] = r.note;
    if (!r.convergence.empty()) {
      json table = json::array();
      for (auto [res, residual] : r.convergence) table.push_back({{"resolution", res}, {"residual", residual}});
      jc["convergence"] = table;
    }
    checks.push_back(jc);
    all_pass = all_pass && r.pass;
  }
  ScenarioReport rep;
  rep.pass = all_pass;
  rep.document = json{
      {"scenario", s.name},
      {"environment",
       {{"version", kVersion},
        {"resolution", ctx.resolution},
        {"tolerance_scale", opt.tolerance_scale},
        {"deterministic", opt.deterministic},
        {"norm_convention_hash", norm_convention_hash()}}},
      {"checks", checks},
      {"pass", all_pass}};
  return rep;
}

}  // namespace riem4
