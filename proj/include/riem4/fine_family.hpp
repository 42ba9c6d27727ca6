#pragma once

#include <optional>
#include <string>

#include "riem4/lattice.hpp"
#include "riem4/polynomial.hpp"

// The adiabatic family of constant-scalar-curvature Kahler classes
// [omega_eps] = 2(p-1) F - eps c1 on a surface fibered over a curve, its
// curvature functionals as exact rational functions of eps, and the exact
// sign analysis of the curvature-energy gap that obstructs the naive
// lower bound for integral |R|^2.

namespace riem4 {

using PolyClass = LatticeClassT<Polynomial>;

struct FineFamily {
  PolyClass omega_eps;                  // coordinates in the {F, c1} basis
  Polynomial c1_dot_omega;              // c1 . [omega_eps] = -(chi + eps c1^2)
  Polynomial omega_sq;                  // [omega_eps]^2 = eps (2 chi + eps c1^2)
  Polynomial total_scalar_over_4pi;     // integral of s dmu, divided by 4 pi
  Polynomial volume_times_2;            // 2 * integral of dmu = [omega_eps]^2
  RationalFunction s2_over_32pi2;       // integral of s^2 dmu, divided by 32 pi^2
};

inline FineFamily fine_family(const IntersectionLattice& L, const SurfaceInvariants& inv) {
  FineFamily f;
  Polynomial eps = Polynomial::x();
  f.omega_eps.coords = {Polynomial(Rational(2 * (inv.p - 1))), -eps};

  PolyClass c1{{Polynomial(Rational(0)), Polynomial(Rational(1))}};
  f.c1_dot_omega = pair(L, c1, f.omega_eps);
  f.omega_sq = pair(L, f.omega_eps, f.omega_eps);
  f.total_scalar_over_4pi = f.c1_dot_omega;
  f.volume_times_2 = f.omega_sq;
  // Cauchy-Schwarz is equality at constant s:
  // integral s^2 = (integral s)^2 / volume = 32 pi^2 (c1.[omega])^2 / [omega]^2
  f.s2_over_32pi2 = RationalFunction(f.c1_dot_omega * f.c1_dot_omega, f.omega_sq);
  return f;
}

struct TaubesProjections {
  LatticeClass c1_bar;              // c1 + 4(p-1) F
  Polynomial c1_bar_dot_omega;      // -(chi + 3 eps tau)
  Rational c1_bar_sq;               // 3 tau - 2 chi
  RationalFunction plus_sq;         // |c1_bar+|^2 = (chi + 3 eps tau)^2 / (eps (2 chi + eps c1^2))
  RationalFunction minus_sq;        // plus_sq - c1_bar^2
};

// The (1,1)-class projections of the canonical class of the fibered complex
// structure onto the self-dual/anti-self-dual parts determined by
// [omega_eps]: for a (1,1)-class a, a+ = (a.[omega]/[omega]^2) [omega], so
// |a+|^2 = (a.[omega])^2/[omega]^2 and |a-|^2 = |a+|^2 - a^2.
inline TaubesProjections taubes_class_projections(const IntersectionLattice& L,
                                                  const SurfaceInvariants& inv) {
  FineFamily f = fine_family(L, inv);
  TaubesProjections t;
  t.c1_bar.coords = {Rational(4 * (inv.p - 1)), Rational(1)};
  PolyClass c1_bar_poly{{Polynomial(t.c1_bar.coords[0]), Polynomial(t.c1_bar.coords[1])}};
  t.c1_bar_dot_omega = pair(L, c1_bar_poly, f.omega_eps);
  LatticeClass cb = t.c1_bar;
  t.c1_bar_sq = pair(L, cb, cb);
  t.plus_sq = RationalFunction(t.c1_bar_dot_omega * t.c1_bar_dot_omega, f.omega_sq);
  t.minus_sq = t.plus_sq - RationalFunction(Polynomial(t.c1_bar_sq));
  return t;
}

struct GapAnalysis {
  RationalFunction riem2_over_8pi2;  // (1/8pi^2) integral of |R|^2 for the family
  RationalFunction gap;              // riem2_over_8pi2 - [|c1_bar-|^2 - (chi - 3 tau)]
  RationalFunction gap_closed_form;  // -3 tau [1 - 2 chi eps / (2 chi + eps c1^2)]
  bool routes_agree = false;
  // sign analysis for tau > 0: gap = -3 tau * N(eps)/D(eps) with N, D having
  // strictly positive coefficients, hence gap < 0 for every eps > 0. When
  // 2 chi - c1^2 > 0 the certificate instead yields the finite threshold
  // eps* = 2 chi / (2 chi - c1^2).
  bool negative_for_all_positive_eps = false;
  std::optional<Rational> eps_star;  // empty = no finite threshold (gap < 0 for all eps > 0)
  std::string certificate;
};

inline GapAnalysis counterexample_gap(const IntersectionLattice& L, const SurfaceInvariants& inv) {
  FineFamily f = fine_family(L, inv);
  TaubesProjections t = taubes_class_projections(L, inv);
  GapAnalysis g;

  Rational chi(inv.chi), tau(inv.tau), c1sq = inv.c1_sq();
  Polynomial eps = Polynomial::x();

  // route (a): assemble from the family's curvature integrals. For Kahler
  // metrics the |R|^2 identity reduces to
  // (1/8pi^2) integral |R|^2 = -(chi + 3 tau) + integral s^2 / (32 pi^2).
  g.riem2_over_8pi2 = RationalFunction(Polynomial(-(chi + 3 * tau))) + f.s2_over_32pi2;
  RationalFunction target = t.minus_sq - RationalFunction(Polynomial(chi - 3 * tau));
  g.gap = g.riem2_over_8pi2 - target;

  // route (b): the simplified closed form.
  Polynomial denom = Polynomial(2 * chi) + eps * Polynomial(c1sq);
  RationalFunction frac(eps * Polynomial(2 * chi), denom);
  g.gap_closed_form = RationalFunction(Polynomial(-3 * tau)) * (RationalFunction(Rational(1)) - frac);

  g.routes_agree = (g.gap == g.gap_closed_form);

  if (inv.tau > 0) {
    // gap = -3 tau (2 chi + eps (c1^2 - 2 chi)) / (2 chi + eps c1^2)
    Rational lin = c1sq - 2 * chi;  // = 3 tau > 0 here
    if (lin >= 0) {
      g.negative_for_all_positive_eps = true;
      g.certificate =
          "numerator 2*chi + eps*(c1^2 - 2 chi) and denominator 2*chi + eps*c1^2 have "
          "nonnegative coefficients with positive constant term, so both are positive for "
          "eps > 0 and the -3*tau prefactor makes the gap negative on all of (0, infinity)";
    } else {
      g.eps_star = Rational(2) * chi / (2 * chi - c1sq);
      g.negative_for_all_positive_eps = false;
      g.certificate = "gap < 0 exactly on (0, eps*) with eps* = 2 chi / (2 chi - c1^2)";
    }
  } else {
    g.certificate = inv.tau == 0 ? "gap vanishes identically (tau = 0)"
                                 : "tau < 0: gap is nonnegative for small eps > 0";
  }
  return g;
}

}  // namespace riem4
