#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riem4/fine_family.hpp"
#include "riem4/lattice.hpp"
#include "riem4/polynomial.hpp"
#include "riem4/rational.hpp"

using namespace riem4;

TEST_CASE("rational function canonical form: reduction and monic denominator") {
  Polynomial eps = Polynomial::x();
  RationalFunction f(eps * eps * Polynomial(Rational(2)), eps * Polynomial(Rational(4)));
  CHECK(f.num == eps * Polynomial(Rational(1, 2)));
  CHECK(f.den == Polynomial(Rational(1)));
  RationalFunction g(Polynomial{Rational(1), Rational(1)},
                     Polynomial{Rational(2), Rational(2), Rational(0)});
  CHECK(g.num == Polynomial(Rational(1, 2)));
  CHECK(g.den == Polynomial(Rational(1)));
  // arithmetic stays reduced
  RationalFunction h = RationalFunction(eps, Polynomial{Rational(0), Rational(0), Rational(1)});
  CHECK(h == RationalFunction(Polynomial(Rational(1)), eps));
  CHECK(h * RationalFunction(eps) == RationalFunction(Rational(1)));
}

TEST_CASE("lattice pairing: S2 x S2 with c1 = 2 sigma1 + 2 sigma2") {
  IntersectionLattice L;
  L.labels = {"sigma1", "sigma2"};
  L.pairing = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  LatticeClass zero{{Rational(0), Rational(0)}};
  LatticeClass c1{{Rational(2), Rational(2)}};
  CHECK(pair(L, zero, c1) == 0);
  CHECK(pair(L, c1, c1) == 8);  // = 2 chi + 3 tau for (chi, tau) = (4, 0)
  LatticeClass bad{{Rational(1)}};
  CHECK_THROWS_AS((void)pair(L, bad, c1), std::invalid_argument);
}

TEST_CASE("fibered-surface lattice invariants") {
  auto [L, inv] = kodaira_lattice(2, 3, 16);
  CHECK(inv.chi == 8);
  CHECK(inv.c1_sq() == 64);
  CHECK(inv.c2() == 8);
  LatticeClass F{{Rational(1), Rational(0)}}, c1{{Rational(0), Rational(1)}};
  CHECK(pair(L, F, F) == 0);
  CHECK(pair(L, c1, F) == -4);  // 2 - 2q
  CHECK(pair(L, c1, c1) == 64);

  auto [L2, inv2] = kodaira_lattice(2, 2, 0);
  CHECK(inv2.chi == 4);
  CHECK(inv2.c1_sq() == 8);
  CHECK_THROWS_AS((void)kodaira_lattice(1, 3, 0), std::invalid_argument);
}

TEST_CASE("adiabatic family: symbolic pairings for arbitrary (p, q, tau)") {
  for (auto [p, q, tau] : {std::tuple<long, long, long>{2, 3, 16}, {3, 4, 6}, {2, 2, 0}, {5, 2, 2}}) {
    auto [L, inv] = kodaira_lattice(p, q, tau);
    auto f = fine_family(L, inv);
    Rational chi(inv.chi), c1sq = inv.c1_sq();
    // c1 . [omega_eps] = -(chi + eps c1^2)
    CHECK(f.c1_dot_omega == Polynomial{-chi, -c1sq});
    // [omega_eps]^2 = eps (2 chi + eps c1^2)
    CHECK(f.omega_sq == Polynomial{Rational(0), 2 * chi, c1sq});
    CHECK(f.total_scalar_over_4pi == f.c1_dot_omega);
    // integral of s^2 / (32 pi^2) = (chi + eps c1^2)^2 / (eps (2 chi + eps c1^2))
    CHECK(f.s2_over_32pi2 ==
          RationalFunction(Polynomial{chi, c1sq} * Polynomial{chi, c1sq},
                           Polynomial{Rational(0), 2 * chi, c1sq}));
  }
}

TEST_CASE("canonical-class projections: symbolic identities") {
  for (auto [p, q, tau] : {std::tuple<long, long, long>{2, 3, 16}, {3, 4, 6}, {4, 2, -3}}) {
    auto [L, inv] = kodaira_lattice(p, q, tau);
    auto t = taubes_class_projections(L, inv);
    Rational chi(inv.chi), ta(inv.tau), c1sq = inv.c1_sq();
    CHECK(t.c1_bar_dot_omega == Polynomial{-chi, -3 * ta});
    CHECK(t.c1_bar_sq == 3 * ta - 2 * chi);
    // |c1_bar+|^2 = (chi + 3 eps tau)^2 / (eps (2 chi + eps c1^2))
    CHECK(t.plus_sq == RationalFunction(Polynomial{chi, 3 * ta} * Polynomial{chi, 3 * ta},
                                        Polynomial{Rational(0), 2 * chi, c1sq}));
    // almost-complex relation
    CHECK(t.minus_sq - t.plus_sq == RationalFunction(Polynomial(2 * chi - 3 * ta)));
  }
}

TEST_CASE("numeric spot checks at (p,q,tau) = (2,3,16), eps = 1/100") {
  auto [L, inv] = kodaira_lattice(2, 3, 16);
  auto f = fine_family(L, inv);
  auto t = taubes_class_projections(L, inv);
  Rational eps(1, 100);
  // integral of s^2 = 32 pi^2 * value = 186624 pi^2 / 13
  CHECK(f.s2_over_32pi2(eps) * 32 == Rational(186624, 13));
  CHECK(t.c1_bar_dot_omega(eps) == Rational(-212, 25));
  CHECK(f.c1_dot_omega(eps) == Rational(-(Rational(8) + Rational(64, 100))));
  CHECK(f.omega_sq(eps) == eps * (16 + eps * 64));
}

TEST_CASE("curvature-energy gap: both routes agree and the sign analysis is exact") {
  for (auto [p, q, tau] : {std::tuple<long, long, long>{2, 3, 16}, {3, 4, 6}, {2, 5, 1}}) {
    auto [L, inv] = kodaira_lattice(p, q, tau);
    auto g = counterexample_gap(L, inv);
    CHECK(g.routes_agree);
    CHECK(g.negative_for_all_positive_eps);
    CHECK(!g.eps_star.has_value());
    // spot check negativity at a few rationals
    for (Rational e : {Rational(1, 100), Rational(1, 2), Rational(7)}) CHECK(g.gap(e) < 0);
  }
  auto [L, inv] = kodaira_lattice(2, 3, 16);
  auto g = counterexample_gap(L, inv);
  CHECK(g.gap(Rational(1, 100)) == Rational(-618, 13));
  // tau = 0: gap vanishes identically
  auto [L0, inv0] = kodaira_lattice(2, 2, 0);
  auto g0 = counterexample_gap(L0, inv0);
  CHECK(g0.routes_agree);
  CHECK(g0.gap.num.is_zero());
}

TEST_CASE("bound right-hand sides from exact pairings") {
  // S2 x S2 with [omega] = 4 pi (sigma1 + sigma2)
  BoundInputs in;
  in.c1_dot_omega_pow = PiRational{Rational(16), 1};
  in.omega_pow = PiRational{Rational(32), 2};
  in.c1_sq = Rational(8);
  in.c2 = Rational(4);
  CHECK(bound_rhs(BoundKind::Who1, in) == PiRational{Rational(256), 2});
  CHECK(bound_rhs(BoundKind::Calabi1, in) == PiRational{Rational(256), 2});  // m = 2 agreement
  // who2 = 8 pi^2 [2 * 8 - 8] = 64 pi^2
  CHECK(bound_rhs(BoundKind::Who2, in) == PiRational{Rational(64), 2});
  // calabi4 = 8 pi^2 [8 + 4 - 8] = 32 pi^2
  CHECK(bound_rhs(BoundKind::Calabi4, in) == PiRational{Rational(32), 2});
  CHECK(bound_rhs(BoundKind::SwProj, in) == PiRational{Rational(8), 0});
  // calabi2 at m = 2 must agree with who2
  CHECK(bound_rhs(BoundKind::Calabi2, in) == bound_rhs(BoundKind::Who2, in));
  // Yamabe bound: 4 pi * 16 pi / sqrt(16 pi^2) = 16 pi
  CHECK(yamabe_bound(in.c1_dot_omega_pow, in.omega_pow) ==
        doctest::Approx(16.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("Einstein-obstruction arithmetic gate") {
  CHECK(hitchin_thorpe({4, 0}) == std::make_pair(true, true));
  CHECK(hitchin_thorpe({0, 0}) == std::make_pair(true, true));
  CHECK(hitchin_thorpe({8, 16}) == std::make_pair(true, false));
}
