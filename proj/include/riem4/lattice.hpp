#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riem4/polynomial.hpp"
#include "riem4/rational.hpp"

// Intersection lattices of compact 4-manifolds: exact cup-product pairings,
// characteristic numbers, and the right-hand sides of the curvature bounds.

namespace riem4 {

struct IntersectionLattice {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> pairing;  // symmetric

  size_t rank() const { return labels.size(); }
};

// Coordinates may be exact rationals or polynomials/rational functions of a
// family parameter; the pairing is bilinear in either case.
template <class Coeff = Rational>
struct LatticeClassT {
  std::vector<Coeff> coords;
};
using LatticeClass = LatticeClassT<Rational>;

template <class Coeff>
Coeff pair(const IntersectionLattice& L, const LatticeClassT<Coeff>& a,
           const LatticeClassT<Coeff>& b) {
  if (a.coords.size() != L.rank() || b.coords.size() != L.rank())
    throw std::invalid_argument("lattice pairing: dimension mismatch");
  Coeff s{};
  for (size_t i = 0; i < L.rank(); ++i)
    for (size_t j = 0; j < L.rank(); ++j) s = s + a.coords[i] * Coeff(L.pairing[i][j]) * b.coords[j];
  return s;
}

struct SurfaceInvariants {
  long chi = 0;
  long tau = 0;
  long p = 0;  // base genus (fibered surfaces)
  long q = 0;  // fiber genus
  Rational c1_sq() const { return Rational(2 * chi + 3 * tau); }
  Rational c2() const { return Rational(chi); }
};

// Lattice data for a surface fibered over a genus-p curve with genus-q
// fibers: span {F (fiber class), c1}, with F^2 = 0, c1^2 = 2 chi + 3 tau,
// and c1.F = 2 - 2q. The last pairing is the unique value consistent with
// the adiabatic-family identities asserted in the fine_family tests.
inline std::pair<IntersectionLattice, SurfaceInvariants> kodaira_lattice(long p, long q, long tau) {
  if (p < 2 || q < 2) throw std::invalid_argument("kodaira_lattice: base and fiber genus must be >= 2");
  SurfaceInvariants inv;
  inv.p = p;
  inv.q = q;
  inv.chi = 4 * (p - 1) * (q - 1);
  inv.tau = tau;
  IntersectionLattice L;
  L.labels = {"F", "c1"};
  Rational c1F(2 - 2 * q);
  L.pairing = {{Rational(0), c1F}, {c1F, inv.c1_sq()}};
  return {L, inv};
}

// The two orientation gates 2chi + 3tau >= 0 and 2chi - 3tau >= 0 that an
// Einstein metric forces on a compact oriented 4-manifold.
inline std::pair<bool, bool> hitchin_thorpe(const SurfaceInvariants& inv) {
  return {2 * inv.chi + 3 * inv.tau >= 0, 2 * inv.chi - 3 * inv.tau >= 0};
}

enum class BoundKind {
  Calabi1,   // integral of s^2, Kahler, general m
  Calabi2,   // integral of |r|^2, Kahler, general m
  Who1,      // integral of s^2, Riemannian, m = 2
  Who2,      // integral of |r|^2, Riemannian, m = 2
  Calabi4,   // integral of |W+|^2-related bound, m = 2
  SwProj,    // [c1+]^2 >= (c1.[omega])^2/[omega]^2 projection step
};

struct BoundInputs {
  PiRational c1_dot_omega_pow;  // c1 . [omega]^{m-1}
  PiRational omega_pow;         // [omega]^m
  Rational c1_sq{0};            // c1^2 (. [omega]^{m-2} for general m, as a number)
  Rational c2{0};
  int m = 2;
};

inline Rational factorial(int n) {
  Rational r(1);
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Exact right-hand side of the requested curvature bound, as a multiple of
// a power of pi. General m requires the caller to supply the pairing powers
// explicitly; the lattice layer itself only produces m = 2 pairings.
inline PiRational bound_rhs(BoundKind kind, const BoundInputs& in) {
  PiRational ratio = in.c1_dot_omega_pow * in.c1_dot_omega_pow / in.omega_pow;  // (c1.w^{m-1})^2 / w^m
  PiRational pi2{Rational(1), 2};
  switch (kind) {
    case BoundKind::Calabi1:
      return pi2 * ratio * (Rational(16 * in.m) / factorial(in.m - 1));
    case BoundKind::Calabi2: {
      if (in.m < 2) throw std::invalid_argument("bound_rhs: calabi2 needs m >= 2");
      PiRational inner = ratio * (Rational(in.m) / Rational(in.m - 1)) - PiRational{in.c1_sq, 0};
      return pi2 * inner * (Rational(8) / factorial(in.m - 2));
    }
    case BoundKind::Who1:
      return pi2 * ratio * Rational(32);
    case BoundKind::Who2:
      return pi2 * (ratio * Rational(2) - PiRational{in.c1_sq, 0}) * Rational(8);
    case BoundKind::Calabi4:
      return pi2 * (ratio + PiRational{in.c2 - in.c1_sq, 0}) * Rational(8);
    case BoundKind::SwProj:
      return ratio;
  }
  throw std::logic_error("bound_rhs: unknown kind");
}

// Yamabe-constant upper bound 4 pi c1.[omega] / sqrt([omega]^2 / 2); the
// square root makes this the one inexact export of the module.
inline double yamabe_bound(const PiRational& c1_dot_omega, const PiRational& omega_sq) {
  double w2 = omega_sq.value();
  if (!(w2 > 0.0)) throw std::domain_error("yamabe_bound: [omega]^2 must be positive");
  return 4.0 * M_PI * c1_dot_omega.value() / std::sqrt(w2 / 2.0);
}

}  // namespace riem4
