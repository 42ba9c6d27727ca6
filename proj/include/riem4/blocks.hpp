#pragma once

#include <array>
#include <cmath>

#include "riem4/frame.hpp"
#include "riem4/two_form.hpp"

// Block decomposition of the curvature operator on Lambda^2 = L+ (+) L-.
//
// The operator is (R phi)_{ab} = (1/2) R_{ab}{}^{cd} phi_{cd}; on the round
// unit 4-sphere it is the identity. With the <F,G> = (1/2) F G convention
// its matrix in an orthonormal basis of 2-forms has trace s/4 on each of
// L+/L-, i.e. the scalar part acts as s/12. The norm conventions below
// (Frobenius norms of the blocks, tensor norm for the traceless Ricci) make
// |W+|^2 = s^2/24 on Kahler metrics and give the Gauss-Bonnet, signature,
// and |R|^2 integrands their standard coefficients; see blocks tests.

namespace riem4 {

struct CurvatureBlocks {
  Mat3d w_plus{};            // trace-free self-dual Weyl block
  Mat3d w_minus{};           // trace-free anti-self-dual Weyl block
  double scalar = 0.0;
  Mat4d ricci_traceless{};   // coordinate components
  Mat4d g{}, g_inv{};
  Mat6d op{};                // full operator matrix, basis (L+ then L-)
  std::array<TwoForm, 6> basis{};  // orthonormal basis 2-forms (coordinate components)
};

// Orthonormal coframe of g from Gram-Schmidt on the coordinate frame,
// returned as coframe[a][c]: components of e^a in dx^c.
inline Mat4d gram_schmidt_coframe(const Mat4d& g) {
  // frame[a] = rows: vectors E_a with g(E_a, E_b) = delta
  Mat4d frame = mat4_zero<double>();
  for (int a = 0; a < 4; ++a) {
    Vec4d v{};
    v[a] = 1.0;
    for (int b = 0; b < a; ++b) {
      double proj = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) proj += g[i][j] * v[i] * frame[b][j];
      for (int i = 0; i < 4; ++i) v[i] -= proj * frame[b][i];
    }
    double nrm = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) nrm += g[i][j] * v[i] * v[j];
    if (nrm <= 0.0) throw DegenerateMetricError("gram_schmidt_coframe: metric not positive definite");
    nrm = std::sqrt(nrm);
    for (int i = 0; i < 4; ++i) frame[a][i] = v[i] / nrm;
  }
  // coframe = inverse-transpose of frame matrix: e^a(E_b) = delta^a_b
  Mat4d frame_t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) frame_t[i][j] = frame[j][i];
  return inv4(frame_t);
}

inline TwoForm wedge(const Mat4d& coframe, int a, int b) {
  TwoForm f = mat4_zero<double>();
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d) f[c][d] = coframe[a][c] * coframe[b][d] - coframe[a][d] * coframe[b][c];
  return f;
}

// Orthonormal basis of Lambda^2: first three self-dual, last three
// anti-self-dual, for the given orientation of the coordinate order.
inline std::array<TwoForm, 6> form_basis(const Mat4d& g, int orientation) {
  Mat4d co = gram_schmidt_coframe(g);
  static const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  std::array<TwoForm, 6> basis;
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 3; ++i) {
    TwoForm f1 = wedge(co, pairs[i][0], pairs[i][1]);
    TwoForm f2 = wedge(co, pairs[i][2], pairs[i][3]);
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        double self = (f1[c][d] + orientation * f2[c][d]) * inv_sqrt2;
        double anti = (f1[c][d] - orientation * f2[c][d]) * inv_sqrt2;
        basis[i][c][d] = self;
        basis[3 + i][c][d] = anti;
      }
  }
  return basis;
}

// Apply the curvature operator to a 2-form via direct contraction of the
// Riemann tensor.
inline TwoForm curvature_apply(const PointFrameData& f, const TwoForm& phi) {
  TwoForm up = raise_indices(f.g_inv, phi);
  TwoForm r = mat4_zero<double>();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) s += f.riemann[a][b][c][d] * up[c][d];
      r[a][b] = 0.5 * s;
    }
  return r;
}

inline CurvatureBlocks curvature_blocks(const PointFrameData& f, int orientation) {
  CurvatureBlocks cb;
  cb.scalar = f.scalar;
  cb.ricci_traceless = f.ricci_traceless;
  cb.g = f.g;
  cb.g_inv = f.g_inv;
  cb.basis = form_basis(f.g, orientation);

  std::array<TwoForm, 6> image;
  for (int j = 0; j < 6; ++j) image[j] = curvature_apply(f, cb.basis[j]);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) cb.op[i][j] = form_inner(f.g_inv, cb.basis[i], image[j]);

  double trp = (cb.op[0][0] + cb.op[1][1] + cb.op[2][2]) / 3.0;
  double trm = (cb.op[3][3] + cb.op[4][4] + cb.op[5][5]) / 3.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cb.w_plus[i][j] = cb.op[i][j] - (i == j ? trp : 0.0);
      cb.w_minus[i][j] = cb.op[3 + i][3 + j] - (i == j ? trm : 0.0);
    }
  return cb;
}

// The traceless-Ricci action on 2-forms appearing in the operator's
// off-diagonal blocks: phi_{ab} -> phi_[a}^c rdot_{b]c with weight-1/2
// antisymmetrization, i.e. (1/2)(phi_a^c rdot_bc - phi_b^c rdot_ac).
// This normalization is the one consistent with (R phi) = (1/2) Riem phi;
// it is pinned by the reassembly test on the unequal sphere product.
inline TwoForm ricci_action(const Mat4d& g_inv, const Mat4d& rdot, const TwoForm& phi) {
  TwoForm r = mat4_zero<double>();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int c = 0; c < 4; ++c)
        for (int e = 0; e < 4; ++e)
          s += phi[a][e] * g_inv[e][c] * rdot[b][c] - phi[b][e] * g_inv[e][c] * rdot[a][c];
      r[a][b] = 0.5 * s;
    }
  return r;
}

struct PointwiseNorms {
  double scalar = 0.0;  // signed, for integrands mixing s with the norms
  double w_plus_sq = 0.0;
  double w_minus_sq = 0.0;
  double ricci_traceless_sq = 0.0;
  double scalar_sq = 0.0;
  double riemann_op_sq = 0.0;  // |R|^2: Frobenius norm of the operator matrix
};

inline PointwiseNorms pointwise_norms(const CurvatureBlocks& cb) {
  PointwiseNorms n;
  n.scalar = cb.scalar;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      n.w_plus_sq += cb.w_plus[i][j] * cb.w_plus[i][j];
      n.w_minus_sq += cb.w_minus[i][j] * cb.w_minus[i][j];
    }
  n.ricci_traceless_sq = tensor_norm_sq(cb.ricci_traceless, cb.g_inv);
  n.scalar_sq = cb.scalar * cb.scalar;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) n.riemann_op_sq += cb.op[i][j] * cb.op[i][j];
  return n;
}

}  // namespace riem4
