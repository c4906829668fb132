#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "opclass/linalg.hpp"

namespace opclass {

struct InvariantReport {
  double residual_invariant = 0;  // ||(I-P) T P|| / ||T||
  double residual_reducing = 0;   // max of the above and ||P T (I-P)|| / ||T||
  bool invariant = false;
  bool reducing = false;
};

// P is the orthogonal projection onto the span of `basis` (orthonormal
// columns; rejected beyond 1e-6).
InvariantReport invariant_check(const ComplexMatrix& t, const ComplexMatrix& basis,
                                const Tolerances& tol = {});

// Block form of T against the eigenspaces of |T| split at a level lambda:
//   H0: eigenvalues above lambda     H1: the lambda cluster     H2: the rest
// In the upper form T conjugates to
//   [ V0  0   0 ]        V0 = direct sum over the alpha clusters of
//   [ 0  lV   A ]             alpha_i x (unitary)
//   [ 0   0   B ]        V an isometry on H1 (lV is the raw block, V = lV/l)
// with V*A = 0, A*A + B*B <= lambda^2 I and ||B|| <= lambda expected of a
// *-paranormal input.  The adjoint form arranges the same data lower
// triangular (V a co-isometry, V A* = 0, AA* + BB* <= lambda^2 I).
struct BlockDecomposition {
  double lambda = 0;
  bool lambda_auto = false;        // lambda picked by the multiplicity rule
  bool lambda_degenerate = false;  // lambda ~ 0: the H1 block is tested against 0
  bool adjoint_form = false;
  ComplexMatrix basis_h0;  // eigenvectors of |T| (or |T*|), descending value
  ComplexMatrix basis_h1;
  ComplexMatrix basis_h2;
  std::vector<double> alphas;  // distinct cluster centers above lambda, descending
  std::vector<int> alpha_mults;
  ComplexMatrix conjugated;  // U* T U with U = [H0 H1 H2]
  ComplexMatrix v0;          // (1,1) block
  ComplexMatrix v;           // H1 block divided by lambda (raw when degenerate)
  ComplexMatrix a;           // coupling block: (2,3) upper form, (3,2) adjoint form
  ComplexMatrix b;           // (3,3) block
};

struct BlockCheckReport {
  // residuals relative to ||T|| (zero blocks) or dimensionless (isometry)
  double zero_12 = 0, zero_13 = 0, zero_21 = 0, zero_31 = 0;
  double zero_off = 0;       // (3,2) upper form / (2,3) adjoint form
  double v0_structure = 0;   // unitarity per alpha block + cross-block coupling
  double v_isometry = 0;     // ||V*V - I|| (VV* in adjoint form); ||block||/||T|| when degenerate
  double vstar_a = 0;        // ||V*A||/||T|| (||V A*|| in adjoint form)
  double contraction = 0;    // max(0, lmax(A*A + B*B - lambda^2 I)) / ||T||^2
  double b_norm_excess = 0;  // max(0, ||B|| - lambda) / ||T||
  double reassembly = 0;     // ||U (U*TU) U* - T|| / ||T||
  bool zero_ok = false, v0_ok = false, v_ok = false, vstar_a_ok = false;
  bool contraction_ok = false, b_norm_ok = false, reassembly_ok = false;
  bool all_ok = false;
};

// Verify the structural conditions of a (possibly hand-built) decomposition
// against the matrix it claims to decompose.  Everything except the stored
// lambda, bases, alpha layout and form flag is recomputed from t.
BlockCheckReport check_blocks(const ComplexMatrix& t, const BlockDecomposition& d,
                              const Tolerances& tol = {});

// Extract the block form of T at the given lambda (default: the cluster of
// |T| with the largest multiplicity, ties toward the smallest value), then
// run check_blocks.
std::pair<BlockDecomposition, BlockCheckReport> star_para_blocks(
    const ComplexMatrix& t, std::optional<double> lambda = std::nullopt,
    const Tolerances& tol = {});

// Same split driven by |T*|, reported in the lower-triangular form.
std::pair<BlockDecomposition, BlockCheckReport> adjoint_blocks(
    const ComplexMatrix& t, std::optional<double> lambda = std::nullopt,
    const Tolerances& tol = {});

// For T = [[C, A], [0, B]] hyponormal, both of these are expected
// nonnegative:
//   res1 = lmin(A*A + B*B - BB*)        res2 = lmin(C*C - CC* - AA*)
struct HypoBlockReport {
  double res1 = 0;
  double res2 = 0;
  bool pass1 = false;
  bool pass2 = false;
};

HypoBlockReport hypo_block_check(const ComplexMatrix& c, const ComplexMatrix& a,
                                 const ComplexMatrix& b, const Tolerances& tol = {});

}  // namespace opclass
