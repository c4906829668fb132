#pragma once

#include <optional>
#include <vector>

#include "opclass/linalg.hpp"

namespace opclass {

enum class PencilKind { generic, paranormal, star_paranormal };
enum class PencilVerdict { certified_nonneg, violation, inconclusive };

const char* to_string(PencilKind k);
const char* to_string(PencilVerdict v);

// Certified scan of the one-parameter pencil
//   Q(k) = A - 2 k B + k^2 I,  A and B Hermitian PSD.
// Positivity of Q(k) for every k > 0 is equivalent to the per-vector
// inequality <Bx,x>^2 <= <Ax,x> on unit vectors.  g(k) = lambda_min(Q(k)) is
// an infimum of parabolas with leading coefficient exactly 1, so on an
// interval of width w it obeys g >= min(endpoint values) - w^2/4.  The scan
// evaluates g on a uniform 512-point grid over [0, ||B||] (the per-vector
// optimum k* = <Bx,x> never exceeds ||B|| and g increases past it), then
// adaptively subdivides any interval whose certified bound is still below
// -tol, and golden-section refines (max 200 iterations) around the located
// minimum for the reported value, argmin and witness.
struct PencilCertificate {
  PencilKind kind = PencilKind::generic;
  double k_max = 0;            // search range [0, k_max], k_max = ||B||
  double grid_step = 0;
  double min_value = 0;        // refined minimum of g (an achieved value)
  double argmin_k = 0;
  double lower_bound = 0;      // certified global lower bound of g on k > 0
  double lipschitz_bound = 0;  // 2(||B|| + k_max), slope bound on the range
  ComplexVector witness;       // unit eigenvector at the refined argmin
  PencilVerdict verdict = PencilVerdict::inconclusive;
  int evaluations = 0;
};

PencilCertificate pencil_min(const ComplexMatrix& a, const ComplexMatrix& b,
                             const Tolerances& tol = {},
                             PencilKind kind = PencilKind::generic);

// Outcome of a single membership test.  `margin` is the signed quantity the
// verdict was read from (class-specific; see each operation).  A `no`
// verdict always carries a witness violating the defining inequality of the
// class by more than the tolerance when evaluated directly.
struct ClassOutcome {
  TriState verdict = TriState::inconclusive;
  double margin = 0;
  std::optional<ComplexVector> witness;
  std::optional<PencilCertificate> certificate;
};

struct IsometryOutcome {
  TriState verdict = TriState::inconclusive;
  double c = 0;         // fitted scale on the input's scale
  double residual = 0;  // ||T*T - c^2 I|| after unit normalization
};

// All membership tests rescale T to unit operator norm first (every class
// here is closed under positive scaling); a zero matrix short-circuits to
// the all-true answers of the normal chain.
ClassOutcome is_normal(const ComplexMatrix& t, const Tolerances& tol = {});
ClassOutcome is_self_adjoint(const ComplexMatrix& t, const Tolerances& tol = {});
ClassOutcome is_positive(const ComplexMatrix& t, const Tolerances& tol = {});
ClassOutcome is_unitary(const ComplexMatrix& t, const Tolerances& tol = {});
IsometryOutcome is_isometry_multiple(const ComplexMatrix& t, const Tolerances& tol = {});

// lambda_min(T*T - TT*) >= -tol after normalization.
ClassOutcome is_hyponormal(const ComplexMatrix& t, const Tolerances& tol = {});

// Pencil test with A = (T^2)*(T^2), B = T*T:  ||Tx||^2 <= ||T^2 x|| ||x||.
ClassOutcome is_paranormal(const ComplexMatrix& t, const Tolerances& tol = {});

// Pencil test with A = (T^2)*(T^2), B = TT*:  ||T*x||^2 <= ||T^2 x|| ||x||.
ClassOutcome is_star_paranormal(const ComplexMatrix& t, const Tolerances& tol = {});

// Leading m x m compressions of the Gram products of an ambient truncation.
// Ambient dimension n >= m + 2 keeps bandwidth-2 products (T^2, T*^2 and
// mixed) exact on the window for banded operators of bandwidth 1.
struct Compressions {
  ComplexMatrix a;       // ((T^2)* T^2)_m
  ComplexMatrix b_hypo;  // (T*T - TT*)_m
  ComplexMatrix b_para;  // (T*T)_m
  ComplexMatrix b_star;  // (TT*)_m
  int window = 0;
  int ambient = 0;
};

Compressions compress(const ComplexMatrix& t_ambient, int m);

// Windowed variants: the defining inequality restricted to vectors supported
// on the leading window.  Witnesses are reported zero-padded to the ambient
// dimension.
ClassOutcome is_hyponormal_compressed(const ComplexMatrix& t_ambient, int m,
                                      const Tolerances& tol = {});
ClassOutcome is_paranormal_compressed(const ComplexMatrix& t_ambient, int m,
                                      const Tolerances& tol = {});
ClassOutcome is_star_paranormal_compressed(const ComplexMatrix& t_ambient, int m,
                                           const Tolerances& tol = {});
IsometryOutcome is_isometry_multiple_compressed(const ComplexMatrix& t_ambient, int m,
                                                const Tolerances& tol = {});

struct ClassReport {
  int dim = 0;
  std::optional<int> window;  // set for windowed reports
  double norm = 0;            // ||T|| on the input scale
  double commutator = 0;      // ||T*T - TT*|| on the input scale
  TriState normal = TriState::inconclusive;
  TriState self_adjoint = TriState::inconclusive;
  TriState positive = TriState::inconclusive;
  TriState unitary = TriState::inconclusive;
  TriState isometry_multiple = TriState::inconclusive;
  TriState hyponormal = TriState::inconclusive;
  TriState paranormal = TriState::inconclusive;
  TriState star_paranormal = TriState::inconclusive;
  double isometry_scale = 0;
  double hypo_margin = 0;
  std::optional<ComplexVector> hypo_witness;
  std::optional<ComplexVector> para_witness;
  std::optional<ComplexVector> star_witness;
  std::optional<PencilCertificate> para_certificate;
  std::optional<PencilCertificate> star_certificate;
  Tolerances tolerances;
};

ClassReport classify(const ComplexMatrix& t, const Tolerances& tol = {});
ClassReport classify_compressed(const ComplexMatrix& t_ambient, int m,
                                const Tolerances& tol = {});

// Orthonormal basis (columns) of the top singular cluster of T:
// eigenvectors of |T| with value >= ||T|| (1 - cluster tolerance).
ComplexMatrix norm_attaining_subspace(const ComplexMatrix& t, const Tolerances& tol = {});

// Residuals | ||T^k x|| - ||T||^k ||x|| | for k = 1..n_powers.
std::vector<double> powers_chain(const ComplexMatrix& t, const ComplexVector& x,
                                 int n_powers);

// Orthonormal basis of the intersection over k = 1..n_powers of
// ker(|T^k| - ||T||^k I) at the cluster tolerance; empty matrix when the
// intersection is trivial.
ComplexMatrix joint_norm_attaining_set(const ComplexMatrix& t, int n_powers,
                                       const Tolerances& tol = {});

struct KernelCompare {
  ComplexMatrix ker;       // orthonormal basis of ker(T)
  ComplexMatrix ker_star;  // orthonormal basis of ker(T*)
  double projector_gap = 0;
  bool equal = false;
};

KernelCompare kernel_compare(const ComplexMatrix& t, const Tolerances& tol = {});

}  // namespace opclass
