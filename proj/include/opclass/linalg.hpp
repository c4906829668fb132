#pragma once

#include "opclass/types.hpp"

namespace opclass {

// Hermitian eigendecomposition, values ascending.  Within a numerically
// degenerate cluster the vectors are re-fixed by Gram-Schmidt over the
// canonical basis and every column gets a canonical phase, so repeated runs
// and repeated eigenvalues give byte-identical output.
struct HermEig {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns, vectors.col(i) <-> values(i)
};

struct SvdParts {
  ComplexMatrix u;     // left singular vectors
  RealVector singular; // descending, as computed
  ComplexMatrix v;     // right singular vectors
};

// T = w * p with p = |T| positive semidefinite and w a partial isometry
// whose kernel matches ker(T) at the rank tolerance.
struct PolarParts {
  ComplexMatrix w;
  ComplexMatrix p;
};

struct PsdMin {
  double value = 0;       // smallest eigenvalue
  ComplexVector witness;  // unit eigenvector attaining it
};

// Operator (spectral) norm; 0 for empty matrices.
double op_norm(const ComplexMatrix& t);

// min over unit x of ||T x||: smallest singular value, or 0 when the domain
// dimension exceeds the codomain dimension.
double min_modulus(const ComplexMatrix& t);

HermEig herm_eig(const ComplexMatrix& a, const Tolerances& tol = {});

SvdParts svd(const ComplexMatrix& t);

// |T| = (T* T)^{1/2}, computed from the SVD.
ComplexMatrix modulus(const ComplexMatrix& t);

PolarParts polar(const ComplexMatrix& t, const Tolerances& tol = {});

// Smallest eigenvalue of a Hermitian matrix plus a unit witness.
PsdMin psd_min(const ComplexMatrix& a, const Tolerances& tol = {});

// ||T*T - TT*|| in operator norm.
double commutator_norm(const ComplexMatrix& t);

// Shared validation helpers.
void require_finite(const ComplexMatrix& m, const char* what);
void require_square(const ComplexMatrix& m, const char* what);
void require_hermitian(const ComplexMatrix& m, const Tolerances& tol, const char* what);

}  // namespace opclass
