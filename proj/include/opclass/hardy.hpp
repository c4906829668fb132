#pragma once

#include <map>
#include <string>
#include <vector>

#include "opclass/classify.hpp"

namespace opclass {

// Finitely supported Fourier symbol phi(z) = sum_n c_n z^n; zero
// coefficients are not stored.
struct SymbolSpec {
  std::map<int, Complex> coeffs;
};

// Largest |n| with c_n != 0 (0 for constants and the empty symbol).
int bandwidth(const SymbolSpec& sym);

// Truncated Toeplitz matrix: entry (i, j) = c_{i-j}.
ComplexMatrix toeplitz_matrix(const SymbolSpec& sym, int n);

// Truncated Hankel matrix: entry (i, j) = c_{-(i+j+1)}.  The formula is
// symmetric in (i, j), so the matrix is transpose-symmetric entry for entry.
ComplexMatrix hankel_matrix(const SymbolSpec& sym, int n);

// Two-sided (Laurent) truncation on exponents -n..n-1.  Reference operator
// for tests only: the Toeplitz compressions are windows of it and their
// norms increase toward the symbol's sup norm.
ComplexMatrix laurent_matrix(const SymbolSpec& sym, int n);

// Inverse DFT of equispaced samples phi(e^{2 pi i j / N}), j = 0..N-1,
// placing coefficients on -floor(N/2) .. ceil(N/2)-1.  Direct O(N^2) sum;
// coefficients below 1e-13 of the largest are dropped.
SymbolSpec symbol_from_samples(const std::vector<Complex>& values);

// max_theta |phi(e^{i theta})| on a uniform grid (test oracle for norms).
double symbol_sup_norm(const SymbolSpec& sym, int grid = 4096);

struct ToeplitzReport {
  int window = 0;
  int ambient = 0;  // window + 2 * max(bandwidth, 1)
  IsometryOutcome isometry;  // windowed scalar-isometry fit
  ClassOutcome star;         // windowed *-paranormal test
  std::string predicted;     // the implication the window evidence probes
  bool consistent = false;   // no (star = yes, isometry = no) contradiction
};

struct HankelReport {
  int window = 0;
  ClassOutcome normal;   // the window contains the whole finite-rank operator
  ClassOutcome star;
  std::string predicted;
  bool consistent = false;  // no (star = yes, normal = no) contradiction
};

// Windowed classification of the Toeplitz operator of `sym`: the ambient
// truncation is taken large enough that all bandwidth-2 products are exact
// on the window.
ToeplitzReport classify_toeplitz(const SymbolSpec& sym, int m, const Tolerances& tol = {});

// A Hankel operator with finitely supported symbol lives entirely in the
// leading bandwidth x bandwidth corner, so for m >= bandwidth the window
// tests are tests of the full operator.
HankelReport classify_hankel(const SymbolSpec& sym, int m, const Tolerances& tol = {});

}  // namespace opclass
