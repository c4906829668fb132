#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "opclass/linalg.hpp"

namespace opclass {

enum class ShiftDirection { forward, backward };

// weights[j] couples e_{j+1} and e_{j+2}: forward maps e_{j+1} to
// weights[j] e_{j+2}, backward maps e_{j+2} to weights[j] e_{j+1}.
struct ShiftSpec {
  ShiftDirection direction = ShiftDirection::forward;
  int size = 0;
  std::vector<double> weights;  // exactly size - 1 strictly positive entries
};

ComplexMatrix weighted_shift(const ShiftSpec& spec);

// Backward shift with weights 1, 1 - 1/3, 1 - 1/4, ...: kills e_1, attains
// its norm 1 on e_2 only, and is not *-paranormal (e_1 violates).
ComplexMatrix example_2_2(int n);

// Forward shift with weights 1, sqrt(2), 2, 2, ...: hyponormal truncations
// on the window.
ComplexMatrix example_T(int n);

// Forward shift with weights sqrt(2), 1, 2, 2, ...: not hyponormal (e_2
// violates by 1) yet *-paranormal on the window, with equality at e_2.
ComplexMatrix example_S(int n);

// Nilpotent Jordan block of size k.
ComplexMatrix jordan(int k);

ComplexMatrix random_generic(int n, std::uint64_t seed);
ComplexMatrix random_unitary(int n, std::uint64_t seed);   // Haar via QR
ComplexMatrix random_normal(int n, std::uint64_t seed);    // U diag U*

// Block operators of the worked counterexample: the model space M is
// spanned by e_3, e_4, ... and its complement by e_1, e_2.
ComplexMatrix example_block_R(int p);   // plain forward shift on M
ComplexMatrix example_block_A1(int p);  // (x1, x2) -> (sqrt(2) x2, 0, ...)
ComplexMatrix example_block_B1();       // (x1, x2) -> (0, x1)
ComplexMatrix example_block_A2(int p);  // (x1, x2) -> (x2, 0, ...)
ComplexMatrix example_block_B2();       // (x1, x2) -> (0, sqrt(2) x1)

// Deterministic named catalog of the above (sizes chosen for fast tests).
std::map<std::string, ComplexMatrix> fixture_map(std::uint64_t seed);

// Deterministic standard-normal stream: mt19937_64 bits fed through an
// explicit Box-Muller transform, so the sequence is identical across
// platforms for a given seed.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}
  double next();
  // n i.i.d. complex gaussians scaled to a unit vector
  void fill_unit(Complex* dst, int n);

 private:
  double uniform();  // in (0, 1]
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0;
};

enum class OracleClass { hyponormal, paranormal, star_paranormal };

const char* to_string(OracleClass c);

// Direct slack of the defining inequality on a unit vector x:
//   hyponormal:       ||Tx||^2 - ||T*x||^2
//   paranormal:       ||T^2 x|| - ||Tx||^2
//   star_paranormal:  ||T^2 x|| - ||T*x||^2
// Precomputed Gram forms so a scan is two quadratic forms per sample.
struct SlackForms {
  OracleClass cls = OracleClass::hyponormal;
  int dim = 0;
  ComplexMatrix m1;  // T*T - TT* (hypo) or (T^2)*(T^2)
  ComplexMatrix m2;  // empty (hypo) or the Gram form of the right-hand side
};

SlackForms slack_forms(const ComplexMatrix& t, OracleClass cls);

double slack_of(const SlackForms& f, const Complex* x);

struct OracleResult {
  double min_slack = 0;
  ComplexVector argmin;
  int samples = 0;
  std::uint64_t seed = 0;
};

// Minimum slack over `samples` seeded random unit vectors.
OracleResult vector_oracle(const ComplexMatrix& t, OracleClass cls, int samples,
                           std::uint64_t seed);

// Same scan for a pre-built PSD pencil pair: slack = sqrt(<Ax,x>) - <Bx,x>.
OracleResult pencil_oracle(const ComplexMatrix& a, const ComplexMatrix& b,
                           int samples, std::uint64_t seed);

}  // namespace opclass
