#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace opclass {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Thrown for malformed caller input (bad dimensions, non-Hermitian where
// Hermitian is required, unreadable files, ...). The CLI maps it to exit 2.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Certified numerics cannot always decide a membership question at the
// requested tolerance, so every class flag is tri-state.
enum class TriState { no, yes, inconclusive };

inline const char* to_string(TriState s) {
  switch (s) {
    case TriState::no: return "false";
    case TriState::yes: return "true";
    default: return "inconclusive";
  }
}

// One explicit tolerance record passed to every operation.  All thresholds
// are relative to the scale of the input; `scaled` applies the absolute
// floor so zero-norm inputs do not produce zero thresholds.
//
//   hermitian   Hermiticity guards on inputs            default 1e-10
//   eig         eigen/svd reconstruction residuals      default 1e-10
//   rank        rank cut: sigma <= rank*sigma_max -> 0  default 1e-10
//   cluster     relative eigenvalue cluster grouping    default 1e-8
//   membership  class-membership margins                default 1e-10
//   check       decomposition residual verdicts         default 1e-8
//   abs_floor   absolute floor for scaled tolerances    default 1e-12
struct Tolerances {
  double hermitian = 1e-10;
  double eig = 1e-10;
  double rank = 1e-10;
  double cluster = 1e-8;
  double membership = 1e-10;
  double check = 1e-8;
  double abs_floor = 1e-12;

  double scaled(double base, double scale) const {
    return std::max(base * scale, abs_floor);
  }
};

}  // namespace opclass
