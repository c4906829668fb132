#include "opclass/hardy.hpp"

#include <cmath>
#include <numbers>

namespace opclass {

namespace {

Complex coeff(const SymbolSpec& sym, int n) {
  auto it = sym.coeffs.find(n);
  return it == sym.coeffs.end() ? Complex(0, 0) : it->second;
}

void require_size(int n, const char* what) {
  if (n < 1) throw input_error(std::string(what) + ": size must be at least 1");
}

void require_finite_symbol(const SymbolSpec& sym, const char* what) {
  for (const auto& [n, c] : sym.coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw input_error(std::string(what) + ": coefficients must be finite");
}

}  // namespace

int bandwidth(const SymbolSpec& sym) {
  int bw = 0;
  for (const auto& [n, c] : sym.coeffs)
    if (c != Complex(0, 0)) bw = std::max(bw, std::abs(n));
  return bw;
}

ComplexMatrix toeplitz_matrix(const SymbolSpec& sym, int n) {
  require_size(n, "toeplitz_matrix");
  require_finite_symbol(sym, "toeplitz_matrix");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = coeff(sym, i - j);
  return m;
}

ComplexMatrix hankel_matrix(const SymbolSpec& sym, int n) {
  require_size(n, "hankel_matrix");
  require_finite_symbol(sym, "hankel_matrix");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = coeff(sym, -(i + j + 1));
  return m;
}

ComplexMatrix laurent_matrix(const SymbolSpec& sym, int n) {
  require_size(n, "laurent_matrix");
  // exponents -n..n-1; entry formula is translation invariant, so this is
  // the 2n Toeplitz window
  return toeplitz_matrix(sym, 2 * n);
}

SymbolSpec symbol_from_samples(const std::vector<Complex>& values) {
  const int n = static_cast<int>(values.size());
  if (n < 1) throw input_error("symbol_from_samples: need at least one sample");
  for (const Complex& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw input_error("symbol_from_samples: samples must be finite");

  SymbolSpec sym;
  const double tau = 2.0 * std::numbers::pi;
  double peak = 0;
  std::map<int, Complex> raw;
  for (int k = -(n / 2); k <= (n + 1) / 2 - 1; ++k) {
    Complex acc(0, 0);
    for (int j = 0; j < n; ++j) {
      double ang = -tau * k * j / n;
      acc += values[j] * Complex(std::cos(ang), std::sin(ang));
    }
    acc /= static_cast<double>(n);
    raw[k] = acc;
    peak = std::max(peak, std::abs(acc));
  }
  for (const auto& [k, c] : raw)
    if (std::abs(c) > 1e-13 * peak) sym.coeffs[k] = c;
  return sym;
}

double symbol_sup_norm(const SymbolSpec& sym, int grid) {
  if (grid < 1) throw input_error("symbol_sup_norm: grid must be positive");
  const double tau = 2.0 * std::numbers::pi;
  double best = 0;
  for (int j = 0; j < grid; ++j) {
    double theta = tau * j / grid;
    Complex acc(0, 0);
    for (const auto& [n, c] : sym.coeffs)
      acc += c * Complex(std::cos(n * theta), std::sin(n * theta));
    best = std::max(best, std::abs(acc));
  }
  return best;
}

ToeplitzReport classify_toeplitz(const SymbolSpec& sym, int m, const Tolerances& tol) {
  if (m < 1) throw input_error("classify_toeplitz: window must be at least 1");
  ToeplitzReport r;
  r.window = m;
  r.ambient = m + 2 * std::max(1, bandwidth(sym));
  ComplexMatrix t = toeplitz_matrix(sym, r.ambient);
  r.isometry = is_isometry_multiple_compressed(t, m, tol);
  r.star = is_star_paranormal_compressed(t, m, tol);
  r.predicted = "star_paranormal implies scalar multiple of an isometry";
  r.consistent = !(r.star.verdict == TriState::yes &&
                   r.isometry.verdict == TriState::no);
  return r;
}

HankelReport classify_hankel(const SymbolSpec& sym, int m, const Tolerances& tol) {
  if (m < 1) throw input_error("classify_hankel: window must be at least 1");
  HankelReport r;
  r.window = m;
  int ambient = m + 2 * std::max(1, bandwidth(sym));
  ComplexMatrix h = hankel_matrix(sym, ambient);
  r.normal = is_normal(h.topLeftCorner(m, m), tol);
  r.star = is_star_paranormal_compressed(h, m, tol);
  r.predicted = "star_paranormal implies normal";
  r.consistent = !(r.star.verdict == TriState::yes &&
                   r.normal.verdict == TriState::no);
  return r;
}

}  // namespace opclass
