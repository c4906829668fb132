#include "opclass/testkit.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "opclass/types.hpp"

namespace opclass {

namespace {

ShiftSpec make_spec(ShiftDirection dir, int size, std::vector<double> w) {
  ShiftSpec s;
  s.direction = dir;
  s.size = size;
  s.weights = std::move(w);
  return s;
}

}  // namespace

ComplexMatrix weighted_shift(const ShiftSpec& spec) {
  if (spec.size < 1) throw input_error("weighted_shift: size must be >= 1");
  if (static_cast<int>(spec.weights.size()) != spec.size - 1)
    throw input_error("weighted_shift: need exactly size - 1 weights");
  for (double w : spec.weights)
    if (!(w > 0) || !std::isfinite(w))
      throw input_error("weighted_shift: weights must be finite and > 0");
  ComplexMatrix m = ComplexMatrix::Zero(spec.size, spec.size);
  for (int j = 0; j + 1 < spec.size; ++j) {
    if (spec.direction == ShiftDirection::forward)
      m(j + 1, j) = spec.weights[j];
    else
      m(j, j + 1) = spec.weights[j];
  }
  return m;
}

ComplexMatrix example_2_2(int n) {
  if (n < 1) throw input_error("example_2_2: size must be >= 1");
  std::vector<double> w(n > 0 ? n - 1 : 0);
  for (int j = 0; j < n - 1; ++j)
    w[j] = (j == 0) ? 1.0 : 1.0 - 1.0 / (j + 2);
  return weighted_shift(make_spec(ShiftDirection::backward, n, std::move(w)));
}

ComplexMatrix example_T(int n) {
  if (n < 1) throw input_error("example_T: size must be >= 1");
  std::vector<double> w(n > 0 ? n - 1 : 0);
  for (int j = 0; j < n - 1; ++j)
    w[j] = (j == 0) ? 1.0 : (j == 1) ? std::numbers::sqrt2 : 2.0;
  return weighted_shift(make_spec(ShiftDirection::forward, n, std::move(w)));
}

ComplexMatrix example_S(int n) {
  if (n < 1) throw input_error("example_S: size must be >= 1");
  std::vector<double> w(n > 0 ? n - 1 : 0);
  for (int j = 0; j < n - 1; ++j)
    w[j] = (j == 0) ? std::numbers::sqrt2 : (j == 1) ? 1.0 : 2.0;
  return weighted_shift(make_spec(ShiftDirection::forward, n, std::move(w)));
}

ComplexMatrix jordan(int k) {
  if (k < 1) throw input_error("jordan: size must be >= 1");
  // ones on the superdiagonal: jordan(2) = [[0,1],[0,0]]
  return weighted_shift(make_spec(ShiftDirection::backward, k,
                                  std::vector<double>(k - 1, 1.0)));
}

ComplexMatrix example_block_R(int p) {
  if (p < 1) throw input_error("example_block_R: size must be >= 1");
  return weighted_shift(make_spec(ShiftDirection::forward, p,
                                  std::vector<double>(p - 1, 1.0)));
}

ComplexMatrix example_block_A1(int p) {
  if (p < 1) throw input_error("example_block_A1: size must be >= 1");
  ComplexMatrix a = ComplexMatrix::Zero(p, 2);
  a(0, 1) = std::numbers::sqrt2;
  return a;
}

ComplexMatrix example_block_B1() {
  ComplexMatrix b = ComplexMatrix::Zero(2, 2);
  b(1, 0) = 1.0;
  return b;
}

ComplexMatrix example_block_A2(int p) {
  if (p < 1) throw input_error("example_block_A2: size must be >= 1");
  ComplexMatrix a = ComplexMatrix::Zero(p, 2);
  a(0, 1) = 1.0;
  return a;
}

ComplexMatrix example_block_B2() {
  ComplexMatrix b = ComplexMatrix::Zero(2, 2);
  b(1, 0) = std::numbers::sqrt2;
  return b;
}

double GaussianStream::uniform() {
  // 53 high bits, shifted into (0, 1] so log() below is always finite
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

void GaussianStream::fill_unit(Complex* dst, int n) {
  double norm2 = 0;
  for (int i = 0; i < n; ++i) {
    double re = next();
    double im = next();
    dst[i] = Complex(re, im);
    norm2 += re * re + im * im;
  }
  if (norm2 <= 0) {  // unreachable in practice, but keep the contract
    dst[0] = 1.0;
    norm2 = 1.0;
  }
  double inv = 1.0 / std::sqrt(norm2);
  for (int i = 0; i < n; ++i) dst[i] *= inv;
}

ComplexMatrix random_generic(int n, std::uint64_t seed) {
  if (n < 1) throw input_error("random_generic: size must be >= 1");
  GaussianStream g(seed);
  ComplexMatrix m(n, n);
  double scale = 1.0 / std::sqrt(2.0 * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      double re = g.next();
      double im = g.next();
      m(i, j) = Complex(re * scale, im * scale);
    }
  return m;
}

ComplexMatrix random_unitary(int n, std::uint64_t seed) {
  ComplexMatrix g = random_generic(n, seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR();
  // make the implied R diagonal positive so the distribution is Haar
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    double mod = std::abs(d);
    q.col(j) *= (mod > 0) ? d / mod : Complex(1.0);
  }
  return q;
}

ComplexMatrix random_normal(int n, std::uint64_t seed) {
  ComplexMatrix u = random_unitary(n, seed);
  GaussianStream g(seed ^ 0x6e6f726d616cULL);
  ComplexVector d(n);
  for (int i = 0; i < n; ++i) {
    double re = g.next();
    double im = g.next();
    d(i) = Complex(re, im);
  }
  return u * d.asDiagonal() * u.adjoint();
}

std::map<std::string, ComplexMatrix> fixture_map(std::uint64_t seed) {
  std::map<std::string, ComplexMatrix> m;
  m["example_2_2"] = example_2_2(8);
  m["example_T"] = example_T(8);
  m["example_S"] = example_S(8);
  m["jordan_3"] = jordan(3);
  m["identity_4"] = ComplexMatrix::Identity(4, 4);
  m["zero_3"] = ComplexMatrix::Zero(3, 3);
  m["unitary_5"] = random_unitary(5, seed);
  m["normal_5"] = random_normal(5, seed + 1);
  m["generic_5"] = random_generic(5, seed + 2);
  ComplexMatrix g = random_generic(4, seed + 3);
  m["selfadjoint_4"] = ComplexMatrix((g + g.adjoint()) / 2.0);
  Eigen::Vector4cd diag(1.0, 2.0, 2.0, 5.0);
  m["positive_diag_4"] = ComplexMatrix(diag.asDiagonal());
  return m;
}

const char* to_string(OracleClass c) {
  switch (c) {
    case OracleClass::hyponormal:
      return "hyponormal";
    case OracleClass::paranormal:
      return "paranormal";
    case OracleClass::star_paranormal:
      return "star_paranormal";
  }
  return "unknown";
}

SlackForms slack_forms(const ComplexMatrix& t, OracleClass cls) {
  require_square(t, "slack_forms");
  SlackForms f;
  f.cls = cls;
  f.dim = static_cast<int>(t.rows());
  if (cls == OracleClass::hyponormal) {
    ComplexMatrix c = t.adjoint() * t - t * t.adjoint();
    f.m1 = (c + c.adjoint()) / 2.0;
  } else {
    ComplexMatrix t2 = t * t;
    ComplexMatrix a = t2.adjoint() * t2;
    f.m1 = (a + a.adjoint()) / 2.0;
    ComplexMatrix b = (cls == OracleClass::paranormal)
                          ? ComplexMatrix(t.adjoint() * t)
                          : ComplexMatrix(t * t.adjoint());
    f.m2 = (b + b.adjoint()) / 2.0;
  }
  return f;
}

namespace {

// <x, M x> for Hermitian M without heap traffic; column-major inner loop
double quad_form(const ComplexMatrix& m, const Complex* x, int n) {
  double acc = 0;
  for (int j = 0; j < n; ++j) {
    acc += m.coeff(j, j).real() * std::norm(x[j]);
    Complex below(0, 0);
    for (int i = 0; i < j; ++i) below += std::conj(x[i]) * m.coeff(i, j);
    acc += 2.0 * (below * x[j]).real();
  }
  return acc;
}

OracleResult scan_forms(const SlackForms& f, int samples, std::uint64_t seed) {
  if (samples < 1) throw input_error("oracle: samples must be >= 1");
  OracleResult out;
  out.samples = samples;
  out.seed = seed;
  GaussianStream g(seed);
  std::vector<Complex> x(f.dim);
  std::vector<Complex> best(f.dim);
  double best_slack = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    g.fill_unit(x.data(), f.dim);
    double v = slack_of(f, x.data());
    if (v < best_slack) {
      best_slack = v;
      best = x;
    }
  }
  out.min_slack = best_slack;
  out.argmin = Eigen::Map<const ComplexVector>(best.data(), f.dim);
  return out;
}

}  // namespace

double slack_of(const SlackForms& f, const Complex* x) {
  double q1 = quad_form(f.m1, x, f.dim);
  if (f.m2.size() == 0) return q1;
  return std::sqrt(std::max(q1, 0.0)) - quad_form(f.m2, x, f.dim);
}

OracleResult vector_oracle(const ComplexMatrix& t, OracleClass cls, int samples,
                           std::uint64_t seed) {
  return scan_forms(slack_forms(t, cls), samples, seed);
}

OracleResult pencil_oracle(const ComplexMatrix& a, const ComplexMatrix& b,
                           int samples, std::uint64_t seed) {
  require_square(a, "pencil_oracle");
  if (b.rows() != a.rows() || b.cols() != a.cols())
    throw input_error("pencil_oracle: dimension mismatch");
  SlackForms f;
  f.cls = OracleClass::star_paranormal;  // same slack shape
  f.dim = static_cast<int>(a.rows());
  f.m1 = (a + a.adjoint()) / 2.0;
  f.m2 = (b + b.adjoint()) / 2.0;
  return scan_forms(f, samples, seed);
}

}  // namespace opclass
