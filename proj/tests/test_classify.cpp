#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "opclass/classify.hpp"
#include "opclass/testkit.hpp"

using namespace opclass;

namespace {

// Diagonal pencils have a closed form: for A = diag(a_j), B = diag(b_j),
// min_{k>0} lambda_min(A - 2kB + k^2 I) = min_j (a_j - b_j^2), attained at
// k = b_j for the minimizing index.
struct DiagPencil {
  ComplexMatrix a, b;
  double expected;
};

DiagPencil make_diag_pencil(int n, GaussianStream& g, double c_floor,
                            double c_span) {
  DiagPencil out;
  out.a = ComplexMatrix::Zero(n, n);
  out.b = ComplexMatrix::Zero(n, n);
  out.expected = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    double bj = std::min(1.5, 0.3 + 0.5 * std::abs(g.next()));
    double cj = c_floor + c_span * std::abs(std::sin(g.next()));
    out.b(j, j) = bj;
    out.a(j, j) = bj * bj + cj;
    out.expected = std::min(out.expected, cj);
  }
  return out;
}

}  // namespace

TEST_CASE("pencil_min matches the diagonal closed form when positive") {
  GaussianStream g(101);
  for (int trial = 0; trial < 10; ++trial) {
    DiagPencil p = make_diag_pencil(4 + trial % 3, g, 0.05, 0.5);
    PencilCertificate c = pencil_min(p.a, p.b);
    CHECK(c.verdict == PencilVerdict::certified_nonneg);
    CHECK(c.min_value >= p.expected - 1e-12);
    CHECK(c.min_value <= p.expected + 1e-5);
    CHECK(c.lower_bound <= c.min_value + 1e-12);
    CHECK(c.evaluations > 0);
  }
}

TEST_CASE("pencil_min locates a planted violation") {
  GaussianStream g(202);
  for (int trial = 0; trial < 6; ++trial) {
    DiagPencil p = make_diag_pencil(5, g, 0.05, 0.5);
    // plant one strictly negative vertex value
    double b0 = std::real(p.b(0, 0));
    p.a(0, 0) = b0 * b0 * 0.6;  // c_0 = -0.4 b_0^2 < 0
    PencilCertificate c = pencil_min(p.a, p.b);
    CHECK(c.verdict == PencilVerdict::violation);
    CHECK(c.min_value <= -0.01);
    // the reported minimum is an achieved value: never below the true one
    CHECK(c.min_value >= -0.4 * b0 * b0 - 1e-12);
  }
}

TEST_CASE("pencil_min certifies the exact boundary A = B^2") {
  GaussianStream g(303);
  for (int trial = 0; trial < 4; ++trial) {
    int n = 4 + trial;
    ComplexMatrix b = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) b(j, j) = std::min(1.5, 0.3 + 0.5 * std::abs(g.next()));
    ComplexMatrix a = b * b;
    PencilCertificate c = pencil_min(a, b);
    CHECK(c.verdict == PencilVerdict::certified_nonneg);
    CHECK(c.min_value >= -1e-12);
    CHECK(c.lower_bound >= -1e-9);
    // the same pencil conjugated by a unitary certifies as well
    ComplexMatrix q = random_unitary(n, 900 + trial);
    PencilCertificate cc =
        pencil_min(ComplexMatrix(q * a * q.adjoint()), ComplexMatrix(q * b * q.adjoint()));
    CHECK(cc.verdict == PencilVerdict::certified_nonneg);
    CHECK(cc.lower_bound >= -1e-9);
  }
}

TEST_CASE("pencil_min validates its inputs") {
  ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix id3 = ComplexMatrix::Identity(3, 3);
  CHECK_THROWS_AS(pencil_min(id2, id3), input_error);            // size mismatch
  CHECK_THROWS_AS(pencil_min(ComplexMatrix(-id2), id2), input_error);  // A not PSD
  ComplexMatrix nh(2, 2);
  nh << 0, 1, 0, 0;
  CHECK_THROWS_AS(pencil_min(nh, id2), input_error);  // not Hermitian
  CHECK_THROWS_AS(pencil_min(ComplexMatrix(0, 0), ComplexMatrix(0, 0)), input_error);
}

TEST_CASE("a nilpotent jordan block is not *-paranormal") {
  ComplexMatrix j = jordan(2);
  ClassOutcome star = is_star_paranormal(j);
  CHECK(star.verdict == TriState::no);
  REQUIRE(star.witness.has_value());
  // defining inequality fails at the witness: ||T* x||^2 - ||T^2 x|| ||x|| = 1
  const ComplexVector& x = *star.witness;
  double lhs = (j.adjoint() * x).squaredNorm();
  double rhs = (j * j * x).norm();
  CHECK(lhs - rhs == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(star.margin <= -1.0 + 1e-8);
  // J_2 is paranormal-violating too, and certainly not hyponormal
  CHECK(is_paranormal(j).verdict == TriState::no);
  CHECK(is_hyponormal(j).verdict == TriState::no);
}

TEST_CASE("windowed tests separate the two weighted shifts") {
  ComplexMatrix t = example_T(10);
  ComplexMatrix s = example_S(10);
  const int m = 8;

  CHECK(is_hyponormal_compressed(t, m).verdict == TriState::yes);

  ClassOutcome hs = is_hyponormal_compressed(s, m);
  CHECK(hs.verdict == TriState::no);
  REQUIRE(hs.witness.has_value());
  CHECK(hs.witness->size() == 10);
  // the violating direction is e_1, where the weights drop from sqrt(2) to 1
  CHECK(std::abs((*hs.witness)(1)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(hs.margin == doctest::Approx(-0.25).epsilon(1e-10));  // on unit scale

  ClassOutcome ss = is_star_paranormal_compressed(s, m);
  CHECK(ss.verdict == TriState::yes);
  CHECK(ss.margin >= -1e-10);
  CHECK(is_star_paranormal_compressed(t, m).verdict == TriState::yes);
}

TEST_CASE("unitary matrices pass the whole chain") {
  ComplexMatrix u = random_unitary(5, 77);
  ClassReport r = classify(u);
  CHECK(r.normal == TriState::yes);
  CHECK(r.unitary == TriState::yes);
  CHECK(r.isometry_multiple == TriState::yes);
  CHECK(r.isometry_scale == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.hyponormal == TriState::yes);
  CHECK(r.paranormal == TriState::yes);
  CHECK(r.star_paranormal == TriState::yes);
  CHECK(r.norm == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("the zero matrix short-circuits") {
  ComplexMatrix z = ComplexMatrix::Zero(3, 3);
  ClassReport r = classify(z);
  CHECK(r.normal == TriState::yes);
  CHECK(r.self_adjoint == TriState::yes);
  CHECK(r.positive == TriState::yes);
  CHECK(r.unitary == TriState::no);
  CHECK(r.isometry_multiple == TriState::yes);
  CHECK(r.isometry_scale == 0.0);
  CHECK(r.hyponormal == TriState::yes);
  CHECK(r.paranormal == TriState::yes);
  CHECK(r.star_paranormal == TriState::yes);
}

TEST_CASE("verdicts and normalized margins are scale invariant") {
  ComplexMatrix t = random_generic(5, 31);
  ClassReport r1 = classify(t);
  ClassReport r2 = classify(ComplexMatrix(7.3 * t));
  CHECK(r1.hyponormal == r2.hyponormal);
  CHECK(r1.paranormal == r2.paranormal);
  CHECK(r1.star_paranormal == r2.star_paranormal);
  CHECK(r1.normal == r2.normal);
  CHECK(r1.hypo_margin == doctest::Approx(r2.hypo_margin).epsilon(1e-9));
  CHECK(r2.norm == doctest::Approx(7.3 * r1.norm).epsilon(1e-12));
}

TEST_CASE("compress reproduces the shift window exactly") {
  ComplexMatrix s = weighted_shift({ShiftDirection::forward, 5,
                                    std::vector<double>(4, 1.0)});
  Compressions c = compress(s, 3);
  CHECK(c.window == 3);
  CHECK(c.ambient == 5);
  CHECK(op_norm(ComplexMatrix(c.a - ComplexMatrix::Identity(3, 3))) == 0.0);
  ComplexMatrix bs_expect = ComplexMatrix::Zero(3, 3);
  bs_expect(1, 1) = 1.0;
  bs_expect(2, 2) = 1.0;
  CHECK(op_norm(ComplexMatrix(c.b_star - bs_expect)) == 0.0);
  CHECK_THROWS_AS(compress(ComplexMatrix::Identity(4, 4), 3), input_error);
  CHECK_THROWS_AS(compress(s, 0), input_error);
}

TEST_CASE("compressed gram windows follow the weight products") {
  // For a forward weighted shift, (T^2)* T^2 = diag(|w_j w_{j+1}|^2).
  ComplexMatrix t = example_T(10);
  Compressions c = compress(t, 8);
  std::vector<double> w = {1.0, std::sqrt(2.0), 2, 2, 2, 2, 2, 2, 2};
  for (int j = 0; j < 8; ++j) {
    double prod = w[j] * w[j + 1];
    CHECK(std::real(c.a(j, j)) == doctest::Approx(prod * prod).epsilon(1e-14));
    CHECK(std::real(c.b_para(j, j)) == doctest::Approx(w[j] * w[j]).epsilon(1e-14));
  }
  CHECK(op_norm(ComplexMatrix(c.a - c.a.diagonal().asDiagonal().toDenseMatrix())) == 0.0);
}

TEST_CASE("window results are stable under ambient growth for banded shifts") {
  ClassOutcome a10 = is_star_paranormal_compressed(example_S(10), 8);
  ClassOutcome a12 = is_star_paranormal_compressed(example_S(12), 8);
  CHECK(a10.verdict == a12.verdict);
  CHECK(a10.margin == doctest::Approx(a12.margin).epsilon(1e-10));
}

TEST_CASE("certified verdicts agree with the sampling oracle") {
  for (int seed : {3, 14, 15}) {
    ComplexMatrix t = random_generic(4, seed);
    for (OracleClass cls : {OracleClass::paranormal, OracleClass::star_paranormal}) {
      ClassOutcome out = cls == OracleClass::paranormal ? is_paranormal(t)
                                                        : is_star_paranormal(t);
      OracleResult o = vector_oracle(t, cls, 2000, 1000 + seed);
      if (out.verdict == TriState::yes) CHECK(o.min_slack >= -1e-9);
      if (out.verdict == TriState::no) {
        REQUIRE(out.witness.has_value());
        SlackForms f = slack_forms(t, cls);
        CHECK(slack_of(f, out.witness->data()) < 0.0);
      }
    }
  }
}

TEST_CASE("the pencil doubles as a certified norm bound") {
  // ||B|| <= lambda  iff  the pencil (lambda^4 I, B B*) is nonnegative.
  ComplexMatrix b = random_generic(4, 8);
  double nrm = op_norm(b);
  auto pencil_at = [&](double lam) {
    int n = static_cast<int>(b.rows());
    ComplexMatrix a = std::pow(lam, 4) * ComplexMatrix::Identity(n, n);
    return pencil_min(a, ComplexMatrix(b * b.adjoint()));
  };
  CHECK(pencil_at(1.01 * nrm).verdict == PencilVerdict::certified_nonneg);
  CHECK(pencil_at(0.90 * nrm).verdict == PencilVerdict::violation);
}

TEST_CASE("norm_attaining_subspace finds the top singular cluster") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 2.0;
  d(2, 2) = 1.0;
  ComplexMatrix m = norm_attaining_subspace(d);
  REQUIRE(m.cols() == 1);
  CHECK(std::abs(m(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  d(1, 1) = 3.0;  // now a two-dimensional top cluster
  CHECK(norm_attaining_subspace(d).cols() == 2);
}

TEST_CASE("powers_chain residuals vanish exactly for unitaries") {
  ComplexMatrix u = random_unitary(4, 21);
  ComplexVector x = ComplexVector::Unit(4, 2);
  for (double r : powers_chain(u, x, 5)) CHECK(r <= 1e-12);
  CHECK_THROWS_AS(powers_chain(u, ComplexVector::Zero(4), 2), input_error);
  CHECK_THROWS_AS(powers_chain(u, x, 0), input_error);
}

TEST_CASE("joint_norm_attaining_set distinguishes shifts from projections") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 1.0;
  d(2, 2) = 0.5;
  CHECK(joint_norm_attaining_set(d, 3).cols() == 2);
  // a nilpotent block loses all norm after enough powers
  CHECK(joint_norm_attaining_set(jordan(3), 3).cols() == 0);
}

TEST_CASE("kernel_compare detects asymmetric kernels") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  KernelCompare eq = kernel_compare(d);
  CHECK(eq.equal);
  CHECK(eq.ker.cols() == 1);
  CHECK(eq.projector_gap <= 1e-12);

  KernelCompare ne = kernel_compare(jordan(2));
  CHECK_FALSE(ne.equal);
  CHECK(ne.projector_gap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("classify_compressed validates the window up front") {
  CHECK_THROWS_AS(classify_compressed(ComplexMatrix::Identity(4, 4), 3), input_error);
  ClassReport r = classify_compressed(example_S(10), 8);
  REQUIRE(r.window.has_value());
  CHECK(*r.window == 8);
  CHECK(r.hyponormal == TriState::no);
  CHECK(r.star_paranormal == TriState::yes);
}
