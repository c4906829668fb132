#include <cmath>
#include <complex>
#include <limits>

#include "doctest.h"
#include "opclass/linalg.hpp"
#include "opclass/testkit.hpp"

using namespace opclass;

namespace {

// closed-form eigenvalues of a 2x2 Hermitian [[a, b], [conj(b), d]]
std::pair<double, double> eig2(double a, Complex b, double d) {
  double mid = 0.5 * (a + d);
  double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  return {mid - rad, mid + rad};
}

}  // namespace

TEST_CASE("herm_eig matches the closed 2x2 form") {
  GaussianStream g(11);
  for (int trial = 0; trial < 25; ++trial) {
    double a = g.next(), d = g.next();
    Complex b(g.next(), g.next());
    ComplexMatrix h(2, 2);
    h << a, b, std::conj(b), d;
    HermEig e = herm_eig(h);
    auto [lo, hi] = eig2(a, b, d);
    CHECK(e.values(0) == doctest::Approx(lo).epsilon(1e-12));
    CHECK(e.values(1) == doctest::Approx(hi).epsilon(1e-12));
    // residual and orthonormality
    CHECK(op_norm(ComplexMatrix(h * e.vectors -
                                e.vectors * e.values.asDiagonal())) <= 1e-12);
    CHECK(op_norm(ComplexMatrix(e.vectors.adjoint() * e.vectors -
                                ComplexMatrix::Identity(2, 2))) <= 1e-12);
  }
}

TEST_CASE("herm_eig is deterministic on repeated eigenvalues") {
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  h(0, 0) = 2.0;
  h(1, 1) = 2.0;
  h(2, 2) = 2.0;
  h(3, 3) = 5.0;
  HermEig e1 = herm_eig(h);
  HermEig e2 = herm_eig(h);
  CHECK((e1.vectors - e2.vectors).norm() == 0.0);
  // degenerate cluster snaps to the canonical basis
  CHECK(op_norm(ComplexMatrix(e1.vectors.topLeftCorner(3, 3) -
                              ComplexMatrix::Identity(3, 3))) <= 1e-10);
  CHECK(e1.values(3) == doctest::Approx(5.0));
}

TEST_CASE("herm_eig rejects bad input") {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(herm_eig(m), input_error);  // not Hermitian
  ComplexMatrix r(2, 3);
  r.setZero();
  CHECK_THROWS_AS(herm_eig(r), input_error);  // not square
  ComplexMatrix nan2 = ComplexMatrix::Zero(2, 2);
  nan2(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(herm_eig(nan2), input_error);
}

TEST_CASE("op_norm and min_modulus on known matrices") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = -2.0;
  d(2, 2) = 1.0;
  CHECK(op_norm(d) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(min_modulus(d) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(op_norm(ComplexMatrix(0, 0)) == 0.0);
  ComplexMatrix wide(2, 3);
  wide.setOnes();
  CHECK(min_modulus(wide) == 0.0);  // domain larger than codomain
}

TEST_CASE("svd reconstructs and orders descending") {
  GaussianStream g(5);
  ComplexMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex(g.next(), g.next());
  SvdParts s = svd(m);
  for (int i = 0; i + 1 < 4; ++i) CHECK(s.singular(i) >= s.singular(i + 1));
  ComplexMatrix rec = s.u * s.singular.asDiagonal() * s.v.adjoint();
  CHECK(op_norm(ComplexMatrix(rec - m)) <= 1e-12 * op_norm(m));
}

TEST_CASE("polar decomposition of a jordan block") {
  ComplexMatrix j = jordan(2);  // [[0,1],[0,0]]
  PolarParts p = polar(j);
  CHECK(op_norm(ComplexMatrix(p.w * p.p - j)) <= 1e-14);
  // |T| = diag(0, 1)
  CHECK(p.p(0, 0).real() == doctest::Approx(0.0));
  CHECK(p.p(1, 1).real() == doctest::Approx(1.0));
  // W is a partial isometry with the kernel of T: W e_0 = 0, W e_1 = e_0
  CHECK((p.w * ComplexVector::Unit(2, 0)).norm() <= 1e-14);
  CHECK((p.w * ComplexVector::Unit(2, 1) - ComplexVector::Unit(2, 0)).norm() <=
        1e-14);
}

TEST_CASE("polar of an invertible matrix gives a unitary factor") {
  GaussianStream g(9);
  ComplexMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Complex(g.next(), g.next());
  m += 4.0 * ComplexMatrix::Identity(3, 3);  // keep it well-conditioned
  PolarParts p = polar(m);
  CHECK(op_norm(ComplexMatrix(p.w.adjoint() * p.w -
                              ComplexMatrix::Identity(3, 3))) <= 1e-12);
  CHECK(op_norm(ComplexMatrix(p.w * p.p - m)) <= 1e-12 * op_norm(m));
  CHECK(psd_min(p.p).value >= -1e-12);
}

TEST_CASE("modulus squares to T*T") {
  ComplexMatrix t = example_T(6);
  ComplexMatrix m = modulus(t);
  CHECK(op_norm(ComplexMatrix(m * m - t.adjoint() * t)) <= 1e-12 * op_norm(t) *
                                                               op_norm(t));
  CHECK(psd_min(m).value >= -1e-12);
}

TEST_CASE("psd_min witness attains the smallest eigenvalue") {
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h(0, 0) = 2.0;
  h(1, 1) = -1.0;
  h(2, 2) = 3.0;
  PsdMin pm = psd_min(h);
  CHECK(pm.value == doctest::Approx(-1.0));
  CHECK(std::abs(pm.witness(1)) == doctest::Approx(1.0));
  double q = std::real(Complex(pm.witness.dot(h * pm.witness)));
  CHECK(q == doctest::Approx(pm.value).epsilon(1e-12));
}

TEST_CASE("commutator_norm vanishes exactly for normal inputs") {
  CHECK(commutator_norm(ComplexMatrix::Identity(3, 3)) == 0.0);
  ComplexMatrix n = random_normal(4, 17);
  CHECK(commutator_norm(n) <= 1e-10);  // by construction
  CHECK(commutator_norm(jordan(2)) == doctest::Approx(1.0));
}
