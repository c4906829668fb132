#include <cmath>
#include <vector>

#include "doctest.h"
#include "opclass/classify.hpp"
#include "opclass/testkit.hpp"

using namespace opclass;

TEST_CASE("weighted_shift places weights by direction") {
  ComplexMatrix f = weighted_shift({ShiftDirection::forward, 3, {2.0, 3.0}});
  CHECK(f(1, 0) == Complex(2, 0));
  CHECK(f(2, 1) == Complex(3, 0));
  CHECK(f(0, 1) == Complex(0, 0));

  ComplexMatrix b = weighted_shift({ShiftDirection::backward, 3, {2.0, 3.0}});
  CHECK(op_norm(ComplexMatrix(b - f.adjoint())) == 0.0);

  CHECK_THROWS_AS(weighted_shift({ShiftDirection::forward, 3, {1.0}}), input_error);
  CHECK_THROWS_AS(weighted_shift({ShiftDirection::forward, 3, {1.0, 0.0}}), input_error);
  CHECK_THROWS_AS(weighted_shift({ShiftDirection::forward, 0, {}}), input_error);
}

TEST_CASE("the named shift examples have the pinned gram diagonals") {
  ComplexMatrix b = example_2_2(4);
  // backward shift with weights 1, 2/3, 3/4: first row is (0, 1, 0, 0)
  CHECK(b(0, 1) == Complex(1, 0));
  CHECK(b(1, 2) == Complex(1.0 - 1.0 / 3.0, 0));
  CHECK(b(2, 3) == Complex(0.75, 0));
  CHECK(b(0, 0) == Complex(0, 0));

  ComplexMatrix t = example_T(6);
  ComplexMatrix tt = t.adjoint() * t;
  std::vector<double> want_t = {1, 2, 4, 4, 4, 0};
  for (int j = 0; j < 6; ++j)
    CHECK(std::real(tt(j, j)) == doctest::Approx(want_t[j]).epsilon(1e-14));

  ComplexMatrix s = example_S(6);
  ComplexMatrix ss = s.adjoint() * s;
  std::vector<double> want_s = {2, 1, 4, 4, 4, 0};
  for (int j = 0; j < 6; ++j)
    CHECK(std::real(ss(j, j)) == doctest::Approx(want_s[j]).epsilon(1e-14));
}

TEST_CASE("jordan blocks put ones on the superdiagonal") {
  ComplexMatrix j = jordan(2);
  CHECK(j(0, 1) == Complex(1, 0));
  CHECK(j(1, 0) == Complex(0, 0));
  CHECK(j(0, 0) == Complex(0, 0));
  CHECK(j(1, 1) == Complex(0, 0));
  CHECK(op_norm(ComplexMatrix(jordan(4) * jordan(4) * jordan(4) * jordan(4))) == 0.0);
}

TEST_CASE("fixture_map is deterministic for a fixed seed") {
  auto m1 = fixture_map(7);
  auto m2 = fixture_map(7);
  REQUIRE(m1.size() == m2.size());
  REQUIRE(m1.size() >= 10);
  for (const auto& [name, mat] : m1) {
    REQUIRE(m2.count(name) == 1);
    CHECK((mat - m2.at(name)).norm() == 0.0);
  }
  // a different seed changes at least the random members
  auto m3 = fixture_map(8);
  CHECK((m1.at("unitary_5") - m3.at("unitary_5")).norm() > 1e-3);
}

TEST_CASE("GaussianStream is reproducible and fills unit vectors") {
  GaussianStream a(99), b(99);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  ComplexVector x(7);
  a.fill_unit(x.data(), 7);
  CHECK(x.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("random generators produce what their names promise") {
  ComplexMatrix u = random_unitary(5, 3);
  CHECK(op_norm(ComplexMatrix(u.adjoint() * u - ComplexMatrix::Identity(5, 5))) <=
        1e-13);
  CHECK(commutator_norm(random_normal(5, 4)) <= 1e-12);
  ComplexMatrix g1 = random_generic(4, 5);
  ComplexMatrix g2 = random_generic(4, 5);
  CHECK((g1 - g2).norm() == 0.0);
}

TEST_CASE("slack_of agrees with the direct inequality evaluation") {
  ComplexMatrix t = random_generic(4, 12);
  GaussianStream g(13);
  ComplexVector x(4);
  g.fill_unit(x.data(), 4);

  SlackForms hypo = slack_forms(t, OracleClass::hyponormal);
  double direct_h = (t * x).squaredNorm() - (t.adjoint() * x).squaredNorm();
  CHECK(slack_of(hypo, x.data()) == doctest::Approx(direct_h).epsilon(1e-12));

  SlackForms para = slack_forms(t, OracleClass::paranormal);
  double direct_p = (t * t * x).norm() - (t * x).squaredNorm();
  CHECK(slack_of(para, x.data()) == doctest::Approx(direct_p).epsilon(1e-12));

  SlackForms star = slack_forms(t, OracleClass::star_paranormal);
  double direct_s = (t * t * x).norm() - (t.adjoint() * x).squaredNorm();
  CHECK(slack_of(star, x.data()) == doctest::Approx(direct_s).epsilon(1e-12));
}

TEST_CASE("vector_oracle matches the class membership on the extremes") {
  ComplexMatrix u = random_unitary(4, 19);
  OracleResult ok = vector_oracle(u, OracleClass::star_paranormal, 10000, 42);
  CHECK(ok.min_slack >= -1e-12);
  CHECK(ok.samples == 10000);

  OracleResult bad = vector_oracle(jordan(2), OracleClass::star_paranormal, 200, 42);
  CHECK(bad.min_slack < 0.0);
  // the reported argmin reproduces the reported slack
  SlackForms f = slack_forms(jordan(2), OracleClass::star_paranormal);
  CHECK(slack_of(f, bad.argmin.data()) == doctest::Approx(bad.min_slack).epsilon(1e-12));
}

TEST_CASE("pencil_oracle confirms the windowed star inequality of S") {
  ComplexMatrix s = example_S(10) / 2.0;  // unit norm
  Compressions c = compress(s, 8);
  OracleResult r = pencil_oracle(c.a, c.b_star, 100000, 7);
  CHECK(r.min_slack >= -1e-12);
  CHECK(r.samples == 100000);
}
