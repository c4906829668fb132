#include <string>
#include <vector>

#include "doctest.h"
#include "opclass/spectra.hpp"
#include "opclass/testkit.hpp"

using namespace opclass;

namespace {

RealVector rv(std::initializer_list<double> xs) {
  RealVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

ComplexMatrix diag_of(std::initializer_list<double> xs) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(xs.size()),
                                        static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("cluster groups by relative gap") {
  auto cs = cluster(rv({1.0, 1.0 + 1e-9, 2.0, 3.0, 3.0 + 1e-9, 3.0 + 2e-9}), 1e-8);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].multiplicity == 2);
  CHECK(cs[1].multiplicity == 1);
  CHECK(cs[2].multiplicity == 3);
  CHECK(cs[0].center == doctest::Approx(1.0));
  CHECK(cs[2].center == doctest::Approx(3.0));

  CHECK(cluster(rv({}), 1e-8).empty());
  CHECK_THROWS_AS(cluster(rv({2.0, 1.0}), 1e-8), input_error);  // not ascending
  CHECK_THROWS_AS(cluster(rv({1.0}), -1.0), input_error);
}

TEST_CASE("singular_spectrum is the ascending spectrum of |T|") {
  RealVector s = singular_spectrum(jordan(3));
  REQUIRE(s.size() == 3);
  CHECK(s(0) == doctest::Approx(0.0));
  CHECK(s(1) == doctest::Approx(1.0));
  CHECK(s(2) == doctest::Approx(1.0));
}

TEST_CASE("auto_lambda prefers multiplicity then smallness") {
  auto cs = cluster(rv({1, 2, 2, 3}), 1e-8);
  CHECK(auto_lambda(cs) == doctest::Approx(2.0));
  auto tie = cluster(rv({1, 1, 4, 4}), 1e-8);
  CHECK(auto_lambda(tie) == doctest::Approx(1.0));
}

TEST_CASE("make_diagram splits at the essential level") {
  ComplexMatrix t = diag_of({3, 2, 2, 1});
  SpectrumDiagram d = make_diagram(t, 2.0);
  REQUIRE(d.essential.has_value());
  CHECK(*d.essential == doctest::Approx(2.0));
  REQUIRE(d.above.size() == 1);
  CHECK(d.above[0] == doctest::Approx(3.0));
  REQUIRE(d.below.size() == 1);
  CHECK(d.below[0] == doctest::Approx(1.0));
  CHECK(d.norm == doctest::Approx(3.0));
  CHECK(d.min_mod == doctest::Approx(1.0));

  SpectrumDiagram auto_d = make_diagram(t);
  REQUIRE(auto_d.essential.has_value());
  CHECK(*auto_d.essential == doctest::Approx(2.0));  // multiplicity rule
}

TEST_CASE("diagram text and csv emissions are stable strings") {
  SpectrumDiagram d = make_diagram(diag_of({3, 2, 2, 1}), 2.0);
  std::string csv = diagram_emit(d, DiagramFormat::csv);
  CHECK(csv ==
        "value,multiplicity,region\n"
        "1,1,below\n"
        "2,2,essential\n"
        "3,1,above\n");
  CHECK(diagram_emit(d, DiagramFormat::csv) == csv);  // byte-stable repeat

  std::string text = diagram_emit(d, DiagramFormat::text);
  CHECK(text.find("beta_1") != std::string::npos);
  CHECK(text.find("lambda") != std::string::npos);
  CHECK(text.find("alpha_1") != std::string::npos);
}

TEST_CASE("essential_candidate tracks the accumulating cluster") {
  // diag(1 - 1/k): every new size adds points accumulating at 1
  std::vector<ComplexMatrix> family;
  for (int n : {16, 32, 64, 128}) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int k = 1; k <= n; ++k) m(k - 1, k - 1) = 1.0 - 1.0 / k;
    family.push_back(m);
  }
  EssentialCandidate e = essential_candidate(family, 1e-4);
  CHECK(e.singleton);
  CHECK(e.lambda >= 0.99);
  CHECK(e.lambda <= 1.0);
  CHECK(e.hermitian_mode);
  CHECK(e.per_size.size() == 4);

  CHECK_THROWS_AS(essential_candidate({family[0], family[1]}, 1e-4), input_error);
  CHECK_THROWS_AS(essential_candidate({family[1], family[0], family[2]}, 1e-4),
                  input_error);  // sizes must increase
}

TEST_CASE("signed eigenvalues keep two-sided accumulation distinct") {
  // diag(+-1 alternating): |T| sees a single cluster at 1, but the signed
  // spectrum accumulates at both -1 and +1, so no single growing track wins.
  std::vector<ComplexMatrix> family;
  for (int n : {8, 16, 32}) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    family.push_back(m);
  }
  EssentialCandidate e = essential_candidate(family, 1e-3);
  CHECK(e.hermitian_mode);
  CHECK_FALSE(e.singleton);  // both signs grow
  int growing = 0;
  for (const auto& tr : e.tracks)
    if (tr.growing) ++growing;
  CHECK(growing == 2);
}
