#include <cmath>
#include <vector>

#include "doctest.h"
#include "qentropy/decomposition.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/states.hpp"

using namespace qentropy;

namespace {

double dist(const HermitianMatrix& a, const HermitianMatrix& b) { return (a.matrix() - b.matrix()).frobenius_norm(); }

void check_close(const std::vector<double>& got, const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

}  // namespace

TEST_CASE("qubit diagonal decomposition") {
  const auto r1 = validate_state(HermitianMatrix::diagonal({0.7, 0.3}));
  const auto r2 = validate_state(HermitianMatrix::diagonal({0.4, 0.6}));
  const JordanHahn jh = jordan_hahn(r1, r2);
  CHECK(jh.epsilon == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(dist(jh.rho_plus, HermitianMatrix::diagonal({1, 0})) < 1e-14);
  CHECK(dist(jh.rho_minus, HermitianMatrix::diagonal({0, 1})) < 1e-14);

  const DeltaSpectrumSplit s = delta_spectrum_split(jh);
  check_close(s.a, {1.0});
  check_close(s.b, {1.0});
}

TEST_CASE("qutrit diagonal decomposition") {
  const auto r1 = validate_state(HermitianMatrix::diagonal({0.7, 0.3, 0.0}));
  const auto r2 = validate_state(HermitianMatrix::diagonal({0.4, 0.2, 0.4}));
  const JordanHahn jh = jordan_hahn(r1, r2);
  CHECK(jh.epsilon == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(dist(jh.rho_plus, HermitianMatrix::diagonal({0.75, 0.25, 0})) < 1e-14);
  CHECK(dist(jh.rho_minus, HermitianMatrix::diagonal({0, 0, 1})) < 1e-14);
  CHECK(jh.rank_plus == 2);
  CHECK(jh.rank_minus == 1);

  const DeltaSpectrumSplit s = delta_spectrum_split(jh);
  check_close(s.a, {0.75, 0.25});
  check_close(s.b, {1.0});
}

TEST_CASE("tight family decomposition") {
  const auto [r1, r2] = tightness_pair(3, 0.5);
  const JordanHahn jh = jordan_hahn(r1, r2);
  CHECK(jh.epsilon == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dist(jh.rho_minus, r2) < 1e-13);
  CHECK(dist(jh.rho_plus, HermitianMatrix::diagonal({0, 0.5, 0.5})) < 1e-13);
  const DeltaSpectrumSplit s = delta_spectrum_split(jh);
  check_close(s.a, {0.5, 0.5});
  check_close(s.b, {1.0});
}

TEST_CASE("identical and mismatched inputs") {
  const DensityMatrix m = maximally_mixed(3);
  CHECK_THROWS_AS(jordan_hahn(m, m), IdenticalStatesError);
  CHECK_THROWS_AS(jordan_hahn(m, maximally_mixed(2)), DimensionError);
}

TEST_CASE("decomposition invariants on random pairs") {
  Rng rng(21);
  for (std::size_t d : {2, 3, 5, 8}) {
    for (int rep = 0; rep < 40; ++rep) {
      const DensityMatrix r1 = random_mixed(d, rng.uniform_int(1, d), rng);
      const DensityMatrix r2 = random_mixed(d, rng.uniform_int(1, d), rng);
      const JordanHahn jh = jordan_hahn(r1, r2);

      const HermitianMatrix diff = r1.matrix() - r2.matrix();
      CHECK(jh.epsilon == doctest::Approx(trace_distance(r1, r2)).epsilon(1e-10));
      CHECK(operator_norm(diff - jh.epsilon * (jh.rho_plus.matrix() - jh.rho_minus.matrix())) < 1e-10);
      CHECK(std::abs((jh.rho_plus.matrix().matrix() * jh.rho_minus.matrix().matrix()).trace()) < 1e-12);
      CHECK(jh.rank_plus + jh.rank_minus <= d);
      CHECK(jh.rank_plus <= d - 1);

      const JordanHahn sw = jordan_hahn(r2, r1);
      CHECK(std::abs(sw.epsilon - jh.epsilon) < 1e-12);
      CHECK(dist(sw.rho_plus, jh.rho_minus) < 1e-9);
      CHECK(dist(sw.rho_minus, jh.rho_plus) < 1e-9);
    }
  }
}
