#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qentropy/entropies.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/states.hpp"

using namespace qentropy;

namespace {

double purity(const HermitianMatrix& h) { return (h.matrix() * h.matrix()).trace().real(); }

}  // namespace

TEST_CASE("validate_state") {
  CHECK_NOTHROW(validate_state(HermitianMatrix::identity(3) * (1.0 / 3.0)));
  CHECK_THROWS_AS(validate_state(HermitianMatrix::diagonal({1.2, -0.2})), NotAStateError);
  CHECK_THROWS_AS(validate_state(HermitianMatrix::diagonal({0.5, 0.5, 0.1})), NormalizationError);

  // Rounding-level negatives are clamped.
  const DensityMatrix r = validate_state(HermitianMatrix::diagonal({1.0 + 1e-12, -1e-12}));
  CHECK(r.lambda_min() >= 0.0);
  CHECK(r.matrix().trace() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("maximally mixed states") {
  CHECK(maximally_mixed(1).matrix()(0, 0) == cplx(1.0));
  const auto m2 = maximally_mixed(2);
  CHECK(m2.matrix()(0, 0).real() == 0.5);
  CHECK(m2.matrix()(1, 1).real() == 0.5);
  CHECK(von_neumann(maximally_mixed(4)) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
}

TEST_CASE("random mixed states") {
  Rng rng(1);
  CHECK(random_mixed(1, 1, rng).matrix()(0, 0).real() == doctest::Approx(1.0));

  const DensityMatrix pure4 = random_mixed(4, 1, rng);
  const auto s = pure4.spectrum().values;
  CHECK(s[3] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t j = 0; j < 3; ++j) CHECK(s[j] < 1e-12);

  CHECK_THROWS_AS(random_mixed(3, 4, rng), DomainError);
  CHECK_THROWS_AS(random_mixed(3, 0, rng), DomainError);
}

TEST_CASE("Hilbert-Schmidt mean purity at d = 15") {
  // E tr rho^2 = (d + k) / (d k + 1) for the induced measure with k = d.
  Rng rng(2024);
  const std::size_t d = 15;
  double sum = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_mixed(d, rng);
    CHECK(rho.lambda_min() > 0.0);
    sum += purity(rho);
  }
  const double expected = 30.0 / 226.0;
  CHECK(std::abs(sum / 1000.0 - expected) < 0.05 * expected);
}

TEST_CASE("random pure states") {
  Rng rng(4);
  CHECK(von_neumann(random_pure(2, rng)) < 1e-12);
  CHECK(purity(random_pure(5, rng)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Haar overlaps of qubit pure states are uniform") {
  // Kolmogorov-Smirnov against U[0,1]; critical value at p = 0.01 is 1.628 / sqrt(n).
  Rng rng(77);
  const int n = 2000;
  std::vector<double> o(n);
  for (auto& x : o) {
    const DensityMatrix a = random_pure(2, rng);
    const DensityMatrix b = random_pure(2, rng);
    x = (a.matrix().matrix() * b.matrix().matrix()).trace().real();
  }
  std::sort(o.begin(), o.end());
  double dstat = 0.0;
  for (int i = 0; i < n; ++i) {
    dstat = std::max(dstat, std::abs(o[i] - static_cast<double>(i) / n));
    dstat = std::max(dstat, std::abs(o[i] - static_cast<double>(i + 1) / n));
  }
  CHECK(dstat < 1.628 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("tightness pair") {
  const auto [r1, r2] = tightness_pair(3, 0.5);
  CHECK(von_neumann(r1) - von_neumann(r2) == doctest::Approx(1.03972077083992).epsilon(1e-12));
  CHECK(commutator_norm(r1, r2) <= 1e-12);

  for (double eps : {0.1, 0.37, 0.9}) {
    const auto [q1, q2] = tightness_pair(2, eps);
    CHECK(von_neumann(q1) == doctest::Approx(binary_entropy(eps)).epsilon(1e-12));
  }
  const auto [f1, f2] = tightness_pair(4, 0.25);
  CHECK(trace_distance(f1, f2) == doctest::Approx(0.25).epsilon(1e-14));

  CHECK_THROWS_AS(tightness_pair(1, 0.5), DomainError);
  CHECK_THROWS_AS(tightness_pair(3, 0.0), DomainError);
  CHECK_THROWS_AS(tightness_pair(3, 1.0), DomainError);

  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<cplx> psi{r, cplx(0.0, r), 0.0};
  const auto [p1, p2] = tightness_pair(3, 0.5, psi);
  CHECK(von_neumann(p1) - von_neumann(p2) == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("equal-marginal pairs") {
  Rng rng(8);
  for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 5}}) {
    for (double u : {1e-6, 0.3, 1.0}) {
      const BipartitePair p = random_equal_marginal_pair(a, b, u, rng);
      CHECK(p.equal_marginals());
      CHECK(p.marginal_mismatch() <= kMarginalTol);
      CHECK(p.rho2.lambda_min() >= 0.0);
      CHECK(trace_distance(p.rho1, p.rho2) > 0.0);
      if (u == 1e-6) CHECK(trace_distance(p.rho1, p.rho2) < 1e-5);
    }
  }
  const BipartitePair same = random_equal_marginal_pair(2, 2, 0.0, rng);
  CHECK(trace_distance(same.rho1, same.rho2) == 0.0);
  CHECK_THROWS_AS(random_equal_marginal_pair(2, 2, -0.1, rng), DomainError);
  CHECK_THROWS_AS(random_equal_marginal_pair(2, 2, 1.5, rng), DomainError);
}

TEST_CASE("Bell state") {
  const DensityMatrix bell = bell_state();
  CHECK(von_neumann(bell) < 1e-14);
  CHECK(bell.matrix()(0, 3).real() == doctest::Approx(0.5));
}
