#include <cmath>
#include <vector>

#include "doctest.h"
#include "qentropy/bounds.hpp"
#include "qentropy/entropies.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/states.hpp"

using namespace qentropy;

namespace {

DensityMatrix diag_state(std::initializer_list<double> p) { return validate_state(HermitianMatrix::diagonal(p)); }

}  // namespace

TEST_CASE("AF bound") {
  const auto [r1, r2] = tightness_pair(3, 0.5);
  const BoundEvaluation af = af_bound(r1, r2);
  CHECK(std::abs(af.slack) < 1e-9);

  const auto q1 = diag_state({0.8, 0.2});
  const auto q2 = diag_state({0.3, 0.7});
  CHECK(af_bound(q1, q2).rhs == doctest::Approx(binary_entropy(0.5)).epsilon(1e-13));

  const BoundEvaluation same = af_bound(q1, q1);
  CHECK(same.lhs == 0.0);
  CHECK(same.slack == 0.0);
}

TEST_CASE("Jordan-Hahn entropy bound") {
  const auto r1 = diag_state({0.7, 0.3, 0.0});
  const auto r2 = diag_state({0.4, 0.2, 0.4});
  const BoundEvaluation b = theorem1_bound(r1, r2);
  CHECK(b.lhs == doctest::Approx(-0.444055865931251).epsilon(1e-12));
  CHECK(b.rhs == doctest::Approx(0.89794572485678).epsilon(1e-12));

  const auto [t1, t2] = tightness_pair(3, 0.5);
  const BoundEvaluation t = theorem1_bound(t1, t2);
  CHECK(t.lhs == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(t.slack) < 1e-9);

  Rng rng(3);
  const DensityMatrix a = random_mixed(2, rng);
  const DensityMatrix c = random_mixed(2, rng);
  CHECK(theorem1_bound(a, c).rhs == doctest::Approx(binary_entropy(trace_distance(a, c))).epsilon(1e-10));

  CHECK_THROWS_AS(theorem1_bound(a, a), IdenticalStatesError);
}

TEST_CASE("symmetric form") {
  const auto r1 = diag_state({0.7, 0.3, 0.0});
  const auto r2 = diag_state({0.4, 0.2, 0.4});
  const BoundEvaluation s = theorem1_symmetric_gap(r1, r2);
  CHECK(s.lhs == doctest::Approx(0.668989923778774).epsilon(1e-12));
  CHECK(s.rhs == doctest::Approx(0.673011667009256).epsilon(1e-12));
  CHECK(s.holds());
}

TEST_CASE("auxiliary relative-entropy lemma") {
  const auto p0 = diag_state({1, 0});
  const auto p1 = diag_state({0, 1});
  const BoundEvaluation e = aux_lemma_gap(p0, p1, maximally_mixed(2), 0.5);
  REQUIRE(e.applicable);
  CHECK(std::abs(e.lhs) < 1e-14);
  CHECK(std::abs(e.rhs) < 1e-14);

  CHECK_FALSE(aux_lemma_gap(p0, p1, p0, 0.99).applicable);
  CHECK_FALSE(aux_lemma_gap(p0, p1, maximally_mixed(2), 1.0).applicable);
  CHECK_FALSE(aux_lemma_gap(p0, p0, maximally_mixed(2), 0.5).applicable);
}

TEST_CASE("conditional-entropy bound") {
  const BipartitePair bell{bell_state(), maximally_mixed(4), {2, 2}};
  const BoundEvaluation b = conditional_bound(bell);
  REQUIRE(b.applicable);
  CHECK(b.lhs == doctest::Approx(1.38629436111989).epsilon(1e-12));
  CHECK(b.rhs == doctest::Approx(1.38629436111989).epsilon(1e-12));
  CHECK(std::abs(b.slack) < 1e-9);

  const BipartitePair same{bell_state(), bell_state(), {2, 2}};
  CHECK(conditional_bound(same).slack == 0.0);

  Rng rng(99);
  const BipartitePair skew{random_mixed(4, rng), random_mixed(4, rng), {2, 2}};
  CHECK_FALSE(conditional_bound(skew).applicable);

  for (int rep = 0; rep < 50; ++rep) {
    const BipartitePair p = random_equal_marginal_pair(2, 3, 1.0 - rng.uniform(), rng);
    CHECK(conditional_bound(p).slack >= -1e-9);
  }
}

TEST_CASE("relative-entropy bound with a fixed second argument") {
  const auto r1 = diag_state({0.7, 0.3});
  const auto r2 = diag_state({0.5, 0.5});
  const BoundEvaluation b = relent_bound_fixed_second(r1, r2, r2);
  CHECK(b.lhs == doctest::Approx(0.0822828785050518).epsilon(1e-12));
  CHECK(b.rhs == doctest::Approx(0.500402423538188).epsilon(1e-12));

  CHECK_FALSE(relent_bound_fixed_second(r1, r2, diag_state({1, 0})).applicable);
  CHECK(relent_bound_fixed_second(r1, r1, r2).slack == 0.0);

  Rng rng(15);
  for (int rep = 0; rep < 20; ++rep) {
    const BoundEvaluation e = relent_bound_fixed_second(random_mixed(15, rng), random_mixed(15, rng),
                                                        random_mixed(15, rng));
    CHECK(e.slack >= -1e-9);
  }
}

TEST_CASE("self bound") {
  const BoundEvaluation b = relent_self_bound(diag_state({0.7, 0.3}), diag_state({0.5, 0.5}));
  CHECK(b.lhs == doctest::Approx(0.0822828785050518).epsilon(1e-12));
  CHECK(b.rhs == doctest::Approx(0.500402423538188).epsilon(1e-12));

  Rng rng(16);
  for (std::size_t d : {2, 4, 7}) {
    const BoundEvaluation p = relent_self_bound(random_pure(d, rng), maximally_mixed(d));
    CHECK(p.lhs == doctest::Approx(std::log(static_cast<double>(d))).epsilon(1e-10));
    CHECK(p.holds());
  }
}

TEST_CASE("both-arguments bound") {
  Rng rng(18);
  const DensityMatrix r1 = random_mixed(5, rng);
  const DensityMatrix r2 = random_mixed(5, rng);
  const DensityMatrix s = random_mixed(5, rng);
  const BoundEvaluation equal_sigma = relent_bound_both(r1, r2, s, s);
  CHECK(equal_sigma.holds());

  const DensityMatrix s2 = random_mixed(5, rng);
  const BoundEvaluation same_rho = relent_bound_both(r1, r1, s, s2);
  const double lam = std::min(s.lambda_min(), s2.lambda_min());
  CHECK(same_rho.rhs == doctest::Approx(std::log1p(trace_distance(s, s2) / lam)).epsilon(1e-12));
  CHECK(same_rho.holds());
  CHECK(relent_bound_both(r1, r2, s, s2).holds());
}

TEST_CASE("intermediate inequalities") {
  Rng rng(19);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityMatrix r1 = random_mixed(5, rng.uniform_int(1, 5), rng);
    const DensityMatrix r2 = random_mixed(5, rng.uniform_int(1, 5), rng);
    const DensityMatrix s = random_mixed(5, rng);
    CHECK(relent_jordan_hahn_step(r1, r2, s).holds());
    CHECK(relent_dmax_step(jordan_hahn(r1, r2), s).holds());
  }
}

TEST_CASE("competitor bounds") {
  const BoundEvaluation g = gour_bound(diag_state({0.7, 0.3}), diag_state({0.6, 0.4}), diag_state({0.5, 0.5}));
  REQUIRE(g.applicable);
  CHECK(g.rhs == doctest::Approx(0.510825623765991).epsilon(1e-13));
  CHECK(g.holds());

  Rng rng(20);
  CHECK_FALSE(gour_bound(diag_state({0.7, 0.3}), random_pure(2, rng), diag_state({0.5, 0.5})).applicable);

  CHECK(bluhm_bound_fixed(0.2, 0.1) == doctest::Approx(1.00119046923837).epsilon(1e-13));
  CHECK(bluhm_bound_fixed(0.5, 0.5) == doctest::Approx(1.30134484272219).epsilon(1e-13));
  CHECK(bluhm_bound_fixed(0.0, 0.3) == 0.0);
  CHECK(bluhm_bound_fixed(1e-12, 0.3) < 1e-9);
  CHECK_THROWS_AS(bluhm_bound_fixed(0.2, 0.0), DomainError);

  CHECK(bluhm_bound_both(0.2, 0.1, 0.1) == doctest::Approx(4.21854347621456).epsilon(1e-13));
  CHECK(bluhm_bound_both(0.2, 0.1, 0.1) > bluhm_bound_fixed(0.2, 0.1));
  CHECK(bluhm_bound_both(0.0, 0.0, 0.4) == 0.0);
  CHECK(bluhm_bound_both(0.3, 0.0, 0.4) ==
        doctest::Approx(0.3 * std::log(2.0 / 0.4) + 1.3 * binary_entropy(0.3 / 1.3)).epsilon(1e-14));
  CHECK_THROWS_AS(bluhm_bound_both(0.2, 0.1, -0.1), DomainError);
}
