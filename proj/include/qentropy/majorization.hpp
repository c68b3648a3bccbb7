#pragma once

// Majorization predicates and the spectral inequalities behind the
// Jordan-Hahn entropy bound, as executable checks.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qentropy/decomposition.hpp"
#include "qentropy/linalg.hpp"
#include "qentropy/random.hpp"
#include "qentropy/states.hpp"

namespace qentropy {

inline constexpr double kPartialSumTol = 1e-10;
inline constexpr double kTotalSumTol = 1e-9;

struct MajorizationReport {
  bool holds = false;
  /// min over k of (sum_{j<=k} y_down_j - sum_{j<=k} x_down_j)
  double worst_partial_sum_gap = 0.0;
  /// 1-based k of the first violated partial sum (d when only the totals differ).
  std::optional<std::size_t> failing_k;
};

/// Does y majorize x (x < y)?
MajorizationReport majorizes(std::span<const double> y, std::span<const double> x,
                             double partial_sum_tol = kPartialSumTol);

/// lambda_down(A) + lambda_up(B) < lambda(A + B).
MajorizationReport lidskii_check(const HermitianMatrix& a, const HermitianMatrix& b);

/// lambda_down(delta) + lambda_up(omega), elementwise.
std::vector<double> lidskii_vector(const HermitianMatrix& omega, const HermitianMatrix& delta);

struct MinEigenComparison {
  double lhs = 0.0;  // lambda_min(omega + delta)
  double rhs = 0.0;  // min_j (lambda_down_j(delta) + lambda_up_j(omega))
  /// Set when omega + delta >= 0: whether lidskii_vector >= -kPsdTol entrywise.
  std::optional<bool> entrywise_nonnegative;
};

MinEigenComparison lemma1_bound(const HermitianMatrix& omega, const HermitianMatrix& delta);

struct EntropyComparison {
  double lhs = 0.0;  // S(omega + delta)
  double rhs = 0.0;  // H(lambda_down(delta) + lambda_up(omega))
};

/// Requires omega + delta >= -kPsdTol (DomainError otherwise).
EntropyComparison lemma2_bound(const HermitianMatrix& omega, const HermitianMatrix& delta);

/// [S(rho_minus + delta) - S(rho_minus)] - [S(omega + delta) - S(omega)].
/// Nonnegative for every feasible omega. DomainError if omega + delta is not PSD.
double variational_gap(const DensityMatrix& omega, const JordanHahn& jh);

/// Random state omega with omega + delta >= 0: omega = (1-s) rho_minus + s nu,
/// nu Hilbert-Schmidt, s uniform on [0, s_max] where s_max is found by bisection.
DensityMatrix sample_feasible_omega(const JordanHahn& jh, Rng& rng);

/// sum_j [eta((1-eps) b_j) - eta(b_j)] - sum_j [eta(z_j - eps b_j) - eta(z_j)].
/// Requires z_j >= eps b_j (DomainError otherwise).
double simplex_optimum_gap(std::span<const double> z, std::span<const double> b, double eps);

}  // namespace qentropy
