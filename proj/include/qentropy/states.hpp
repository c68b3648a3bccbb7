#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "qentropy/linalg.hpp"
#include "qentropy/random.hpp"

namespace qentropy {

/// Validated quantum state: Hermitian, PSD within kPsdTol, unit trace within 1e-10.
/// Small negative eigenvalues are clamped to zero on validation.
class DensityMatrix {
 public:
  const HermitianMatrix& matrix() const { return matrix_; }
  operator const HermitianMatrix&() const { return matrix_; }  // NOLINT(google-explicit-constructor)

  /// Ascending, nonnegative.
  const Spectrum& spectrum() const { return spectrum_; }
  std::size_t dim() const { return matrix_.dim(); }
  double lambda_min() const { return spectrum_.min(); }
  bool full_rank() const;

 private:
  DensityMatrix(HermitianMatrix m, Spectrum s) : matrix_(std::move(m)), spectrum_(std::move(s)) {}
  friend DensityMatrix validate_state(const HermitianMatrix& h);

  HermitianMatrix matrix_;
  Spectrum spectrum_;
};

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kMarginalTol = 1e-9;

DensityMatrix validate_state(const HermitianMatrix& h);

/// Hilbert-Schmidt (Ginibre) ensemble: G G^dagger / Tr(G G^dagger), G is d x rank.
DensityMatrix random_mixed(std::size_t dim, std::size_t rank, Rng& rng);
DensityMatrix random_mixed(std::size_t dim, Rng& rng);
/// Haar-random pure state.
DensityMatrix random_pure(std::size_t dim, Rng& rng);
DensityMatrix maximally_mixed(std::size_t dim);
DensityMatrix pure_state(std::span<const cplx> psi);

/// GUE-style random Hermitian matrix with unit-variance complex entries.
HermitianMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Family saturating the entropy-difference bound:
/// rho1 = (1-eps)|psi><psi| + eps/(d-1) (1 - |psi><psi|), rho2 = |psi><psi|.
/// psi defaults to the first basis vector.
std::pair<DensityMatrix, DensityMatrix> tightness_pair(std::size_t dim, double eps,
                                                       std::optional<std::span<const cplx>> psi = std::nullopt);

struct BipartitePair {
  DensityMatrix rho1;
  DensityMatrix rho2;
  BipartiteDims dims;

  /// ||Tr_A rho1 - Tr_A rho2||_1
  double marginal_mismatch() const;
  bool equal_marginals(double tol = kMarginalTol) const { return marginal_mismatch() <= tol; }
};

/// Pair with identical B-marginals: rho1 full-rank Hilbert-Schmidt,
/// rho2 = rho1 + t K with K = K0 - tau_A (x) Tr_A K0 traceless and
/// t = u * lambda_min(rho1) / ||K||_inf.
BipartitePair random_equal_marginal_pair(std::size_t dim_a, std::size_t dim_b, double strength, Rng& rng);

/// Bell state (|00> + |11>)/sqrt(2).
DensityMatrix bell_state();

}  // namespace qentropy
