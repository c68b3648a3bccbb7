#include "qentropy/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qentropy/errors.hpp"

namespace qentropy {

bool DensityMatrix::full_rank() const { return spectrum_.min() >= rank_threshold(spectrum_); }

DensityMatrix validate_state(const HermitianMatrix& h) {
  EigenSystem es = hermitian_eigensystem(h);
  const double lmin = es.spectrum.min();
  if (lmin < -kPsdTol)
    throw NotAStateError("not a state: eigenvalue " + std::to_string(lmin) + " below -psd_tol");
  const double tr = h.trace();
  if (std::abs(tr - 1.0) > kTraceTol) throw NormalizationError("not a state: trace " + std::to_string(tr));

  if (lmin >= 0.0) return DensityMatrix(h, std::move(es.spectrum));

  // Clamp the slightly negative eigenvalues and renormalize.
  double sum = 0.0;
  for (double& x : es.spectrum.values) {
    x = std::max(x, 0.0);
    sum += x;
  }
  for (double& x : es.spectrum.values) x /= sum;
  HermitianMatrix fixed = es.reconstruct();
  return DensityMatrix(std::move(fixed), std::move(es.spectrum));
}

namespace {

// Validation of an operator that is a state by construction; rescales away
// trace rounding first.
DensityMatrix normalize_and_validate(HermitianMatrix h) {
  const double tr = h.trace();
  h *= 1.0 / tr;
  return validate_state(h);
}

}  // namespace

DensityMatrix random_mixed(std::size_t dim, std::size_t rank, Rng& rng) {
  if (dim == 0 || rank == 0 || rank > dim)
    throw DomainError("random_mixed: need 1 <= rank <= dim, got rank " + std::to_string(rank));
  // G is dim x rank; rho ~ G G^dagger.
  std::vector<cplx> g(dim * rank);
  for (auto& z : g) z = rng.complex_normal();
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < rank; ++k) acc += g[i * rank + k] * std::conj(g[j * rank + k]);
      m(i, j) = acc;
      m(j, i) = std::conj(acc);
    }
  return normalize_and_validate(HermitianMatrix(std::move(m)));
}

DensityMatrix random_mixed(std::size_t dim, Rng& rng) { return random_mixed(dim, dim, rng); }

DensityMatrix random_pure(std::size_t dim, Rng& rng) { return random_mixed(dim, 1, rng); }

DensityMatrix maximally_mixed(std::size_t dim) {
  if (dim == 0) throw DomainError("maximally_mixed: dim must be >= 1");
  return validate_state(HermitianMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

DensityMatrix pure_state(std::span<const cplx> psi) {
  double n2 = 0.0;
  for (const auto& z : psi) n2 += std::norm(z);
  if (!(n2 > 0.0)) throw ValidationError("pure_state: zero vector");
  return normalize_and_validate(HermitianMatrix::projector(psi));
}

HermitianMatrix random_hermitian(std::size_t dim, Rng& rng) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = rng.complex_normal();
      m(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianMatrix(std::move(m));
}

std::pair<DensityMatrix, DensityMatrix> tightness_pair(std::size_t dim, double eps,
                                                       std::optional<std::span<const cplx>> psi) {
  if (dim < 2) throw DomainError("tightness_pair: dim must be >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("tightness_pair: eps must lie in (0,1)");
  std::vector<cplx> v(dim);
  if (psi) {
    if (psi->size() != dim) throw DimensionError("tightness_pair: psi has wrong dimension");
    double n2 = 0.0;
    for (const auto& z : *psi) n2 += std::norm(z);
    if (std::abs(n2 - 1.0) > 1e-10) throw ValidationError("tightness_pair: psi is not a unit vector");
    std::copy(psi->begin(), psi->end(), v.begin());
  } else {
    v[0] = 1.0;
  }
  const HermitianMatrix p = HermitianMatrix::projector(v);
  const HermitianMatrix rest = HermitianMatrix::identity(dim) - p;
  HermitianMatrix rho1 = (1.0 - eps) * p + (eps / static_cast<double>(dim - 1)) * rest;
  return {validate_state(rho1), validate_state(p)};
}

double BipartitePair::marginal_mismatch() const {
  return trace_norm(partial_trace(rho1, dims, Subsystem::B) - partial_trace(rho2, dims, Subsystem::B));
}

BipartitePair random_equal_marginal_pair(std::size_t dim_a, std::size_t dim_b, double strength, Rng& rng) {
  if (dim_a < 2 || dim_b < 2) throw DomainError("random_equal_marginal_pair: dims must be >= 2");
  if (!(strength >= 0.0 && strength <= 1.0))
    throw DomainError("random_equal_marginal_pair: strength must lie in [0,1]");
  const BipartiteDims dims{dim_a, dim_b};
  const std::size_t d = dims.total();

  DensityMatrix rho1 = random_mixed(d, rng);
  const DensityMatrix tau_a = maximally_mixed(dim_a);

  constexpr int kMaxRetries = 16;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const HermitianMatrix k0 = random_hermitian(d, rng);
    const HermitianMatrix k = k0 - tensor(tau_a, partial_trace(k0, dims, Subsystem::B));
    const double knorm = operator_norm(k);
    if (knorm < 1e-8) continue;
    const double t = strength * rho1.lambda_min() / knorm;
    HermitianMatrix rho2 = rho1.matrix() + t * k;
    return BipartitePair{rho1, validate_state(rho2), dims};
  }
  throw NumericalFault("random_equal_marginal_pair: perturbation numerically zero after retries");
}

DensityMatrix bell_state() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<cplx> v{r, 0.0, 0.0, r};
  return pure_state(v);
}

}  // namespace qentropy
