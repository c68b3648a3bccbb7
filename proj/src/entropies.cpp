#include "qentropy/entropies.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qentropy/errors.hpp"

namespace qentropy {

double EntropyValue::value() const {
  if (infinite_) throw NumericalFault("EntropyValue: arithmetic on an infinite value");
  return value_;
}

double eta(double u) {
  if (!(u >= 0.0)) throw DomainError("eta: argument must be nonnegative, got " + std::to_string(u));
  if (u == 0.0) return 0.0;
  return -u * std::log(u);
}

double shannon(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x < 0.0) throw DomainError("shannon: negative entry " + std::to_string(x));
    h += eta(x);
  }
  return h;
}

double binary_entropy(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("binary_entropy: argument outside [0,1]");
  return eta(eps) + eta(1.0 - eps);
}

double von_neumann(const DensityMatrix& rho) { return shannon(rho.spectrum().values); }

double operator_entropy(const HermitianMatrix& h) {
  Spectrum s = eigenvalues(h);
  for (double& x : s.values) {
    if (x < -kPsdTol) throw DomainError("operator_entropy: operator is not positive semidefinite");
    x = std::max(x, 0.0);
  }
  return shannon(s.values);
}

double conditional_entropy(const DensityMatrix& rho_ab, BipartiteDims dims) {
  const DensityMatrix rho_b = validate_state(partial_trace(rho_ab, dims, Subsystem::B));
  return von_neumann(rho_ab) - von_neumann(rho_b);
}

namespace {

struct SupportedSpectrum {
  EigenSystem es;
  double threshold;
};

SupportedSpectrum psd_eigensystem(const HermitianMatrix& sigma, const char* who) {
  EigenSystem es = hermitian_eigensystem(sigma);
  const double thr = rank_threshold(es.spectrum);
  if (es.spectrum.min() < -std::max(kPsdTol, thr))
    throw DomainError(std::string(who) + ": second argument is not positive semidefinite");
  return {std::move(es), thr};
}

// <v_j| rho |v_j> for every eigenvector column of `vectors`.
std::vector<double> diagonal_in_basis(const Matrix& vectors, const HermitianMatrix& rho) {
  const std::size_t n = rho.dim();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      cplx row = 0.0;
      for (std::size_t c = 0; c < n; ++c) row += rho(r, c) * vectors(c, j);
      acc += std::conj(vectors(r, j)) * row;
    }
    out[j] = acc.real();
  }
  return out;
}

}  // namespace

EntropyValue relative_entropy(const DensityMatrix& rho, const HermitianMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("relative_entropy: dimension mismatch");
  const auto [es, thr] = psd_eigensystem(sigma, "relative_entropy");
  const std::vector<double> weights = diagonal_in_basis(es.vectors, rho);

  double cross = 0.0;  // Tr(rho log sigma) on supp(sigma)
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double s = es.spectrum.values[j];
    if (s < thr) {
      if (weights[j] > kRankTol) return EntropyValue::infinite();
      continue;
    }
    cross += weights[j] * std::log(s);
  }
  return EntropyValue::finite(-von_neumann(rho) - cross);
}

EntropyValue dmax(const DensityMatrix& rho, const HermitianMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("dmax: dimension mismatch");
  const auto [es, thr] = psd_eigensystem(sigma, "dmax");
  const std::vector<double> weights = diagonal_in_basis(es.vectors, rho);

  std::vector<double> inv_sqrt(es.spectrum.size(), 0.0);
  for (std::size_t j = 0; j < inv_sqrt.size(); ++j) {
    const double s = es.spectrum.values[j];
    if (s < thr) {
      if (weights[j] > kRankTol) return EntropyValue::infinite();
      continue;
    }
    inv_sqrt[j] = 1.0 / std::sqrt(s);
  }
  const HermitianMatrix w = congruence(es.vectors, HermitianMatrix::diagonal(inv_sqrt));
  const double top = lambda_max(congruence(w.matrix(), rho));
  return EntropyValue::finite(std::max(0.0, std::log(top)));
}

}  // namespace qentropy
