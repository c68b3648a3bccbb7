#include "qentropy/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "qentropy/errors.hpp"

namespace qentropy {

JordanHahn jordan_hahn(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim()) throw DimensionError("jordan_hahn: dimension mismatch");
  HermitianMatrix delta = rho1.matrix() - rho2.matrix();
  const EigenSystem es = hermitian_eigensystem(delta);
  const std::size_t d = delta.dim();

  double half_norm = 0.0;
  for (double x : es.spectrum.values) half_norm += 0.5 * std::abs(x);
  if (half_norm < kIdenticalTol)
    throw IdenticalStatesError("jordan_hahn: states are identical (trace distance " + std::to_string(half_norm) +
                               ")");

  // Eigenvalues within the rank threshold of zero belong to neither part.
  const double thr = rank_threshold(es.spectrum);
  std::vector<double> pos(d, 0.0);
  std::vector<double> neg(d, 0.0);
  double tr_pos = 0.0;
  double tr_neg = 0.0;
  std::size_t k_pos = 0;
  std::size_t k_neg = 0;
  for (std::size_t j = 0; j < d; ++j) {
    const double lam = es.spectrum.values[j];
    if (lam >= thr) {
      pos[j] = lam;
      tr_pos += lam;
      ++k_pos;
    } else if (lam <= -thr) {
      neg[j] = -lam;
      tr_neg += -lam;
      ++k_neg;
    }
  }
  if (k_pos == 0 || k_neg == 0)
    throw IdenticalStatesError("jordan_hahn: difference is numerically zero");

  for (double& x : pos) x /= tr_pos;
  for (double& x : neg) x /= tr_neg;

  return JordanHahn{
      .epsilon = tr_pos,
      .rho_plus = validate_state(congruence(es.vectors, HermitianMatrix::diagonal(pos))),
      .rho_minus = validate_state(congruence(es.vectors, HermitianMatrix::diagonal(neg))),
      .delta = std::move(delta),
      .rank_plus = k_pos,
      .rank_minus = k_neg,
  };
}

DeltaSpectrumSplit delta_spectrum_split(const JordanHahn& jh) {
  const std::size_t d = jh.dim();
  const std::size_t k = jh.rank_plus;
  const Spectrum plus = jh.rho_plus.spectrum().descending();
  const Spectrum minus = jh.rho_minus.spectrum().descending();

  DeltaSpectrumSplit out;
  out.a.assign(plus.values.begin(), plus.values.begin() + static_cast<std::ptrdiff_t>(k));
  out.b.assign(minus.values.begin(), minus.values.begin() + static_cast<std::ptrdiff_t>(d - k));
  std::reverse(out.b.begin(), out.b.end());
  for (double& x : out.b) x = std::max(x, 0.0);
  return out;
}

}  // namespace qentropy
