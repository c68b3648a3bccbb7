#pragma once

#include <cstddef>
#include <vector>

#include "qentropy/linalg.hpp"
#include "qentropy/states.hpp"

namespace qentropy {

/// rho1 - rho2 = delta = epsilon * (rho_plus - rho_minus), with rho_plus and
/// rho_minus states of mutually orthogonal support.
struct JordanHahn {
  double epsilon = 0.0;
  DensityMatrix rho_plus;
  DensityMatrix rho_minus;
  HermitianMatrix delta;
  std::size_t rank_plus = 0;
  std::size_t rank_minus = 0;

  std::size_t dim() const { return delta.dim(); }
};

/// Trace distances below this are treated as identical states.
inline constexpr double kIdenticalTol = 1e-12;

/// Throws IdenticalStatesError when 1/2 ||rho1 - rho2||_1 < kIdenticalTol.
JordanHahn jordan_hahn(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// The vectors a (length k = rank_plus) and b (length d - k) with
///   lambda_down(delta) = (eps * a, -eps * b)
/// a holds the nonzero eigenvalues of rho_plus in non-increasing order; b holds
/// the leading d - k eigenvalues of rho_minus in non-decreasing order (so its
/// zero padding, if any, comes first).
struct DeltaSpectrumSplit {
  std::vector<double> a;
  std::vector<double> b;
};

DeltaSpectrumSplit delta_spectrum_split(const JordanHahn& jh);

}  // namespace qentropy
