#pragma once

// Entropy and relative-entropy continuity bounds as (lhs, rhs, slack)
// calculators, plus the two literature bounds they are compared against.

#include <string>

#include "qentropy/decomposition.hpp"
#include "qentropy/states.hpp"

namespace qentropy {

inline constexpr double kSlackTol = 1e-9;

/// One evaluated inequality lhs <= rhs. When `applicable` is false the
/// hypotheses failed and rhs/slack are NaN.
struct BoundEvaluation {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool applicable = true;

  bool holds(double tol = kSlackTol) const { return !applicable || slack >= -tol; }
};

/// |S(rho1) - S(rho2)| <= eps log(d-1) + h(eps)
BoundEvaluation af_bound(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// S(rho1) - S(rho2) <= eps S(rho_plus) - eps S(rho_minus) + h(eps).
/// Throws IdenticalStatesError for rho1 == rho2.
BoundEvaluation theorem1_bound(const DensityMatrix& rho1, const DensityMatrix& rho2);
BoundEvaluation theorem1_bound(const DensityMatrix& rho1, const DensityMatrix& rho2, const JordanHahn& jh);

/// |(S(rho1) - S(rho2)) - eps (S(rho_plus) - S(rho_minus))| <= h(eps)
BoundEvaluation theorem1_symmetric_gap(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// For rho _|_ sigma and omega >= t rho: D(rho||omega) - D(sigma||omega) <= log(1/t - 1).
BoundEvaluation aux_lemma_gap(const DensityMatrix& rho, const DensityMatrix& sigma, const DensityMatrix& omega,
                              double t);

/// Equal-B-marginal conditional entropy bound:
/// |S(A|B)_1 - S(A|B)_2| <= eps log(d_A^2 - 1) + h(eps).
BoundEvaluation conditional_bound(const BipartitePair& pair);

/// |D(rho1||sigma) - D(rho2||sigma)| <=
///   eps log(exp(max{Dmax(rho_plus||sigma), Dmax(rho_minus||sigma)}) - 1) + h(eps)
BoundEvaluation relent_bound_fixed_second(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                          const DensityMatrix& sigma);

/// D(rho||sigma) <= eps log(exp(Dmax(omega_plus||sigma)) - 1) + h(eps), omega_plus from rho - sigma.
BoundEvaluation relent_self_bound(const DensityMatrix& rho, const DensityMatrix& sigma);

/// |D(rho1||sigma1) - D(rho2||sigma2)| <= eps log(exp(max{Dmax(rho_plus||sigma1), Dmax(rho_minus||sigma2)}) - 1)
///   + log(1 + delta / lambda_min) + h(eps),  lambda_min = min(lambda_min(sigma1), lambda_min(sigma2)).
BoundEvaluation relent_bound_both(const DensityMatrix& rho1, const DensityMatrix& rho2, const DensityMatrix& sigma1,
                                  const DensityMatrix& sigma2);

/// D(rho1||sigma) - D(rho2||sigma) <= eps (D(rho_plus||sigma) - D(rho_minus||sigma)) + h(eps)
BoundEvaluation relent_jordan_hahn_step(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                        const DensityMatrix& sigma);

/// D(rho_plus||sigma) - D(rho_minus||sigma) <= log(exp(Dmax(rho_plus||sigma)) - 1)
BoundEvaluation relent_dmax_step(const JordanHahn& jh, const DensityMatrix& sigma);

/// max_i log(1 + ||rho1 - rho2||_inf / (lambda_min(rho_i) lambda_min(sigma))),
/// applicable only when min_i lambda_min(rho_i) > ||rho1 - rho2||_inf.
BoundEvaluation gour_bound(const DensityMatrix& rho1, const DensityMatrix& rho2, const DensityMatrix& sigma);

/// eps log(1/lambda_min) + (1 + eps) h(eps / (1 + eps))
double bluhm_bound_fixed(double eps, double lambda_min_sigma);

/// (eps + 3 delta / (1 - l/2)) log(2/l) + (1 + eps) h(eps/(1+eps))
///   + 2 log(1 + (2 delta / l) / (1 - l/2 + delta)),  l = lambda_min_sigma
double bluhm_bound_both(double eps, double delta, double lambda_min_sigma);

}  // namespace qentropy
