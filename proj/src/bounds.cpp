#include "qentropy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qentropy/entropies.hpp"
#include "qentropy/errors.hpp"

namespace qentropy {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

BoundEvaluation evaluation(std::string name, double lhs, double rhs) {
  return {std::move(name), lhs, rhs, rhs - lhs, true};
}

BoundEvaluation not_applicable(std::string name, double lhs = kNaN) {
  return {std::move(name), lhs, kNaN, kNaN, false};
}

// Identical inputs: every bound reads 0 <= 0.
BoundEvaluation degenerate(std::string name) { return {std::move(name), 0.0, 0.0, 0.0, true}; }

// h(eps) with eps clamped to [0,1] against rounding at the endpoints.
double h(double eps) { return binary_entropy(std::clamp(eps, 0.0, 1.0)); }

double finite_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, const char* who) {
  const EntropyValue d = relative_entropy(rho, sigma);
  if (d.is_infinite()) throw NumericalFault(std::string(who) + ": relative entropy infinite for full-rank sigma");
  return d.value();
}

double finite_dmax(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const EntropyValue d = dmax(rho, sigma);
  if (d.is_infinite()) throw NumericalFault("Dmax infinite for full-rank sigma");
  return d.value();
}

// log(e^m - 1)
double log_expm1(double m) { return std::log(std::expm1(m)); }

}  // namespace

BoundEvaluation af_bound(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  const double eps = trace_distance(rho1, rho2);
  if (eps < kIdenticalTol) return degenerate("AF");
  const std::size_t d = rho1.dim();
  const double lhs = std::abs(von_neumann(rho1) - von_neumann(rho2));
  return evaluation("AF", lhs, eps * std::log(static_cast<double>(d - 1)) + h(eps));
}

BoundEvaluation theorem1_bound(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  return theorem1_bound(rho1, rho2, jordan_hahn(rho1, rho2));
}

BoundEvaluation theorem1_bound(const DensityMatrix& rho1, const DensityMatrix& rho2, const JordanHahn& jh) {
  const double eps = jh.epsilon;
  const double lhs = von_neumann(rho1) - von_neumann(rho2);
  const double rhs = eps * von_neumann(jh.rho_plus) - eps * von_neumann(jh.rho_minus) + h(eps);
  return evaluation("jordan-hahn", lhs, rhs);
}

BoundEvaluation theorem1_symmetric_gap(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  const JordanHahn jh = jordan_hahn(rho1, rho2);
  const double eps = jh.epsilon;
  const double diff = von_neumann(rho1) - von_neumann(rho2);
  const double lhs = std::abs(diff - eps * (von_neumann(jh.rho_plus) - von_neumann(jh.rho_minus)));
  return evaluation("jordan-hahn-symmetric", lhs, h(eps));
}

BoundEvaluation aux_lemma_gap(const DensityMatrix& rho, const DensityMatrix& sigma, const DensityMatrix& omega,
                              double t) {
  const char* name = "aux-lemma";
  if (!(t > 0.0 && t < 1.0)) return not_applicable(name);
  if (rho.dim() != sigma.dim() || rho.dim() != omega.dim()) throw DimensionError("aux_lemma_gap: dimension mismatch");
  const double overlap = (rho.matrix().matrix() * sigma.matrix().matrix()).trace().real();
  if (overlap > 1e-12) return not_applicable(name);
  if (lambda_min(omega.matrix() - t * rho.matrix()) < -kPsdTol) return not_applicable(name);

  const EntropyValue d_rho = relative_entropy(rho, omega);
  const EntropyValue d_sigma = relative_entropy(sigma, omega);
  if (d_rho.is_infinite() || d_sigma.is_infinite()) return not_applicable(name);
  return evaluation(name, d_rho.value() - d_sigma.value(), std::log(1.0 / t - 1.0));
}

BoundEvaluation conditional_bound(const BipartitePair& pair) {
  const char* name = "conditional";
  if (!pair.equal_marginals()) return not_applicable(name);
  const double eps = trace_distance(pair.rho1, pair.rho2);
  if (eps < kIdenticalTol) return degenerate(name);

  const JordanHahn jh = jordan_hahn(pair.rho1, pair.rho2);
  const double marginal_gap = trace_norm(partial_trace(jh.rho_plus, pair.dims, Subsystem::B) -
                                         partial_trace(jh.rho_minus, pair.dims, Subsystem::B));
  if (marginal_gap > kMarginalTol)
    throw NumericalFault("conditional_bound: rho_plus and rho_minus have different B-marginals");

  const double lhs =
      std::abs(conditional_entropy(pair.rho1, pair.dims) - conditional_entropy(pair.rho2, pair.dims));
  const double da = static_cast<double>(pair.dims.a);
  return evaluation(name, lhs, jh.epsilon * std::log(da * da - 1.0) + h(jh.epsilon));
}

BoundEvaluation relent_bound_fixed_second(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                          const DensityMatrix& sigma) {
  const char* name = "relent-fixed-second";
  if (!sigma.full_rank()) return not_applicable(name);
  if (trace_distance(rho1, rho2) < kIdenticalTol) return degenerate(name);

  const JordanHahn jh = jordan_hahn(rho1, rho2);
  const double lhs =
      std::abs(finite_relative_entropy(rho1, sigma, name) - finite_relative_entropy(rho2, sigma, name));
  const double m = std::max(finite_dmax(jh.rho_plus, sigma), finite_dmax(jh.rho_minus, sigma));
  return evaluation(name, lhs, jh.epsilon * log_expm1(m) + h(jh.epsilon));
}

BoundEvaluation relent_self_bound(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const char* name = "relent-self";
  if (!sigma.full_rank()) return not_applicable(name);
  if (trace_distance(rho, sigma) < kIdenticalTol) return degenerate(name);

  const JordanHahn jh = jordan_hahn(rho, sigma);
  const double lhs = finite_relative_entropy(rho, sigma, name);
  return evaluation(name, lhs, jh.epsilon * log_expm1(finite_dmax(jh.rho_plus, sigma)) + h(jh.epsilon));
}

BoundEvaluation relent_bound_both(const DensityMatrix& rho1, const DensityMatrix& rho2, const DensityMatrix& sigma1,
                                  const DensityMatrix& sigma2) {
  const char* name = "relent-both";
  if (!sigma1.full_rank() || !sigma2.full_rank()) return not_applicable(name);

  const double eps = trace_distance(rho1, rho2);
  const double delta = trace_distance(sigma1, sigma2);
  const double lam = std::min(sigma1.lambda_min(), sigma2.lambda_min());
  const double lhs =
      std::abs(finite_relative_entropy(rho1, sigma1, name) - finite_relative_entropy(rho2, sigma2, name));

  double rhs = std::log1p(delta / lam);
  if (eps >= kIdenticalTol) {
    const JordanHahn jh = jordan_hahn(rho1, rho2);
    const double m = std::max(finite_dmax(jh.rho_plus, sigma1), finite_dmax(jh.rho_minus, sigma2));
    rhs += jh.epsilon * log_expm1(m) + h(jh.epsilon);
  }
  return evaluation(name, lhs, rhs);
}

BoundEvaluation relent_jordan_hahn_step(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                        const DensityMatrix& sigma) {
  const char* name = "relent-jordan-hahn-step";
  if (!sigma.full_rank()) return not_applicable(name);
  if (trace_distance(rho1, rho2) < kIdenticalTol) return degenerate(name);
  const JordanHahn jh = jordan_hahn(rho1, rho2);
  const double lhs = finite_relative_entropy(rho1, sigma, name) - finite_relative_entropy(rho2, sigma, name);
  const double rhs = jh.epsilon * (finite_relative_entropy(jh.rho_plus, sigma, name) -
                                   finite_relative_entropy(jh.rho_minus, sigma, name)) +
                     h(jh.epsilon);
  return evaluation(name, lhs, rhs);
}

BoundEvaluation relent_dmax_step(const JordanHahn& jh, const DensityMatrix& sigma) {
  const char* name = "relent-dmax-step";
  if (!sigma.full_rank()) return not_applicable(name);
  const double lhs =
      finite_relative_entropy(jh.rho_plus, sigma, name) - finite_relative_entropy(jh.rho_minus, sigma, name);
  return evaluation(name, lhs, log_expm1(finite_dmax(jh.rho_plus, sigma)));
}

BoundEvaluation gour_bound(const DensityMatrix& rho1, const DensityMatrix& rho2, const DensityMatrix& sigma) {
  const char* name = "gour";
  if (!sigma.full_rank()) return not_applicable(name);
  const double lhs =
      std::abs(finite_relative_entropy(rho1, sigma, name) - finite_relative_entropy(rho2, sigma, name));
  const double gap = operator_norm(rho1.matrix() - rho2.matrix());
  const double l1 = rho1.lambda_min();
  const double l2 = rho2.lambda_min();
  if (!rho1.full_rank() || !rho2.full_rank() || !(std::min(l1, l2) > gap)) return not_applicable(name, lhs);
  const double ls = sigma.lambda_min();
  const double rhs = std::max(std::log1p(gap / (l1 * ls)), std::log1p(gap / (l2 * ls)));
  return evaluation(name, lhs, rhs);
}

double bluhm_bound_fixed(double eps, double lambda_min_sigma) {
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("bluhm_bound_fixed: eps must lie in [0,1)");
  if (!(lambda_min_sigma > 0.0 && lambda_min_sigma <= 1.0))
    throw DomainError("bluhm_bound_fixed: lambda_min(sigma) must lie in (0,1]");
  return eps * std::log(1.0 / lambda_min_sigma) + (1.0 + eps) * binary_entropy(eps / (1.0 + eps));
}

double bluhm_bound_both(double eps, double delta, double lambda_min_sigma) {
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("bluhm_bound_both: eps must lie in [0,1)");
  if (!(delta >= 0.0 && delta < 1.0)) throw DomainError("bluhm_bound_both: delta must lie in [0,1)");
  if (!(lambda_min_sigma > 0.0 && lambda_min_sigma <= 1.0))
    throw DomainError("bluhm_bound_both: lambda_min(sigma) must lie in (0,1]");
  const double l = lambda_min_sigma;
  const double shrink = 1.0 - l / 2.0;
  return (eps + 3.0 * delta / shrink) * std::log(2.0 / l) +
         (1.0 + eps) * binary_entropy(eps / (1.0 + eps)) +
         2.0 * std::log1p((2.0 * delta / l) / (shrink + delta));
}

}  // namespace qentropy
