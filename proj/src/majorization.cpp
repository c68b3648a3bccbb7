#include "qentropy/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qentropy/entropies.hpp"
#include "qentropy/errors.hpp"

namespace qentropy {

namespace {

std::vector<double> sorted_descending(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] > v[j]; });
  std::vector<double> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[idx[k]];
  return out;
}

}  // namespace

MajorizationReport majorizes(std::span<const double> y, std::span<const double> x, double partial_sum_tol) {
  if (x.size() != y.size()) throw DimensionError("majorizes: vectors have different lengths");
  const std::vector<double> xs = sorted_descending(x);
  const std::vector<double> ys = sorted_descending(y);
  const std::size_t d = xs.size();

  MajorizationReport rep;
  rep.worst_partial_sum_gap = 0.0;
  double sx = 0.0;
  double sy = 0.0;
  bool first = true;
  for (std::size_t k = 0; k < d; ++k) {
    sx += xs[k];
    sy += ys[k];
    if (k + 1 == d) break;
    const double gap = sy - sx;
    if (first || gap < rep.worst_partial_sum_gap) rep.worst_partial_sum_gap = gap;
    first = false;
    if (gap < -partial_sum_tol && !rep.failing_k) rep.failing_k = k + 1;
  }
  const bool totals_agree = std::abs(sy - sx) <= kTotalSumTol;
  if (!totals_agree && !rep.failing_k) rep.failing_k = d;
  rep.holds = !rep.failing_k;
  return rep;
}

std::vector<double> lidskii_vector(const HermitianMatrix& omega, const HermitianMatrix& delta) {
  if (omega.dim() != delta.dim()) throw DimensionError("lidskii_vector: dimension mismatch");
  const Spectrum down = eigenvalues(delta).descending();
  const Spectrum up = eigenvalues(omega).ascending();
  std::vector<double> out(down.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = down.values[j] + up.values[j];
  return out;
}

MajorizationReport lidskii_check(const HermitianMatrix& a, const HermitianMatrix& b) {
  const std::vector<double> x = lidskii_vector(b, a);
  const Spectrum sum = eigenvalues(a + b);
  return majorizes(sum.values, x);
}

MinEigenComparison lemma1_bound(const HermitianMatrix& omega, const HermitianMatrix& delta) {
  const std::vector<double> x = lidskii_vector(omega, delta);
  MinEigenComparison out;
  out.lhs = lambda_min(omega + delta);
  out.rhs = *std::min_element(x.begin(), x.end());
  if (out.lhs >= -kPsdTol) out.entrywise_nonnegative = out.rhs >= -kPsdTol;
  return out;
}

EntropyComparison lemma2_bound(const HermitianMatrix& omega, const HermitianMatrix& delta) {
  const HermitianMatrix sum = omega + delta;
  if (lambda_min(sum) < -kPsdTol) throw DomainError("lemma2_bound: omega + delta is not positive semidefinite");
  std::vector<double> x = lidskii_vector(omega, delta);
  for (double& v : x) {
    if (v < -kPsdTol) throw NumericalFault("lemma2_bound: Lidskii vector has a negative entry");
    v = std::max(v, 0.0);
  }
  return {operator_entropy(sum), shannon(x)};
}

double variational_gap(const DensityMatrix& omega, const JordanHahn& jh) {
  if (omega.dim() != jh.dim()) throw DimensionError("variational_gap: dimension mismatch");
  const HermitianMatrix shifted = omega.matrix() + jh.delta;
  if (lambda_min(shifted) < -kPsdTol) throw DomainError("variational_gap: omega + delta is not positive semidefinite");
  const double optimum = operator_entropy(jh.rho_minus.matrix() + jh.delta) - von_neumann(jh.rho_minus);
  return optimum - (operator_entropy(shifted) - von_neumann(omega));
}

DensityMatrix sample_feasible_omega(const JordanHahn& jh, Rng& rng) {
  const DensityMatrix nu = random_mixed(jh.dim(), rng);
  const HermitianMatrix base = jh.rho_minus.matrix() + jh.delta;  // s = 0
  const HermitianMatrix dir = nu.matrix() - jh.rho_minus.matrix();
  // The s = 0 end can sit at -1e-17 when delta has a kernel.
  auto feasible = [&](double s) { return lambda_min(base + s * dir) >= -1e-13; };

  double s_max = 1.0;
  if (!feasible(1.0)) {
    // lambda_min is concave in s, so the feasible set is an interval [0, s*].
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 48; ++it) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
    }
    s_max = lo;
  }
  const double s = rng.uniform(0.0, s_max);
  return validate_state((1.0 - s) * jh.rho_minus.matrix() + s * nu.matrix());
}

double simplex_optimum_gap(std::span<const double> z, std::span<const double> b, double eps) {
  if (z.size() != b.size()) throw DimensionError("simplex_optimum_gap: length mismatch");
  double optimum = 0.0;
  double candidate = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    double shifted = z[j] - eps * b[j];
    if (shifted < 0.0) {
      if (shifted < -1e-12) throw DomainError("simplex_optimum_gap: infeasible z (z_j < eps b_j)");
      shifted = 0.0;
    }
    optimum += eta((1.0 - eps) * b[j]) - eta(b[j]);
    candidate += eta(shifted) - eta(z[j]);
  }
  return optimum - candidate;
}

}  // namespace qentropy
