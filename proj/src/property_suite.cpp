// Randomized invariant families. Every trial draws from its own stream
// (seed ^ family/group key, trial index), so serial and parallel runs agree.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qentropy/bounds.hpp"
#include "qentropy/decomposition.hpp"
#include "qentropy/entropies.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/experiments.hpp"
#include "qentropy/majorization.hpp"
#include "qentropy/states.hpp"

namespace qentropy {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "lidskii") return Suite::lidskii;
  if (name == "theorem1") return Suite::theorem1;
  if (name == "conditional") return Suite::conditional;
  if (name == "relent") return Suite::relent;
  if (name == "dmax") return Suite::dmax;
  if (name == "proof-lemmas") return Suite::proof_lemmas;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::lidskii: return "lidskii";
    case Suite::theorem1: return "theorem1";
    case Suite::conditional: return "conditional";
    case Suite::relent: return "relent";
    case Suite::dmax: return "dmax";
    case Suite::proof_lemmas: return "proof-lemmas";
    case Suite::all: return "all";
  }
  return "?";
}

std::size_t PropertyReport::total_failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failures;
  return n;
}

CheckResult PropertyReport::aggregate(std::string_view check) const {
  CheckResult out;
  out.check = std::string(check);
  out.group = "all";
  for (const auto& c : checks) {
    if (c.check != check) continue;
    out.observations += c.observations;
    out.failures += c.failures;
    out.worst_slack = std::min(out.worst_slack, c.worst_slack);
  }
  return out;
}

namespace {

using json = nlohmann::json;

// Fixed tolerances for identities that hold to rounding error.
constexpr double kIdentityTol = 1e-10;
constexpr std::size_t kSweepPoints = 1000;
constexpr std::size_t kMaxDumped = 50;

struct Group {
  std::string label;
  std::size_t dim = 0;
  BipartiteDims dims;
};

struct Observation {
  std::string check;
  double slack = 0.0;
  bool pass = true;
};

class Recorder {
 public:
  explicit Recorder(double tol) : tol_(tol) {}

  // Passes when slack >= -tol; NaN fails.
  void slack(const std::string& check, double s) { slack(check, s, tol_); }
  void slack(const std::string& check, double s, double tol) { obs_.push_back({check, s, s >= -tol}); }
  void expect(const std::string& check, bool ok, double measure) { obs_.push_back({check, measure, ok}); }
  void bound(const BoundEvaluation& b) {
    if (b.applicable) slack(b.name, b.slack);
  }
  void input(const std::string& name, const HermitianMatrix& m) { inputs_.emplace_back(name, m); }
  void fail(const std::string& what) { error_ = what; }

  bool all_pass() const {
    return error_.empty() && std::all_of(obs_.begin(), obs_.end(), [](const auto& o) { return o.pass; });
  }

  double tol() const { return tol_; }
  std::vector<Observation>& observations() { return obs_; }
  std::vector<std::pair<std::string, HermitianMatrix>>& inputs() { return inputs_; }
  const std::string& error() const { return error_; }

 private:
  double tol_;
  std::vector<Observation> obs_;
  std::vector<std::pair<std::string, HermitianMatrix>> inputs_;
  std::string error_;
};

using Kernel = std::function<void(const Group&, Rng&, Recorder&)>;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

json matrix_json(const HermitianMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json r = json::array();
    json c = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return {{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

class SuiteRunner {
 public:
  explicit SuiteRunner(const ExperimentConfig& cfg) : cfg_(cfg) {}

  void run(const std::string& family, const Group& g, std::size_t trials, const Kernel& kernel) {
    const std::uint64_t key = cfg_.seed ^ fnv1a(family + "/" + g.label);
    std::vector<Recorder> recs(trials, Recorder(cfg_.tolerance));
    for_each_trial(trials, cfg_.execution, [&](std::size_t i) {
      Recorder& rec = recs[i];
      Rng rng = Rng::stream(key, i);
      try {
        kernel(g, rng, rec);
      } catch (const std::exception& e) {
        rec.fail(e.what());
      }
      if (rec.all_pass()) rec.inputs().clear();
    });

    for (std::size_t i = 0; i < trials; ++i) {
      Recorder& rec = recs[i];
      for (const auto& o : rec.observations()) {
        CheckResult& c = slot(o.check, g.label);
        ++c.observations;
        if (!o.pass) ++c.failures;
        if (std::isnan(o.slack)) {
          c.worst_slack = -kInfinity;
        } else {
          c.worst_slack = std::min(c.worst_slack, o.slack);
        }
      }
      if (!rec.error().empty()) {
        CheckResult& c = slot(family + ":exception", g.label);
        ++c.observations;
        ++c.failures;
      }
      if (!rec.all_pass()) record_counterexample(family, g, i, key, rec);
    }
  }

  PropertyReport finish() {
    report_.counterexamples_json = dumped_.dump(1);
    return std::move(report_);
  }

 private:
  CheckResult& slot(const std::string& check, const std::string& group) {
    for (auto& c : report_.checks)
      if (c.check == check && c.group == group) return c;
    report_.checks.push_back(CheckResult{check, group});
    return report_.checks.back();
  }

  void record_counterexample(const std::string& family, const Group& g, std::size_t trial, std::uint64_t key,
                             Recorder& rec) {
    ++report_.counterexample_count;
    if (dumped_.size() >= kMaxDumped) return;
    json failed = json::array();
    for (const auto& o : rec.observations())
      if (!o.pass) failed.push_back({{"check", o.check}, {"slack", std::isnan(o.slack) ? json(nullptr) : json(o.slack)}});
    json inputs = json::object();
    for (const auto& [name, m] : rec.inputs()) inputs[name] = matrix_json(m);
    dumped_.push_back({{"family", family},
                       {"group", g.label},
                       {"seed", cfg_.seed},
                       {"stream_key", key},
                       {"trial", trial},
                       {"tolerance", cfg_.tolerance},
                       {"failed", std::move(failed)},
                       {"error", rec.error()},
                       {"inputs", std::move(inputs)}});
  }

  const ExperimentConfig& cfg_;
  PropertyReport report_;
  json dumped_ = json::array();
};

// ---------------------------------------------------------------------------
// samplers

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  double sum = 0.0;
  for (double& x : v) {
    x = -std::log(1.0 - rng.uniform());
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

DensityMatrix random_state_mixed_rank(std::size_t d, Rng& rng) {
  return random_mixed(d, static_cast<std::size_t>(rng.uniform_int(1, d)), rng);
}

DensityMatrix random_diagonal_state(std::size_t d, Rng& rng) {
  std::vector<double> p = random_simplex(d, rng);
  // Occasionally zero out an entry so supports differ.
  if (d > 2 && rng.uniform() < 0.3) {
    p[rng.uniform_int(0, d - 1)] = 0.0;
    double s = 0.0;
    for (double x : p) s += x;
    for (double& x : p) x /= s;
  }
  return validate_state(HermitianMatrix::diagonal(p));
}

double max_abs_diff(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

BipartiteDims bipartite_for(std::size_t d) {
  for (std::size_t a = 2; a * a <= d; ++a)
    if (d % a == 0) return {a, d / a};
  return {d, 2};
}

// ---------------------------------------------------------------------------
// kernels

void lidskii_kernel(const Group& g, Rng& rng, Recorder& rec) {
  const HermitianMatrix a = random_hermitian(g.dim, rng);
  const HermitianMatrix b = random_hermitian(g.dim, rng);
  rec.input("A", a);
  rec.input("B", b);
  const std::vector<double> x = lidskii_vector(b, a);
  const MajorizationReport rep = majorizes(eigenvalues(a + b).values, x, rec.tol());
  rec.expect("lidskii", rep.holds, rep.worst_partial_sum_gap);
}

void lemma1_kernel(const Group& g, Rng& rng, Recorder& rec) {
  const HermitianMatrix omega = random_hermitian(g.dim, rng);
  const HermitianMatrix delta = random_hermitian(g.dim, rng);
  rec.input("omega", omega);
  rec.input("delta", delta);
  const MinEigenComparison r = lemma1_bound(omega, delta);
  rec.slack("lemma1", r.rhs - r.lhs);

  // omega + delta >= 0 by construction: the Lidskii vector must be entrywise nonnegative.
  const DensityMatrix w = random_state_mixed_rank(g.dim, rng);
  const DensityMatrix target = random_state_mixed_rank(g.dim, rng);
  const HermitianMatrix shift = target.matrix() - w.matrix();
  rec.input("omega_state", w);
  rec.input("target_state", target);
  const MinEigenComparison r2 = lemma1_bound(w, shift);
  rec.expect("lemma1-entrywise", r2.entrywise_nonnegative.value_or(false), r2.rhs);
}

void lemma2_kernel(const Group& g, Rng& rng, Recorder& rec) {
  const HermitianMatrix omega = random_hermitian(g.dim, rng);
  const double scale = rng.uniform(0.5, 3.0);
  const HermitianMatrix target = scale * random_state_mixed_rank(g.dim, rng).matrix();
  const HermitianMatrix delta = target - omega;
  rec.input("omega", omega);
  rec.input("delta", delta);
  const EntropyComparison r = lemma2_bound(omega, delta);
  rec.slack("lemma2", r.rhs - r.lhs);
}

void variational_kernel(const Group& g, Rng& rng, Recorder& rec) {
  const DensityMatrix rho1 = random_state_mixed_rank(g.dim, rng);
  const DensityMatrix rho2 = random_state_mixed_rank(g.dim, rng);
  rec.input("rho1", rho1);
  rec.input("rho2", rho2);
  const JordanHahn jh = jordan_hahn(rho1, rho2);
  rec.slack("variational-at-rho2", variational_gap(rho2, jh));
  rec.expect("variational-at-rho-minus", std::abs(variational_gap(jh.rho_minus, jh)) <= kIdentityTol,
             -std::abs(variational_gap(jh.rho_minus, jh)));
  double worst = kInfinity;
  for (std::size_t k = 0; k < kSweepPoints; ++k) {
    const DensityMatrix omega = sample_feasible_omega(jh, rng);
    const double gap = variational_gap(omega, jh);
    if (gap < worst) worst = gap;
    rec.slack("variational", gap);
  }
}

void simplex_kernel(const Group& g, Rng& rng, Recorder& rec) {
  const std::size_t m = static_cast<std::size_t>(rng.uniform_int(1, g.dim));
  const std::vector<double> b = random_simplex(m, rng);
  const double eps = rng.uniform();
  rec.expect("simplex-at-b", std::abs(simplex_optimum_gap(b, b, eps)) <= kIdentityTol,
             -std::abs(simplex_optimum_gap(b, b, eps)));
  for (std::size_t k = 0; k < kSweepPoints; ++k) {
    const std::vector<double> w = random_simplex(m, rng);
    std::vector<double> z(m);
    for (std::size_t j = 0; j < m; ++j) z[j] = eps * b[j] + (1.0 - eps) * w[j];
    rec.slack("simplex", simplex_optimum_gap(z, b, eps));
  }
}

DensityMatrix ensemble_state(Ensemble e, std::size_t d, Rng& rng) {
  if (e == Ensemble::pure) return random_pure(d, rng);
  return random_state_mixed_rank(d, rng);
}

void theorem1_kernel(const Group& g, Rng& rng, Recorder& rec, Ensemble ensemble) {
  const std::size_t d = g.dim;
  const DensityMatrix rho1 = ensemble_state(ensemble, d, rng);
  const DensityMatrix rho2 = ensemble_state(ensemble, d, rng);
  rec.input("rho1", rho1);
  rec.input("rho2", rho2);

  const JordanHahn jh = jordan_hahn(rho1, rho2);
  const double eps = jh.epsilon;
  const double s_plus = von_neumann(jh.rho_plus);
  const double s_minus = von_neumann(jh.rho_minus);
  const double h = binary_entropy(std::clamp(eps, 0.0, 1.0));

  rec.bound(theorem1_bound(rho1, rho2, jh));
  rec.bound(theorem1_symmetric_gap(rho1, rho2));
  rec.bound(af_bound(rho1, rho2));

  // eps (S+ - S-) + h <= eps S+ + h <= eps log(d-1) + h
  const double chain_tol = std::min(rec.tol(), kIdentityTol);
  const double c1 = eps * (s_plus - s_minus) + h;
  const double c2 = eps * s_plus + h;
  const double c3 = eps * std::log(static_cast<double>(d - 1)) + h;
  rec.slack("af-chain", std::min(c2 - c1, c3 - c2), chain_tol);

  // Decomposition invariants.
  const HermitianMatrix recon = eps * (jh.rho_plus.matrix() - jh.rho_minus.matrix());
  rec.slack("jh-reconstruction", -operator_norm(jh.delta - recon), kIdentityTol);
  const double overlap = (jh.rho_plus.matrix().matrix() * jh.rho_minus.matrix().matrix()).trace().real();
  rec.slack("jh-orthogonality", -std::abs(overlap), 1e-12);
  rec.slack("jh-epsilon", -std::abs(eps - 0.5 * trace_norm(jh.delta)), kIdentityTol);
  rec.expect("jh-ranks", jh.rank_plus + jh.rank_minus <= d && jh.rank_plus <= d - 1,
             static_cast<double>(jh.rank_plus));

  const JordanHahn swapped = jordan_hahn(rho2, rho1);
  const double swap_err =
      std::max({std::abs(swapped.epsilon - eps),
                (swapped.rho_plus.matrix().matrix() - jh.rho_minus.matrix().matrix()).frobenius_norm(),
                (swapped.rho_minus.matrix().matrix() - jh.rho_plus.matrix().matrix()).frobenius_norm()});
  rec.slack("jh-swap", -swap_err, 1e-9);

  // lambda_down(delta) + lambda_up(rho_minus) = lambda(eps rho_plus + (1 - eps) rho_minus)
  const HermitianMatrix mixture = eps * jh.rho_plus.matrix() + (1.0 - eps) * jh.rho_minus.matrix();
  rec.slack("ll3", -max_abs_diff(lidskii_vector(jh.rho_minus, jh.delta), eigenvalues(mixture).values),
            kIdentityTol);
  const DeltaSpectrumSplit split = delta_spectrum_split(jh);
  std::vector<double> predicted;
  for (double a : split.a) predicted.push_back(eps * a);
  for (double b : split.b) predicted.push_back(-eps * b);
  rec.slack("ll1", -max_abs_diff(predicted, eigenvalues(jh.delta).values), kIdentityTol);

  rec.slack("orthogonal-mixture",
            -std::abs(operator_entropy(mixture) - (eps * s_plus + (1.0 - eps) * s_minus + h)));

  // Almost convexity and concavity on a random mixture.
  const double t = rng.uniform();
  const DensityMatrix mix = validate_state(t * rho1.matrix() + (1.0 - t) * rho2.matrix());
  const double avg = t * von_neumann(rho1) + (1.0 - t) * von_neumann(rho2);
  rec.slack("almost-convexity", avg + binary_entropy(t) - von_neumann(mix));
  rec.slack("concavity", von_neumann(mix) - avg);

  // Commuting pair: rho1 >= eps rho_plus always holds, and the convex
  // decompositions through omega reconstruct both states.
  const DensityMatrix p1 = random_diagonal_state(d, rng);
  const DensityMatrix p2 = random_diagonal_state(d, rng);
  if (trace_distance(p1, p2) < kIdenticalTol) return;
  rec.input("commuting_rho1", p1);
  rec.input("commuting_rho2", p2);
  const JordanHahn cj = jordan_hahn(p1, p2);
  const HermitianMatrix rest = p1.matrix() - cj.epsilon * cj.rho_plus.matrix();
  const double lmin = lambda_min(rest);
  rec.slack("commuting-case2", lmin, kIdentityTol);
  if (lmin >= -kPsdTol && cj.epsilon < 1.0 - 1e-9) {
    const DensityMatrix omega = validate_state(rest * (1.0 / (1.0 - cj.epsilon)));
    const double ce = cj.epsilon;
    const HermitianMatrix r1 = ce * cj.rho_plus.matrix() + (1.0 - ce) * omega.matrix();
    const HermitianMatrix r2 = ce * cj.rho_minus.matrix() + (1.0 - ce) * omega.matrix();
    rec.slack("case2-reconstruction",
              -std::max(operator_norm(r1 - p1.matrix()), operator_norm(r2 - p2.matrix())), kIdentityTol);
    const double hc = binary_entropy(ce);
    rec.slack("case2-almost-convexity",
              ce * von_neumann(cj.rho_plus) + (1.0 - ce) * von_neumann(omega) + hc - von_neumann(p1));
    rec.slack("case2-concavity", von_neumann(p2) - ce * von_neumann(cj.rho_minus) - (1.0 - ce) * von_neumann(omega));
  }
}

void conditional_kernel(const Group& g, Rng& rng, Recorder& rec) {
  const double u = 1.0 - rng.uniform();
  const BipartitePair pair = random_equal_marginal_pair(g.dims.a, g.dims.b, u, rng);
  rec.input("rho1", pair.rho1);
  rec.input("rho2", pair.rho2);
  rec.slack("equal-marginals", -pair.marginal_mismatch(), kMarginalTol);
  rec.slack("rho2-psd", pair.rho2.lambda_min(), kPsdTol);
  rec.bound(conditional_bound(pair));

  if (trace_distance(pair.rho1, pair.rho2) < kIdenticalTol) return;
  const JordanHahn jh = jordan_hahn(pair.rho1, pair.rho2);
  const HermitianMatrix marginal = partial_trace(jh.rho_minus, pair.dims, Subsystem::B);
  const DensityMatrix omega = validate_state(tensor(maximally_mixed(g.dims.a), marginal));
  const double da2 = static_cast<double>(g.dims.a * g.dims.a);
  const EntropyValue dm = dmax(jh.rho_minus, omega);
  rec.expect("conditional-dmax", dm.is_finite() && dm.value() <= std::log(da2) + rec.tol(),
             dm.is_finite() ? std::log(da2) - dm.value() : -kInfinity);
  const BoundEvaluation aux = aux_lemma_gap(jh.rho_minus, jh.rho_plus, omega, 1.0 / da2);
  rec.expect("aux-lemma", aux.applicable && aux.slack >= -rec.tol(), aux.applicable ? aux.slack : -kInfinity);
}

void relent_kernel(const Group& g, Rng& rng, Recorder& rec) {
  const std::size_t d = g.dim;
  const DensityMatrix rho1 = random_state_mixed_rank(d, rng);
  const DensityMatrix rho2 = random_state_mixed_rank(d, rng);
  const DensityMatrix sigma = random_mixed(d, rng);
  const DensityMatrix other = random_mixed(d, rng);
  const double s = rng.uniform();
  const DensityMatrix sigma2 = validate_state((1.0 - s) * sigma.matrix() + s * other.matrix());
  rec.input("rho1", rho1);
  rec.input("rho2", rho2);
  rec.input("sigma", sigma);
  rec.input("sigma2", sigma2);

  const BoundEvaluation ours = relent_bound_fixed_second(rho1, rho2, sigma);
  rec.bound(ours);
  rec.bound(relent_bound_fixed_second(rho2, rho1, sigma));
  rec.bound(relent_self_bound(rho1, sigma));
  rec.bound(relent_bound_both(rho1, rho2, sigma, sigma2));
  rec.bound(relent_jordan_hahn_step(rho1, rho2, sigma));
  rec.bound(relent_jordan_hahn_step(rho2, rho1, sigma));
  const JordanHahn jh = jordan_hahn(rho1, rho2);
  rec.bound(relent_dmax_step(jh, sigma));

  const double eps = trace_distance(rho1, rho2);
  if (eps < 1.0) rec.slack("bluhm-dominance", bluhm_bound_fixed(eps, sigma.lambda_min()) - ours.rhs);
  const BoundEvaluation gour = gour_bound(rho1, rho2, sigma);
  if (gour.applicable) {
    rec.bound(gour);
    rec.slack("gour-dominance", gour.rhs - ours.rhs);
  }

  // D(rho || c sigma) = D(rho || sigma) - log c
  const double base = relative_entropy(rho1, sigma).value();
  for (double c : {0.5, 2.0, static_cast<double>(d)}) {
    const double scaled = relative_entropy(rho1, c * sigma.matrix()).value();
    rec.slack("c-scaling", -std::abs(scaled - (base - std::log(c))));
  }

  rec.slack("relent-nonneg", base, kIdentityTol);
  const EntropyValue cross = relative_entropy(rho1, rho2);
  rec.expect("relent-nonneg-states", cross.is_infinite() || cross.value() >= -kIdentityTol,
             cross.is_infinite() ? kInfinity : cross.value());

  // S(A|B) = -D(rho_AB || 1_A (x) rho_B)
  const BipartiteDims dims = bipartite_for(d);
  const DensityMatrix rho_ab = random_state_mixed_rank(dims.total(), rng);
  rec.input("rho_ab", rho_ab);
  const HermitianMatrix ref = tensor(HermitianMatrix::identity(dims.a), partial_trace(rho_ab, dims, Subsystem::B));
  const EntropyValue dref = relative_entropy(rho_ab, ref);
  rec.expect("condrel", dref.is_finite() && std::abs(conditional_entropy(rho_ab, dims) + dref.value()) <= rec.tol(),
             dref.is_finite() ? -std::abs(conditional_entropy(rho_ab, dims) + dref.value()) : -kInfinity);

  // Data processing under a random identity-resolving pinching.
  const EigenSystem basis = hermitian_eigensystem(random_hermitian(d, rng));
  const std::size_t blocks = static_cast<std::size_t>(rng.uniform_int(1, d));
  std::vector<std::vector<double>> masks(blocks, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j < d; ++j) masks[j < blocks ? j : rng.uniform_int(0, blocks - 1)][j] = 1.0;
  std::vector<HermitianMatrix> projectors;
  for (const auto& m : masks) projectors.push_back(congruence(basis.vectors, HermitianMatrix::diagonal(m)));
  const DensityMatrix pr = validate_state(pinch(rho1, projectors));
  const HermitianMatrix ps = pinch(sigma, projectors);
  rec.slack("pinch-trace", -std::abs(ps.trace() - 1.0), kIdentityTol);
  rec.slack("dpi-pinching", base - relative_entropy(pr, ps).value());
}

void dmax_kernel(const Group& g, Rng& rng, Recorder& rec) {
  const std::size_t d = g.dim;
  const DensityMatrix rho = random_state_mixed_rank(d, rng);
  const DensityMatrix sigma = random_mixed(d, rng);
  rec.input("rho", rho);
  rec.input("sigma", sigma);
  const double dm = dmax(rho, sigma).value();
  rec.slack("dmax-feasible", lambda_min(std::exp(dm) * sigma.matrix() - rho.matrix()));
  if (dm > 1e-6) {
    const double below = lambda_min(std::exp(dm - 1e-6) * sigma.matrix() - rho.matrix());
    rec.expect("dmax-minimal", below < 0.0, -below);
  }
  rec.slack("dmax-dominates-relent", dm - relative_entropy(rho, sigma).value());

  // Support violation: sigma of rank d - 1 against a full-rank rho.
  const DensityMatrix full = random_mixed(d, rng);
  const DensityMatrix thin = random_mixed(d, d - 1, rng);
  rec.expect("dmax-support", dmax(full, thin).is_infinite() && relative_entropy(full, thin).is_infinite(), 0.0);
}

}  // namespace

PropertyReport run_property_suite(const ExperimentConfig& cfg, Suite suite, std::span<const std::size_t> dims) {
  if (!(cfg.trials >= 1)) throw ValidationError("config: trials must be >= 1");
  if (!(cfg.tolerance > 0.0)) throw ValidationError("config: tolerance must be > 0");
  SuiteRunner runner(cfg);
  auto wants = [&](Suite s) { return suite == Suite::all || suite == s; };
  auto dim_groups = [&] {
    std::vector<Group> gs;
    for (std::size_t d : dims) gs.push_back({"d=" + std::to_string(d), d, {}});
    return gs;
  };
  const std::size_t sweep_instances = std::max<std::size_t>(1, cfg.trials / kSweepPoints);

  if (wants(Suite::lidskii) || wants(Suite::proof_lemmas))
    for (const auto& g : dim_groups()) runner.run("lidskii", g, cfg.trials, lidskii_kernel);

  if (wants(Suite::proof_lemmas)) {
    for (const auto& g : dim_groups()) {
      runner.run("lemma1", g, cfg.trials, lemma1_kernel);
      runner.run("lemma2", g, cfg.trials, lemma2_kernel);
      runner.run("simplex", g, sweep_instances, simplex_kernel);
    }
    for (std::size_t d : {2, 3, 4})
      runner.run("variational", {"d=" + std::to_string(d), d, {}}, sweep_instances, variational_kernel);
  }

  if (wants(Suite::theorem1)) {
    const Ensemble e = cfg.ensemble;
    for (const auto& g : dim_groups())
      runner.run("theorem1", g, cfg.trials,
                 [e](const Group& gr, Rng& rng, Recorder& rec) { theorem1_kernel(gr, rng, rec, e); });
  }

  if (wants(Suite::conditional)) {
    for (BipartiteDims bd : {BipartiteDims{2, 2}, BipartiteDims{2, 3}, BipartiteDims{3, 3}}) {
      const Group g{"dA=" + std::to_string(bd.a) + ",dB=" + std::to_string(bd.b), bd.total(), bd};
      runner.run("conditional", g, cfg.trials, conditional_kernel);
    }
  }

  if (wants(Suite::relent))
    for (const auto& g : dim_groups()) runner.run("relent", g, cfg.trials, relent_kernel);

  if (wants(Suite::dmax))
    for (const auto& g : dim_groups()) runner.run("dmax", g, cfg.trials, dmax_kernel);

  return runner.finish();
}

}  // namespace qentropy
