#pragma once

// Seeded Monte-Carlo experiments: the three-way comparison of relative-entropy
// continuity bounds, the randomized property suites, and CSV persistence.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qentropy/linalg.hpp"
#include "qentropy/parallel.hpp"

namespace qentropy {

enum class Ensemble { hilbert_schmidt, pure, equal_marginal };

std::optional<Ensemble> parse_ensemble(std::string_view name);
std::string_view ensemble_name(Ensemble e);

struct ExperimentConfig {
  std::size_t dim = 15;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  Ensemble ensemble = Ensemble::hilbert_schmidt;
  std::filesystem::path output_path;
  Execution execution = Execution::parallel;

  /// Throws ValidationError unless trials >= 1, dim >= 2, tolerance > 0.
  void validate() const;
};

struct TrialRecord {
  std::size_t trial_index = 0;
  std::size_t dim = 0;
  double epsilon = 0.0;
  std::optional<double> delta;  // only for two-sigma runs
  double lhs_actual = 0.0;
  double bound_new = 0.0;
  std::optional<double> bound_gour;  // empty when not applicable
  bool gour_applicable = false;
  double bound_bluhm = 0.0;
  double slack_new = 0.0;
  double lambda_min_sigma = 0.0;
};

struct Figure1Summary {
  std::size_t trials = 0;
  std::size_t faults = 0;
  std::size_t gour_applicable = 0;
  double fraction_new_le_bluhm = 0.0;
  /// Empty when no trial satisfied the Gour hypothesis.
  std::optional<double> fraction_new_le_gour;
  double min_slack = kInfinity;

  bool all_pass(double tol) const;
};

struct Figure1Result {
  std::vector<TrialRecord> records;  // in trial order, faulted trials omitted
  Figure1Summary summary;
  std::vector<std::string> fault_messages;
};

/// One trial: sample rho1, rho2 and a full-rank sigma from the configured
/// ensemble using stream (seed, index) and evaluate all three bounds.
/// Throws on numerical faults.
TrialRecord figure1_trial(const ExperimentConfig& cfg, std::size_t index);

Figure1Result run_figure1(const ExperimentConfig& cfg);
Figure1Summary summarize(std::span<const TrialRecord> records, std::size_t faults, double tol);

inline constexpr std::string_view kCsvHeader =
    "trial_index,dim,epsilon,delta,lhs_actual,bound_new,bound_gour,gour_applicable,bound_bluhm,slack_new,"
    "lambda_min_sigma";

std::string format_csv(std::span<const TrialRecord> records);
void write_csv(std::ostream& out, std::span<const TrialRecord> records);
/// Throws std::runtime_error naming the path on I/O failure.
void emit_csv(std::span<const TrialRecord> records, const std::filesystem::path& path);
/// Throws ValidationError naming the first bad line.
std::vector<TrialRecord> parse_csv(std::istream& in);

// ---------------------------------------------------------------------------
// Property suites

enum class Suite { lidskii, theorem1, conditional, relent, dmax, proof_lemmas, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

inline const std::vector<std::size_t> kDefaultSuiteDims{2, 3, 5, 8, 15};

struct CheckResult {
  std::string check;
  std::string group;  // e.g. "d=5" or "dA=2,dB=3"
  std::size_t observations = 0;
  std::size_t failures = 0;
  double worst_slack = kInfinity;
};

struct PropertyReport {
  std::vector<CheckResult> checks;
  /// JSON array of failing inputs (matrices, seed, trial index) for replay.
  std::string counterexamples_json = "[]";
  std::size_t counterexample_count = 0;

  std::size_t total_failures() const;
  bool passed() const { return total_failures() == 0; }
  /// Sums over groups.
  CheckResult aggregate(std::string_view check) const;
};

/// Runs every invariant family of `suite`. `cfg.trials` is the number of
/// random instances per dimension; the omega/z sweeps use
/// max(1, trials / 1000) instances of 1000 points each.
PropertyReport run_property_suite(const ExperimentConfig& cfg, Suite suite,
                                  std::span<const std::size_t> dims = kDefaultSuiteDims);

/// Saturation of the Jordan-Hahn and AF bounds on the tight family.
struct TightnessRow {
  std::size_t dim = 0;
  double epsilon = 0.0;
  double entropy_gap = 0.0;  // S(rho1) - S(rho2)
  double jordan_hahn_rhs = 0.0;
  double af_rhs = 0.0;
  double jordan_hahn_slack = 0.0;
  double af_slack = 0.0;
};

inline const std::vector<double> kTightnessEpsilons{0.1, 0.25, 0.5, 0.9};
inline const std::vector<std::size_t> kTightnessDims{2, 3, 8};

std::vector<TightnessRow> tightness_table(std::span<const std::size_t> dims = kTightnessDims,
                                          std::span<const double> epsilons = kTightnessEpsilons);

}  // namespace qentropy
