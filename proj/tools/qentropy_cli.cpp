// qentropy: command-line driver for the bound comparison, the randomized
// property suites and the tightness table.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/experiments.hpp"

namespace {

using qentropy::ExperimentConfig;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  ExperimentConfig cfg;
  std::string ensemble = "hilbert-schmidt";
  std::string out;
  std::string suite = "all";
  bool serial = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--dim", o.cfg.dim, "Hilbert-space dimension")->capture_default_str();
  cmd->add_option("--trials", o.cfg.trials, "number of random trials")->capture_default_str();
  cmd->add_option("--seed", o.cfg.seed, "base seed")->capture_default_str();
  cmd->add_option("--tolerance", o.cfg.tolerance, "slack tolerance")->capture_default_str();
  cmd->add_option("--out", o.out, "output path");
  cmd->add_option("--ensemble", o.ensemble, "hilbert-schmidt | pure | equal-marginal")->capture_default_str();
  cmd->add_flag("--serial", o.serial, "run trials on one thread");
}

// Throws ValidationError on bad values; main maps that to a usage error.
void finish_config(Options& o) {
  const auto e = qentropy::parse_ensemble(o.ensemble);
  if (!e) throw qentropy::ValidationError("unknown ensemble '" + o.ensemble + "'");
  o.cfg.ensemble = *e;
  o.cfg.output_path = o.out;
  o.cfg.execution = o.serial ? qentropy::Execution::serial : qentropy::Execution::parallel;
  o.cfg.validate();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_figure1(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const qentropy::Figure1Result res = qentropy::run_figure1(o.cfg);
  const double elapsed = seconds_since(t0);
  if (!o.out.empty()) qentropy::emit_csv(res.records, o.cfg.output_path);

  const auto& s = res.summary;
  std::printf("figure1 dim=%zu trials=%zu seed=%llu ensemble=%s\n", o.cfg.dim, o.cfg.trials,
              static_cast<unsigned long long>(o.cfg.seed), o.ensemble.c_str());
  std::printf("  records               %zu\n", res.records.size());
  std::printf("  faults                %zu\n", s.faults);
  for (const auto& m : res.fault_messages) std::printf("    %s\n", m.c_str());
  std::printf("  min slack (new)       %.6e\n", s.min_slack);
  std::printf("  fraction new<=bluhm   %.3f\n", s.fraction_new_le_bluhm);
  if (s.fraction_new_le_gour) {
    std::printf("  fraction new<=gour    %.3f  (%zu applicable)\n", *s.fraction_new_le_gour, s.gour_applicable);
  } else {
    std::printf("  fraction new<=gour    n/a   (0 applicable)\n");
  }
  std::printf("  elapsed               %.2f s\n", elapsed);
  if (!o.out.empty()) std::printf("  csv                   %s\n", o.out.c_str());
  return s.all_pass(o.cfg.tolerance) ? kExitPass : kExitFail;
}

int run_verify(const Options& o, bool dim_given) {
  const auto suite = qentropy::parse_suite(o.suite);
  if (!suite) throw qentropy::ValidationError("unknown suite '" + o.suite + "'");
  std::vector<std::size_t> dims = qentropy::kDefaultSuiteDims;
  if (dim_given) dims = {o.cfg.dim};

  const auto t0 = std::chrono::steady_clock::now();
  const qentropy::PropertyReport rep = qentropy::run_property_suite(o.cfg, *suite, dims);
  const double elapsed = seconds_since(t0);

  std::printf("%-28s %-12s %10s %8s %14s\n", "check", "group", "observed", "failed", "worst slack");
  for (const auto& c : rep.checks)
    std::printf("%-28s %-12s %10zu %8zu %14.6e\n", c.check.c_str(), c.group.c_str(), c.observations, c.failures,
                c.worst_slack);
  std::printf("suite=%s trials=%zu seed=%llu tolerance=%g failures=%zu elapsed=%.2fs\n", o.suite.c_str(),
              o.cfg.trials, static_cast<unsigned long long>(o.cfg.seed), o.cfg.tolerance, rep.total_failures(),
              elapsed);

  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot open " + o.out + " for writing");
    f << rep.counterexamples_json << '\n';
    if (!f) throw std::runtime_error("write failed for " + o.out);
    std::printf("counterexamples (%zu) written to %s\n", rep.counterexample_count, o.out.c_str());
  }
  return rep.passed() ? kExitPass : kExitFail;
}

int run_tightness(const Options& o) {
  const auto rows = qentropy::tightness_table();
  bool ok = true;
  std::printf("%4s %6s %14s %14s %14s %12s %12s\n", "d", "eps", "S1-S2", "jordan-hahn", "AF", "slack JH",
              "slack AF");
  for (const auto& r : rows) {
    std::printf("%4zu %6.2f %14.10f %14.10f %14.10f %12.3e %12.3e\n", r.dim, r.epsilon, r.entropy_gap,
                r.jordan_hahn_rhs, r.af_rhs, r.jordan_hahn_slack, r.af_slack);
    if (std::abs(r.jordan_hahn_slack) > o.cfg.tolerance || std::abs(r.af_slack) > o.cfg.tolerance) ok = false;
  }
  std::printf("%s\n", ok ? "all rows saturate" : "some rows do not saturate");
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuity bounds for quantum entropies: experiments and checks"};
  app.require_subcommand(1);

  Options fig;
  Options ver;
  Options tight;
  auto* figure1 = app.add_subcommand("figure1", "compare relative-entropy continuity bounds on random triples");
  auto* verify = app.add_subcommand("verify", "run randomized property suites");
  auto* tightness = app.add_subcommand("tightness", "print the saturation table of the tight family");
  add_common(figure1, fig);
  add_common(verify, ver);
  add_common(tightness, tight);
  verify->add_option("--suite", ver.suite, "lidskii | theorem1 | conditional | relent | dmax | proof-lemmas | all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (figure1->parsed()) {
      finish_config(fig);
      return run_figure1(fig);
    }
    if (verify->parsed()) {
      finish_config(ver);
      return run_verify(ver, verify->count("--dim") > 0);
    }
    finish_config(tight);
    return run_tightness(tight);
  } catch (const qentropy::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
}
