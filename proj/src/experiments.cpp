#include "qentropy/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qentropy/bounds.hpp"
#include "qentropy/entropies.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/states.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qentropy {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::optional<Ensemble> parse_ensemble(std::string_view name) {
  if (name == "hilbert-schmidt") return Ensemble::hilbert_schmidt;
  if (name == "pure") return Ensemble::pure;
  if (name == "equal-marginal") return Ensemble::equal_marginal;
  return std::nullopt;
}

std::string_view ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::hilbert_schmidt: return "hilbert-schmidt";
    case Ensemble::pure: return "pure";
    case Ensemble::equal_marginal: return "equal-marginal";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw ValidationError("config: trials must be >= 1");
  if (dim < 2) throw ValidationError("config: dim must be >= 2");
  if (!(tolerance > 0.0)) throw ValidationError("config: tolerance must be > 0");
}

namespace {

// Smallest nontrivial factorization dim = a * b with a the smallest prime factor.
std::optional<BipartiteDims> factor(std::size_t dim) {
  for (std::size_t a = 2; a * a <= dim; ++a)
    if (dim % a == 0) return BipartiteDims{a, dim / a};
  return std::nullopt;
}

}  // namespace

TrialRecord figure1_trial(const ExperimentConfig& cfg, std::size_t index) {
  Rng rng = Rng::stream(cfg.seed, index);
  const std::size_t d = cfg.dim;

  auto sample_pair = [&]() -> std::pair<DensityMatrix, DensityMatrix> {
    switch (cfg.ensemble) {
      case Ensemble::hilbert_schmidt: {
        DensityMatrix a = random_mixed(d, rng);
        return {std::move(a), random_mixed(d, rng)};
      }
      case Ensemble::pure: {
        DensityMatrix a = random_pure(d, rng);
        return {std::move(a), random_pure(d, rng)};
      }
      case Ensemble::equal_marginal: {
        const auto dims = factor(d);
        if (!dims) throw ValidationError("equal-marginal ensemble needs a composite dimension");
        const double u = 1.0 - rng.uniform();  // (0, 1]
        BipartitePair p = random_equal_marginal_pair(dims->a, dims->b, u, rng);
        return {std::move(p.rho1), std::move(p.rho2)};
      }
    }
    throw ValidationError("unknown ensemble");
  };

  auto [rho1, rho2] = sample_pair();
  const DensityMatrix sigma = random_mixed(d, rng);

  const BoundEvaluation ours = relent_bound_fixed_second(rho1, rho2, sigma);
  if (!ours.applicable) throw NumericalFault("sampled sigma is not full rank");
  const BoundEvaluation gour = gour_bound(rho1, rho2, sigma);
  const double eps = trace_distance(rho1, rho2);

  TrialRecord r;
  r.trial_index = index;
  r.dim = d;
  r.epsilon = eps;
  r.lhs_actual = ours.lhs;
  r.bound_new = ours.rhs;
  r.gour_applicable = gour.applicable;
  if (gour.applicable) r.bound_gour = gour.rhs;
  r.lambda_min_sigma = sigma.lambda_min();
  r.bound_bluhm = bluhm_bound_fixed(eps, r.lambda_min_sigma);
  r.slack_new = ours.slack;
  for (double v : {r.bound_new, r.bound_bluhm, r.lhs_actual})
    if (!std::isfinite(v)) throw NumericalFault("non-finite bound value");
  return r;
}

Figure1Summary summarize(std::span<const TrialRecord> records, std::size_t faults, double tol) {
  Figure1Summary s;
  s.trials = records.size();
  s.faults = faults;
  std::size_t le_bluhm = 0;
  std::size_t le_gour = 0;
  for (const auto& r : records) {
    s.min_slack = std::min(s.min_slack, r.slack_new);
    if (r.bound_new <= r.bound_bluhm + tol) ++le_bluhm;
    if (r.gour_applicable && r.bound_gour) {
      ++s.gour_applicable;
      if (r.bound_new <= *r.bound_gour + tol) ++le_gour;
    }
  }
  if (!records.empty()) s.fraction_new_le_bluhm = static_cast<double>(le_bluhm) / static_cast<double>(records.size());
  if (s.gour_applicable > 0)
    s.fraction_new_le_gour = static_cast<double>(le_gour) / static_cast<double>(s.gour_applicable);
  return s;
}

bool Figure1Summary::all_pass(double tol) const {
  return faults == 0 && trials > 0 && min_slack >= -tol && fraction_new_le_bluhm == 1.0 &&
         (!fraction_new_le_gour || *fraction_new_le_gour == 1.0);
}

Figure1Result run_figure1(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<std::optional<TrialRecord>> slots(cfg.trials);
  std::vector<std::string> errors(cfg.trials);
  for_each_trial(cfg.trials, cfg.execution, [&](std::size_t i) {
    try {
      slots[i] = figure1_trial(cfg, i);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  Figure1Result out;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    if (slots[i]) {
      out.records.push_back(*slots[i]);
    } else {
      out.fault_messages.push_back("trial " + std::to_string(i) + ": " + errors[i]);
    }
  }
  out.summary = summarize(out.records, out.fault_messages.size(), cfg.tolerance);
  return out;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

void put_real(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  out << buf;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const TrialRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.trial_index << ',' << r.dim << ',';
    put_real(out, r.epsilon);
    out << ',';
    if (r.delta) put_real(out, *r.delta);
    out << ',';
    put_real(out, r.lhs_actual);
    out << ',';
    put_real(out, r.bound_new);
    out << ',';
    if (r.bound_gour) put_real(out, *r.bound_gour);
    out << ',' << (r.gour_applicable ? "true" : "false") << ',';
    put_real(out, r.bound_bluhm);
    out << ',';
    put_real(out, r.slack_new);
    out << ',';
    put_real(out, r.lambda_min_sigma);
    out << '\n';
  }
}

std::string format_csv(std::span<const TrialRecord> records) {
  std::ostringstream ss;
  write_csv(ss, records);
  return ss.str();
}

void emit_csv(std::span<const TrialRecord> records, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(f, records);
  f.flush();
  if (!f) throw std::runtime_error("write failed for " + path.string());
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

double parse_real(const std::string& s, std::size_t line_no) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size())
    throw ValidationError("csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
  return v;
}

std::size_t parse_index(const std::string& s, std::size_t line_no) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size())
    throw ValidationError("csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<TrialRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ValidationError("csv: unexpected header '" + line + "'");

  std::vector<TrialRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 11) throw ValidationError("csv line " + std::to_string(line_no) + ": expected 11 fields");
    TrialRecord r;
    r.trial_index = parse_index(f[0], line_no);
    r.dim = parse_index(f[1], line_no);
    r.epsilon = parse_real(f[2], line_no);
    if (!f[3].empty()) r.delta = parse_real(f[3], line_no);
    r.lhs_actual = parse_real(f[4], line_no);
    r.bound_new = parse_real(f[5], line_no);
    if (!f[6].empty()) r.bound_gour = parse_real(f[6], line_no);
    if (f[7] == "true") {
      r.gour_applicable = true;
    } else if (f[7] == "false") {
      r.gour_applicable = false;
    } else {
      throw ValidationError("csv line " + std::to_string(line_no) + ": bad boolean '" + f[7] + "'");
    }
    r.bound_bluhm = parse_real(f[8], line_no);
    r.slack_new = parse_real(f[9], line_no);
    r.lambda_min_sigma = parse_real(f[10], line_no);
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tightness

std::vector<TightnessRow> tightness_table(std::span<const std::size_t> dims, std::span<const double> epsilons) {
  std::vector<TightnessRow> rows;
  for (std::size_t d : dims)
    for (double eps : epsilons) {
      const auto [rho1, rho2] = tightness_pair(d, eps);
      const BoundEvaluation jh = theorem1_bound(rho1, rho2);
      const BoundEvaluation af = af_bound(rho1, rho2);
      rows.push_back({d, eps, jh.lhs, jh.rhs, af.rhs, jh.slack, af.slack});
    }
  return rows;
}

}  // namespace qentropy
