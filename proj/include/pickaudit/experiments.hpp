#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pickaudit/adversary.hpp"
#include "pickaudit/rng.hpp"

namespace pickaudit {

enum class VarianceMode {
  known_unit,  // draws are N(mu, 1) and the z tests apply
  unknown,     // draws are N(mu, sd^2) and the t tests estimate the variance
};

// One simulation setup. Every randomized quantity in a run derives from
// `seed` and the trial index, so a run is a pure function of this struct.
struct SimulationConfig {
  std::int64_t n_all = 30;
  std::int64_t n_publish = 10;
  std::int64_t n_inspect = 10;
  double mu = 0.0;
  VarianceMode variance_mode = VarianceMode::known_unit;
  double unknown_sd = 1.0;  // draw sd under VarianceMode::unknown
  double alpha = 0.05;
  double beta = 0.05;
  double mu_gap = 0.0;
  std::int64_t trials = 1000;
  RngSeed seed{};
  ReporterStrategy::Kind strategy = ReporterStrategy::Kind::top_k;
  std::int64_t mc_draws = 2000;  // conservative-test replicates per trial

  void validate() const;  // throws DomainError on a broken invariant
};

// An empirical probability with its denominator, so std errors and
// conditional rates stay auditable. std_error = sqrt(rate (1-rate) / total).
struct LabeledRate {
  std::string label;
  std::int64_t count = 0;
  std::int64_t total = 0;
  double rate() const { return total > 0 ? static_cast<double>(count) / total : 0.0; }
  double std_error() const;
};

struct SimulationResult {
  SimulationConfig config;
  std::vector<LabeledRate> rates;
  std::vector<std::pair<std::string, double>> values;  // scalar outputs

  const LabeledRate& rate(std::string_view label) const;
  double value(std::string_view label) const;
};

// Cherry-picking simulation: per trial draw n_all values, publish the top
// n_publish, and test the published mean at level alpha (z test under
// known_unit, one-sample t under unknown). Rate "significant" is the
// fraction of trials the claim passes.
SimulationResult run_false_claim(const SimulationConfig& config);

// Statistical-power sweep under honest reporting: per trial draw n_publish
// values unbiasedly and evaluate the standard, conservative, and gap tests
// at level alpha (conservative is skipped under unknown variance). One
// result per mu in the grid.
std::vector<SimulationResult> run_power(const SimulationConfig& config,
                                        const std::vector<double>& mu_grid);

// Full reporter-vs-inspector game: the reporter selects under
// config.strategy and must pass the gap test at alpha; the inspector draws
// n_inspect fresh values and flags bias when the two-sample p <= beta.
// Rates: "significant", "detection_conditional" (among passing claims,
// the guarantee's conditioning), "detection_unconditional".
SimulationResult run_inspection(const SimulationConfig& config);

struct RealDataParams {
  std::int64_t n_publish = 5;
  std::int64_t n_inspect = 5;
  std::int64_t resample_trials = 1000;
  RngSeed seed{};
  double alpha = 0.05;
  double beta = 0.05;
  // Whether inspector resamples avoid the published indices.
  bool exclude_published = true;
};

// Real-data protocol on an ingested, unit-variance-normalized sample: the
// reporter publishes the top n_publish values; the inspector repeatedly
// resamples n_inspect values from the pool (without replacement, excluding
// the published ones by default) and runs the two-sample z test.
// Values: "reporter_p", "mu_hat_published"; rate: "detection".
SimulationResult run_real_data(const ImprovementSample& pool, const RealDataParams& params);

}  // namespace pickaudit
