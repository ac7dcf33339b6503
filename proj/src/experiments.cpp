#include "pickaudit/experiments.hpp"

#include <cmath>

#include "pickaudit/errors.hpp"
#include "pickaudit/hypothesis.hpp"
#include "pickaudit/sampling.hpp"

namespace pickaudit {

namespace {

// Per-trial stream channels. Every trial owns decorrelated substreams, so
// trials may be evaluated in any order and reproduce the same counts.
enum Channel : std::uint64_t {
  kPoolChannel = 0,
  kSelectionChannel = 1,
  kInspectorChannel = 2,
  kConservativeChannel = 3,
};

RngSeed trial_channel(const RngSeed& seed, std::int64_t trial, Channel channel) {
  return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(trial)), channel);
}

double draw_sd(const SimulationConfig& config) {
  return config.variance_mode == VarianceMode::known_unit ? 1.0 : config.unknown_sd;
}

ImprovementSample draw_sample(std::int64_t n, const SimulationConfig& config, RngSeed seed) {
  return ImprovementSample{sample_normal(static_cast<std::size_t>(n), config.mu,
                                         draw_sd(config), seed),
                           std::nullopt};
}

ReporterStrategy trial_strategy(const SimulationConfig& config, std::int64_t trial) {
  if (config.strategy == ReporterStrategy::Kind::top_k) return ReporterStrategy::top_k();
  return ReporterStrategy::unbiased(trial_channel(config.seed, trial, kSelectionChannel));
}

}  // namespace

void SimulationConfig::validate() const {
  if (n_all < 1 || n_publish < 1) throw DomainError("config: counts must be >= 1");
  if (n_publish > n_all) throw DomainError("config: n_publish must be <= n_all");
  if (n_inspect < 1) throw DomainError("config: n_inspect must be >= 1");
  if (trials < 1) throw DomainError("config: trials must be >= 1");
  if (mc_draws < 1) throw DomainError("config: mc_draws must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("config: alpha must be in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("config: beta must be in (0, 1)");
  if (!(mu_gap >= 0.0)) throw DomainError("config: mu_gap must be >= 0");
  if (!std::isfinite(mu)) throw DomainError("config: non-finite mu");
  if (variance_mode == VarianceMode::unknown && !(unknown_sd > 0.0)) {
    throw DomainError("config: unknown_sd must be positive");
  }
}

double LabeledRate::std_error() const {
  if (total <= 0) return 0.0;
  const double r = rate();
  return std::sqrt(r * (1.0 - r) / static_cast<double>(total));
}

const LabeledRate& SimulationResult::rate(std::string_view label) const {
  for (const auto& r : rates) {
    if (r.label == label) return r;
  }
  throw DomainError("SimulationResult: no rate labeled " + std::string(label));
}

double SimulationResult::value(std::string_view label) const {
  for (const auto& v : values) {
    if (v.first == label) return v.second;
  }
  throw DomainError("SimulationResult: no value labeled " + std::string(label));
}

SimulationResult run_false_claim(const SimulationConfig& config) {
  config.validate();
  if (config.strategy != ReporterStrategy::Kind::top_k) {
    throw DomainError("run_false_claim: reporter strategy must be top_k");
  }
  const Probability alpha = Probability::checked_open(config.alpha);

  std::int64_t significant = 0;
  for (std::int64_t t = 0; t < config.trials; ++t) {
    const ImprovementSample pool =
        draw_sample(config.n_all, config, trial_channel(config.seed, t, kPoolChannel));
    const ImprovementSample sel =
        select(pool, static_cast<std::size_t>(config.n_publish), ReporterStrategy::top_k());
    const TestOutcome outcome =
        config.variance_mode == VarianceMode::known_unit
            ? standard_p(publish_mean(sel), config.n_publish)
            : one_sample_t_p(sel, 0.0);
    if (decide(outcome, alpha)) ++significant;
  }

  SimulationResult result;
  result.config = config;
  result.rates.push_back({"significant", significant, config.trials});
  return result;
}

std::vector<SimulationResult> run_power(const SimulationConfig& config,
                                        const std::vector<double>& mu_grid) {
  config.validate();
  if (config.strategy != ReporterStrategy::Kind::unbiased) {
    throw DomainError("run_power: reporter strategy must be unbiased");
  }
  if (mu_grid.empty()) throw DomainError("run_power: empty mu grid");
  const Probability alpha = Probability::checked_open(config.alpha);
  const bool known = config.variance_mode == VarianceMode::known_unit;

  std::vector<SimulationResult> results;
  results.reserve(mu_grid.size());
  for (std::size_t g = 0; g < mu_grid.size(); ++g) {
    SimulationConfig point = config;
    point.mu = mu_grid[g];
    std::int64_t std_hits = 0;
    std::int64_t con_hits = 0;
    std::int64_t gap_hits = 0;
    for (std::int64_t t = 0; t < point.trials; ++t) {
      // Offset the trial index per grid point so each curve point gets
      // independent streams while the sweep stays a function of the seed.
      const std::int64_t trial = t + static_cast<std::int64_t>(g) * point.trials;
      const ImprovementSample vals =
          draw_sample(point.n_publish, point, trial_channel(point.seed, trial, kPoolChannel));
      const double mu_hat = sample_mean(vals);
      if (known) {
        if (decide(standard_p(mu_hat, point.n_publish), alpha)) ++std_hits;
        if (decide(conservative_p(mu_hat, point.n_publish, point.n_all, point.mc_draws,
                                  trial_channel(point.seed, trial, kConservativeChannel)),
                   alpha)) {
          ++con_hits;
        }
        if (decide(gap_p(mu_hat, point.n_publish, point.mu_gap), alpha)) ++gap_hits;
      } else {
        if (decide(one_sample_t_p(vals, 0.0), alpha)) ++std_hits;
        if (decide(one_sample_t_p(vals, point.mu_gap), alpha)) ++gap_hits;
      }
    }
    SimulationResult result;
    result.config = point;
    result.rates.push_back({"standard", std_hits, point.trials});
    if (known) result.rates.push_back({"conservative", con_hits, point.trials});
    result.rates.push_back({"gap", gap_hits, point.trials});
    results.push_back(std::move(result));
  }
  return results;
}

SimulationResult run_inspection(const SimulationConfig& config) {
  config.validate();
  const Probability alpha = Probability::checked_open(config.alpha);
  const Probability beta = Probability::checked_open(config.beta);
  const bool known = config.variance_mode == VarianceMode::known_unit;

  std::int64_t significant = 0;
  std::int64_t detected_given_significant = 0;
  std::int64_t detected = 0;
  for (std::int64_t t = 0; t < config.trials; ++t) {
    const ImprovementSample pool =
        draw_sample(config.n_all, config, trial_channel(config.seed, t, kPoolChannel));
    const ImprovementSample sel = select(pool, static_cast<std::size_t>(config.n_publish),
                                         trial_strategy(config, t));
    const TestOutcome reporter = known
                                     ? gap_p(publish_mean(sel), config.n_publish, config.mu_gap)
                                     : one_sample_t_p(sel, config.mu_gap);
    const bool is_significant = decide(reporter, alpha);

    const ImprovementSample insp =
        draw_sample(config.n_inspect, config, trial_channel(config.seed, t, kInspectorChannel));
    const TestOutcome inspector =
        known ? inspector_p(publish_mean(sel), publish_mean(insp), config.n_publish,
                            config.n_inspect)
              : two_sample_t_p(sel, insp);
    const bool is_detected = decide(inspector, beta);

    if (is_significant) {
      ++significant;
      if (is_detected) ++detected_given_significant;
    }
    if (is_detected) ++detected;
  }

  SimulationResult result;
  result.config = config;
  result.rates.push_back({"significant", significant, config.trials});
  result.rates.push_back({"detection_conditional", detected_given_significant, significant});
  result.rates.push_back({"detection_unconditional", detected, config.trials});
  return result;
}

SimulationResult run_real_data(const ImprovementSample& pool, const RealDataParams& params) {
  const std::int64_t n = static_cast<std::int64_t>(pool.size());
  if (params.n_publish < 1 || params.n_inspect < 1) {
    throw DomainError("run_real_data: counts must be >= 1");
  }
  if (params.resample_trials < 1) {
    throw DomainError("run_real_data: resample_trials must be >= 1");
  }
  const std::int64_t needed =
      params.exclude_published ? params.n_publish + params.n_inspect : params.n_inspect;
  if (needed > n || params.n_publish > n) {
    throw DomainError("run_real_data: pool too small for n_publish/n_inspect");
  }
  const Probability beta = Probability::checked_open(params.beta);
  const Probability alpha = Probability::checked_open(params.alpha);

  const std::vector<std::size_t> top_idx = select_indices(
      pool, static_cast<std::size_t>(params.n_publish), ReporterStrategy::top_k());
  double top_sum = 0.0;
  for (std::size_t i : top_idx) top_sum += pool.values[i];
  const double mu_hat = top_sum / static_cast<double>(params.n_publish);
  const TestOutcome reporter = standard_p(mu_hat, params.n_publish);

  // Candidate indices for the inspector's resamples.
  std::vector<std::size_t> candidates;
  if (params.exclude_published) {
    std::vector<bool> published(pool.size(), false);
    for (std::size_t i : top_idx) published[i] = true;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!published[i]) candidates.push_back(i);
    }
  } else {
    candidates.resize(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) candidates[i] = i;
  }

  std::int64_t detected = 0;
  std::vector<std::size_t> scratch = candidates;
  for (std::int64_t t = 0; t < params.resample_trials; ++t) {
    RngStream stream(derive_seed(params.seed, static_cast<std::uint64_t>(t)));
    scratch = candidates;
    double sum = 0.0;
    for (std::int64_t i = 0; i < params.n_inspect; ++i) {
      const std::size_t j =
          static_cast<std::size_t>(i) +
          static_cast<std::size_t>(stream.next_below(scratch.size() - static_cast<std::size_t>(i)));
      std::swap(scratch[static_cast<std::size_t>(i)], scratch[j]);
      sum += pool.values[scratch[static_cast<std::size_t>(i)]];
    }
    const double mu_insp = sum / static_cast<double>(params.n_inspect);
    if (decide(inspector_p(mu_hat, mu_insp, params.n_publish, params.n_inspect), beta)) {
      ++detected;
    }
  }

  SimulationResult result;
  result.rates.push_back({"detection", detected, params.resample_trials});
  result.values.emplace_back("reporter_p", reporter.p_value.value());
  result.values.emplace_back("reporter_statistic", reporter.statistic);
  result.values.emplace_back("mu_hat_published", mu_hat);
  result.values.emplace_back("reporter_significant",
                             decide(reporter, alpha) ? 1.0 : 0.0);
  return result;
}

}  // namespace pickaudit
