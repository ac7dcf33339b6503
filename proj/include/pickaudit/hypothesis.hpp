#pragma once

#include <cstdint>
#include <optional>

#include "pickaudit/adversary.hpp"
#include "pickaudit/probability.hpp"
#include "pickaudit/rng.hpp"

namespace pickaudit {

enum class TestKind {
  standard_z,
  gap_z,
  conservative,
  inspector_z,
  one_sample_t,
  two_sample_t,
};

// Monte-Carlo estimate of a probability, with its binomial standard error
// sqrt(estimate * (1 - estimate) / draws).
struct MonteCarloEstimate {
  Probability estimate;
  double std_error = 0.0;
  std::int64_t draws = 0;
  RngSeed seed{};
};

struct TestParams {
  std::int64_t n_publish = 0;
  std::optional<std::int64_t> n_inspect;
  std::optional<double> mu_gap;
  std::optional<std::int64_t> draws;
  std::optional<RngSeed> seed;
};

struct TestOutcome {
  double statistic = 0.0;
  Probability p_value;
  TestKind kind = TestKind::standard_z;
  TestParams params;
  std::optional<MonteCarloEstimate> monte_carlo;  // conservative test only
};

// One-sided test of mean 0 against mean > 0 for a published mean of
// n_publish unit-variance values: statistic mu_hat * sqrt(n_publish),
// p = normal_survival(statistic).
TestOutcome standard_p(double mu_hat, std::int64_t n_publish);

// Same test against the shifted null mean mu_gap >= 0: equals
// standard_p(mu_hat - mu_gap, n_publish).
TestOutcome gap_p(double mu_hat, std::int64_t n_publish, double mu_gap);

// Worst-case selection test: the p-value is the survival function of the
// mean of the n_publish largest of n_all standard normals, estimated by
// `draws` seeded Monte-Carlo replicates (fraction of replicates whose
// top-k mean is >= mu_hat). Deterministic given the seed.
TestOutcome conservative_p(double mu_hat, std::int64_t n_publish, std::int64_t n_all,
                           std::int64_t draws, RngSeed seed);

// Two-sample z test of equal means between the published mean (n_publish
// values) and the inspector's mean (n_inspect values), unit variance:
// Z = (mu_pub - mu_insp) / sqrt(1/n_publish + 1/n_inspect), p = survival(Z).
TestOutcome inspector_p(double mu_pub, double mu_insp, std::int64_t n_publish,
                        std::int64_t n_inspect);

// One-sample t test against mean mu_gap with the unbiased sample variance
// (mean-centered); dof = n - 1. Throws DegenerateInputError for fewer than
// two values or (numerically) zero variance.
TestOutcome one_sample_t_p(const ImprovementSample& values, double mu_gap);

// Two-sample pooled-variance t test; dof = n_pub + n_insp - 2. The
// statistic divides by the pooled standard deviation (not the variance).
TestOutcome two_sample_t_p(const ImprovementSample& pub, const ImprovementSample& insp);

// Decision rule: significant iff p <= level (boundary inclusive).
bool decide(const TestOutcome& outcome, Probability level);

// Mean and unbiased (mean-centered) sample variance.
double sample_mean(const ImprovementSample& sample);
double sample_variance(const ImprovementSample& sample);

}  // namespace pickaudit
