#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pickaudit/probability.hpp"

namespace pickaudit {

// The guarantees quantified by the bounds module, one per result about the
// reporter/inspector game.
enum class TheoremId {
  t1_single_dataset,  // false-claim probability when one result is picked
  t2_cherry_pick,     // sample sizes that make cherry-picking succeed
  t3_power_loss,      // mean below which the conservative test stays silent
  t4_min_gap,         // gap that defeats any selection, pre-publication
  t5_inspector,       // gap that guarantees post-publication detection
};

// Evaluation record for one bound: the computed threshold (absent when the
// stated preconditions fail), and every input and intermediate quantity
// used, so sweeps over parameter grids stay auditable.
struct BoundReport {
  TheoremId theorem_id;
  std::optional<double> threshold;
  bool preconditions_met = false;
  std::vector<std::pair<std::string, double>> detail;
};

// Probability that a reporter picking the single best of n_all null results
// reaches significance at level alpha: 1 - (1 - alpha)^n_all.
Probability t1_false_claim_prob(double alpha, std::int64_t n_all);

// Checks the sample-size conditions under which cherry-picking n_publish of
// n_all null results succeeds with probability at least delta:
// n_publish/n_all <= 1/2 - epsilon and
// n_publish >= max(log(1/delta)/(2 eps^2), 8 log(1/alpha)/eps^2).
BoundReport t2_preconditions(double alpha, double delta, double epsilon,
                             std::int64_t n_publish, std::int64_t n_all);

// Mean threshold inv_survival(n_publish/(n_all+1)) - inv_survival(delta):
// below it the conservative test rejects with probability at most delta.
// Preconditions (both counts >= 2, n_publish < 2 n_all) are reported, not
// silently computed over.
BoundReport t3_power_threshold(double delta, std::int64_t n_publish, std::int64_t n_all);

// Minimum gap defeating any selection out of n_all null results:
// 3 sqrt(2 log(1/delta)) + 7 sqrt(2 log(e n_all/n_publish)) + pi/(2 n_publish).
double t4_min_gap(double delta, std::int64_t n_publish, std::int64_t n_all);
BoundReport t4_min_gap_report(double delta, std::int64_t n_publish, std::int64_t n_all);

// Minimum gap guaranteeing the inspector detects a passing claim:
// (inv_survival(beta) + sqrt(1/2) inv_survival(alpha)
//  + sqrt(1/2) inv_survival(delta)) / sqrt(n_publish).
double t5_min_gap(double alpha, double beta, double delta, std::int64_t n_publish);
BoundReport t5_min_gap_report(double alpha, double beta, double delta,
                              std::int64_t n_publish);

}  // namespace pickaudit
