#include "pickaudit/bounds.hpp"

#include <cmath>

#include "pickaudit/errors.hpp"
#include "pickaudit/normal.hpp"

namespace pickaudit {

namespace {

void require_open_prob(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string(what) + ": must be in (0, 1)");
  }
}

}  // namespace

Probability t1_false_claim_prob(double alpha, std::int64_t n_all) {
  require_open_prob(alpha, "t1_false_claim_prob: alpha");
  if (n_all < 1) throw DomainError("t1_false_claim_prob: n_all must be >= 1");
  // 1 - (1-a)^n evaluated via expm1/log1p so tiny alpha keeps full precision.
  const double v = -std::expm1(static_cast<double>(n_all) * std::log1p(-alpha));
  return Probability::checked(v);
}

BoundReport t2_preconditions(double alpha, double delta, double epsilon,
                             std::int64_t n_publish, std::int64_t n_all) {
  require_open_prob(alpha, "t2_preconditions: alpha");
  require_open_prob(delta, "t2_preconditions: delta");
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw DomainError("t2_preconditions: epsilon must be in (0, 1/2)");
  }
  if (n_publish < 1 || n_all < 1) throw DomainError("t2_preconditions: counts must be >= 1");

  const double ratio = static_cast<double>(n_publish) / static_cast<double>(n_all);
  const double ratio_cap = 0.5 - epsilon;
  const double n_min_delta = std::log(1.0 / delta) / (2.0 * epsilon * epsilon);
  const double n_min_alpha = 8.0 * std::log(1.0 / alpha) / (epsilon * epsilon);
  const double n_min = std::max(n_min_delta, n_min_alpha);
  const bool met = ratio <= ratio_cap && static_cast<double>(n_publish) >= n_min;

  BoundReport report;
  report.theorem_id = TheoremId::t2_cherry_pick;
  report.preconditions_met = met;
  if (met) report.threshold = delta;  // claimed success probability, as stated
  report.detail = {
      {"alpha", alpha},
      {"delta", delta},
      {"epsilon", epsilon},
      {"n_publish", static_cast<double>(n_publish)},
      {"n_all", static_cast<double>(n_all)},
      {"publish_ratio", ratio},
      {"publish_ratio_cap", ratio_cap},
      {"n_publish_min_from_delta", n_min_delta},
      {"n_publish_min_from_alpha", n_min_alpha},
      {"n_publish_min", n_min},
      // The guarantee is printed as "at least delta" in its source, not the
      // usual 1 - delta; recorded as stated rather than corrected.
      {"claimed_success_probability", delta},
  };
  return report;
}

BoundReport t3_power_threshold(double delta, std::int64_t n_publish, std::int64_t n_all) {
  require_open_prob(delta, "t3_power_threshold: delta");
  if (n_publish < 1 || n_all < 1) throw DomainError("t3_power_threshold: counts must be >= 1");

  const bool met = n_publish >= 2 && n_all >= 2 && n_publish < 2 * n_all;
  const double r = static_cast<double>(n_publish) / (static_cast<double>(n_all) + 1.0);

  BoundReport report;
  report.theorem_id = TheoremId::t3_power_loss;
  report.preconditions_met = met;
  report.detail = {
      {"delta", delta},
      {"n_publish", static_cast<double>(n_publish)},
      {"n_all", static_cast<double>(n_all)},
      {"order_stat_quantile", r},
  };
  if (met) {
    const double threshold = normal_inv_survival(r) - normal_inv_survival(delta);
    report.threshold = threshold;
    report.detail.emplace_back("inv_survival_r", normal_inv_survival(r));
    report.detail.emplace_back("inv_survival_delta", normal_inv_survival(delta));
  }
  return report;
}

double t4_min_gap(double delta, std::int64_t n_publish, std::int64_t n_all) {
  require_open_prob(delta, "t4_min_gap: delta");
  if (n_publish < 1) throw DomainError("t4_min_gap: n_publish must be >= 1");
  if (n_publish >= n_all) throw DomainError("t4_min_gap: requires n_publish < n_all");
  const double np = static_cast<double>(n_publish);
  const double na = static_cast<double>(n_all);
  return 3.0 * std::sqrt(2.0 * std::log(1.0 / delta)) +
         7.0 * std::sqrt(2.0 * std::log(M_E * na / np)) + M_PI / (2.0 * np);
}

BoundReport t4_min_gap_report(double delta, std::int64_t n_publish, std::int64_t n_all) {
  BoundReport report;
  report.theorem_id = TheoremId::t4_min_gap;
  report.preconditions_met = true;
  report.threshold = t4_min_gap(delta, n_publish, n_all);
  report.detail = {
      {"delta", delta},
      {"n_publish", static_cast<double>(n_publish)},
      {"n_all", static_cast<double>(n_all)},
      {"confidence", 1.0 - delta},
  };
  return report;
}

double t5_min_gap(double alpha, double beta, double delta, std::int64_t n_publish) {
  require_open_prob(alpha, "t5_min_gap: alpha");
  require_open_prob(beta, "t5_min_gap: beta");
  require_open_prob(delta, "t5_min_gap: delta");
  if (n_publish < 1) throw DomainError("t5_min_gap: n_publish must be >= 1");
  const double root_half = std::sqrt(0.5);
  return (normal_inv_survival(beta) + root_half * normal_inv_survival(alpha) +
          root_half * normal_inv_survival(delta)) /
         std::sqrt(static_cast<double>(n_publish));
}

BoundReport t5_min_gap_report(double alpha, double beta, double delta,
                              std::int64_t n_publish) {
  BoundReport report;
  report.theorem_id = TheoremId::t5_inspector;
  report.preconditions_met = true;
  report.threshold = t5_min_gap(alpha, beta, delta, n_publish);
  report.detail = {
      {"alpha", alpha},
      {"beta", beta},
      {"delta", delta},
      {"n_publish", static_cast<double>(n_publish)},
      {"confidence", 1.0 - delta},
  };
  return report;
}

}  // namespace pickaudit
