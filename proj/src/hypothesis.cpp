#include "pickaudit/hypothesis.hpp"

#include <cmath>
#include <vector>

#include "pickaudit/errors.hpp"
#include "pickaudit/normal.hpp"
#include "pickaudit/sampling.hpp"
#include "pickaudit/student_t.hpp"

namespace pickaudit {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + ": non-finite value");
}

}  // namespace

double sample_mean(const ImprovementSample& sample) {
  if (sample.values.empty()) throw DomainError("sample_mean: empty sample");
  double sum = 0.0;
  for (double v : sample.values) sum += v;
  return sum / static_cast<double>(sample.size());
}

double sample_variance(const ImprovementSample& sample) {
  const std::size_t n = sample.size();
  if (n < 2) throw DegenerateInputError("sample_variance: need at least two values");
  const double mu = sample_mean(sample);
  double ss = 0.0;
  for (double v : sample.values) {
    const double d = v - mu;
    ss += d * d;
  }
  return ss / static_cast<double>(n - 1);
}

namespace {

double max_abs_value(const ImprovementSample& sample) {
  double max_abs = 0.0;
  for (double v : sample.values) max_abs = std::max(max_abs, std::fabs(v));
  return max_abs;
}

// Variance is "numerically zero" when the spread is within a few rounding
// errors of the values' magnitude, e.g. a constant sample whose mean did
// not round exactly back onto the constant.
bool variance_is_degenerate(double variance, double max_abs) {
  const double floor_sd = 64.0 * 2.220446049250313e-16 * std::max(max_abs, 1e-300);
  return variance <= floor_sd * floor_sd;
}

}  // namespace

TestOutcome standard_p(double mu_hat, std::int64_t n_publish) {
  if (n_publish < 1) throw DomainError("standard_p: n_publish must be >= 1");
  require_finite(mu_hat, "standard_p");
  const double stat = mu_hat * std::sqrt(static_cast<double>(n_publish));
  TestOutcome out;
  out.statistic = stat;
  out.p_value = Probability::checked(normal_survival(stat));
  out.kind = TestKind::standard_z;
  out.params.n_publish = n_publish;
  return out;
}

TestOutcome gap_p(double mu_hat, std::int64_t n_publish, double mu_gap) {
  if (!(mu_gap >= 0.0) || !std::isfinite(mu_gap)) {
    throw DomainError("gap_p: mu_gap must be >= 0");
  }
  TestOutcome out = standard_p(mu_hat - mu_gap, n_publish);
  out.kind = TestKind::gap_z;
  out.params.mu_gap = mu_gap;
  return out;
}

TestOutcome conservative_p(double mu_hat, std::int64_t n_publish, std::int64_t n_all,
                           std::int64_t draws, RngSeed seed) {
  if (n_publish < 1 || n_publish > n_all) {
    throw DomainError("conservative_p: need 1 <= n_publish <= n_all");
  }
  if (draws < 1) throw DomainError("conservative_p: draws must be >= 1");
  require_finite(mu_hat, "conservative_p");

  const auto n = static_cast<std::size_t>(n_all);
  const auto k = static_cast<std::size_t>(n_publish);
  // Replicates are generated in fixed-size chunks so the batch kernels get
  // long runs; replicate r always uses the stream derived from (seed, r),
  // independent of chunking.
  const std::size_t chunk = std::max<std::size_t>(1, 16384 / n);
  std::vector<double> buf(chunk * n);
  std::int64_t hits = 0;
  std::int64_t r = 0;
  while (r < draws) {
    const std::size_t m = static_cast<std::size_t>(
        std::min<std::int64_t>(static_cast<std::int64_t>(chunk), draws - r));
    for (std::size_t j = 0; j < m; ++j) {
      RngStream stream(derive_seed(seed, static_cast<std::uint64_t>(r) + j));
      for (std::size_t i = 0; i < n; ++i) buf[j * n + i] = stream.next_uniform();
    }
    std::span<double> filled(buf.data(), m * n);
    normal_inv_survival_batch(filled, filled);
    for (std::size_t j = 0; j < m; ++j) {
      if (top_k_mean(filled.subspan(j * n, n), k) >= mu_hat) ++hits;
    }
    r += static_cast<std::int64_t>(m);
  }

  const double est = static_cast<double>(hits) / static_cast<double>(draws);
  TestOutcome out;
  out.statistic = mu_hat;
  out.p_value = Probability::checked(est);
  out.kind = TestKind::conservative;
  out.params.n_publish = n_publish;
  out.params.draws = draws;
  out.params.seed = seed;
  out.monte_carlo = MonteCarloEstimate{
      Probability::checked(est),
      std::sqrt(est * (1.0 - est) / static_cast<double>(draws)),
      draws,
      seed,
  };
  return out;
}

TestOutcome inspector_p(double mu_pub, double mu_insp, std::int64_t n_publish,
                        std::int64_t n_inspect) {
  if (n_publish < 1 || n_inspect < 1) {
    throw DomainError("inspector_p: counts must be >= 1");
  }
  require_finite(mu_pub, "inspector_p");
  require_finite(mu_insp, "inspector_p");
  const double z = (mu_pub - mu_insp) /
                   std::sqrt(1.0 / static_cast<double>(n_publish) +
                             1.0 / static_cast<double>(n_inspect));
  TestOutcome out;
  out.statistic = z;
  out.p_value = Probability::checked(normal_survival(z));
  out.kind = TestKind::inspector_z;
  out.params.n_publish = n_publish;
  out.params.n_inspect = n_inspect;
  return out;
}

TestOutcome one_sample_t_p(const ImprovementSample& values, double mu_gap) {
  if (!(mu_gap >= 0.0) || !std::isfinite(mu_gap)) {
    throw DomainError("one_sample_t_p: mu_gap must be >= 0");
  }
  const std::size_t n = values.size();
  if (n < 2) throw DegenerateInputError("one_sample_t_p: need at least two values");
  const double var = sample_variance(values);
  if (variance_is_degenerate(var, max_abs_value(values))) {
    throw DegenerateInputError("one_sample_t_p: zero sample variance");
  }
  const double mu = sample_mean(values);
  const double stat =
      std::sqrt(static_cast<double>(n)) * (mu - mu_gap) / std::sqrt(var);
  TestOutcome out;
  out.statistic = stat;
  out.p_value = Probability::checked(t_survival(stat, static_cast<int>(n) - 1));
  out.kind = TestKind::one_sample_t;
  out.params.n_publish = static_cast<std::int64_t>(n);
  out.params.mu_gap = mu_gap;
  return out;
}

TestOutcome two_sample_t_p(const ImprovementSample& pub, const ImprovementSample& insp) {
  const std::size_t np = pub.size();
  const std::size_t ni = insp.size();
  if (np < 2 || ni < 2) {
    throw DegenerateInputError("two_sample_t_p: each sample needs at least two values");
  }
  const double var_p = sample_variance(pub);
  const double var_i = sample_variance(insp);
  const double dof = static_cast<double>(np + ni - 2);
  const double pooled_var =
      ((static_cast<double>(np) - 1.0) * var_p + (static_cast<double>(ni) - 1.0) * var_i) /
      dof;
  if (variance_is_degenerate(pooled_var, std::max(max_abs_value(pub), max_abs_value(insp)))) {
    throw DegenerateInputError("two_sample_t_p: zero pooled variance");
  }
  const double stat =
      (sample_mean(pub) - sample_mean(insp)) /
      (std::sqrt(pooled_var) * std::sqrt(1.0 / static_cast<double>(np) +
                                         1.0 / static_cast<double>(ni)));
  TestOutcome out;
  out.statistic = stat;
  out.p_value = Probability::checked(t_survival(stat, static_cast<int>(np + ni) - 2));
  out.kind = TestKind::two_sample_t;
  out.params.n_publish = static_cast<std::int64_t>(np);
  out.params.n_inspect = static_cast<std::int64_t>(ni);
  return out;
}

bool decide(const TestOutcome& outcome, Probability level) {
  return outcome.p_value.value() <= level.value();
}

}  // namespace pickaudit
