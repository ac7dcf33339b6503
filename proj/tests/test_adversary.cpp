#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pickaudit/adversary.hpp"
#include "pickaudit/errors.hpp"
#include "pickaudit/sampling.hpp"
#include "support/oracles.hpp"

using namespace pickaudit;
using namespace pickaudit::test;

TEST_CASE("top-k selection returns the largest values in descending order") {
  const auto pool = ImprovementSample::checked({0.1, -0.5, 2.0, 1.0});
  const auto sel = select(pool, 2, ReporterStrategy::top_k());
  CHECK(sel.values == std::vector<double>{2.0, 1.0});
}

TEST_CASE("selecting everything returns the whole pool under either strategy") {
  const auto pool = ImprovementSample::checked({0.3, -0.1, 0.7});
  for (const auto& strategy :
       {ReporterStrategy::top_k(), ReporterStrategy::unbiased(RngSeed{5})}) {
    auto sel = select(pool, 3, strategy);
    std::sort(sel.values.begin(), sel.values.end());
    CHECK(sel.values == std::vector<double>{-0.1, 0.3, 0.7});
  }
}

TEST_CASE("ties break toward the lower original index") {
  const auto pool = ImprovementSample::checked({1.0, 2.0, 2.0, 0.5});
  const auto idx = select_indices(pool, 2, ReporterStrategy::top_k());
  CHECK(idx == std::vector<std::size_t>{1, 2});
}

TEST_CASE("known_sd carries through selection") {
  const auto pool = ImprovementSample::checked({1.0, 2.0}, 0.25);
  const auto sel = select(pool, 1, ReporterStrategy::top_k());
  REQUIRE(sel.known_sd.has_value());
  CHECK(*sel.known_sd == 0.25);
}

TEST_CASE("selection argument validation") {
  const auto pool = ImprovementSample::checked({1.0, 2.0});
  CHECK_THROWS_AS(select(pool, 0, ReporterStrategy::top_k()), DomainError);
  CHECK_THROWS_AS(select(pool, 3, ReporterStrategy::top_k()), DomainError);
  CHECK_THROWS_AS(ImprovementSample::checked({}), DomainError);
  CHECK_THROWS_AS(ImprovementSample::checked({1.0, std::nan("")}), DomainError);
  CHECK_THROWS_AS(ImprovementSample::checked({1.0}, -1.0), DomainError);
}

TEST_CASE("publish_mean is the arithmetic mean") {
  CHECK(publish_mean(ImprovementSample::checked({1.0})) == 1.0);
  CHECK(publish_mean(ImprovementSample::checked({-0.7, 0.7})) == 0.0);
  CHECK(publish_mean(ImprovementSample::checked({0.1, 0.2, 0.3})) ==
        doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("top-k maximizes the published mean over all subsets") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{8, 3}, {11, 5}, {12, 6}}) {
    const auto pool = ImprovementSample::checked(sample_normal(
        static_cast<std::size_t>(n), 0.0, 1.0, RngSeed{static_cast<std::uint64_t>(900 + n)}));
    const double top_mean = publish_mean(select(pool, k, ReporterStrategy::top_k()));
    // Exhaustive enumeration of all size-k subsets.
    double best = -1e300;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) sum += pool.values[static_cast<std::size_t>(i)];
      }
      best = std::max(best, sum / k);
    }
    CHECK(top_mean == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("unbiased selection is exchangeable") {
  const auto pool = ImprovementSample::checked({0.0, 1.0, 2.0, 3.0, 4.0, 5.0});
  const int trials = 100000;
  std::vector<int> picked(6, 0);
  for (int t = 0; t < trials; ++t) {
    const auto idx =
        select_indices(pool, 3, ReporterStrategy::unbiased(derive_seed(RngSeed{11}, t)));
    for (std::size_t i : idx) ++picked[i];
  }
  const double band = binomial_band(0.5, trials, 4.0);
  for (int i = 0; i < 6; ++i) {
    CHECK(std::fabs(static_cast<double>(picked[i]) / trials - 0.5) < band);
  }
}

TEST_CASE("a huge top-decile selection matches the truncated-normal mean") {
  const auto pool =
      ImprovementSample::checked(sample_normal(100000, 0.0, 1.0, RngSeed{314159}));
  const double sel_mean = publish_mean(select(pool, 10000, ReporterStrategy::top_k()));
  // density(inv_survival(0.1)) / 0.1, frozen from the oracle
  CHECK(std::fabs(sel_mean - 1.7549833193248681) < 0.02);
}
