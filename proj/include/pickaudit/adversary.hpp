#pragma once

#include <optional>
#include <vector>

#include "pickaudit/rng.hpp"

namespace pickaudit {

// Per-dataset improvement values, optionally with a known standard
// deviation. Non-empty, all values finite, known_sd > 0 when present.
struct ImprovementSample {
  std::vector<double> values;
  std::optional<double> known_sd;

  static ImprovementSample checked(std::vector<double> values,
                                   std::optional<double> known_sd = std::nullopt);
  std::size_t size() const { return values.size(); }
};

// How the reporter chooses which results to publish: the honest uniform
// subset, or the k largest values.
struct ReporterStrategy {
  enum class Kind { unbiased, top_k };
  Kind kind = Kind::top_k;
  RngSeed seed{};  // used by the unbiased strategy only

  static ReporterStrategy top_k() { return {Kind::top_k, RngSeed{}}; }
  static ReporterStrategy unbiased(RngSeed seed) { return {Kind::unbiased, seed}; }
};

// Indices the reporter would publish. top_k: positions of the n_publish
// largest values, ordered by value descending, ties broken by lower
// original index. unbiased: a uniform subset without replacement,
// deterministic given the strategy seed.
std::vector<std::size_t> select_indices(const ImprovementSample& pool,
                                        std::size_t n_publish,
                                        const ReporterStrategy& strategy);

// Publishes n_publish of the pool's values under the given strategy (the
// values at select_indices). known_sd carries through.
ImprovementSample select(const ImprovementSample& pool, std::size_t n_publish,
                         const ReporterStrategy& strategy);

// Arithmetic mean of the published values.
double publish_mean(const ImprovementSample& selection);

}  // namespace pickaudit
