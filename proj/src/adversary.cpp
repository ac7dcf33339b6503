#include "pickaudit/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pickaudit/errors.hpp"

namespace pickaudit {

ImprovementSample ImprovementSample::checked(std::vector<double> values,
                                             std::optional<double> known_sd) {
  if (values.empty()) throw DomainError("ImprovementSample: empty");
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("ImprovementSample: non-finite value");
  }
  if (known_sd && !(*known_sd > 0.0 && std::isfinite(*known_sd))) {
    throw DomainError("ImprovementSample: known_sd must be positive");
  }
  return ImprovementSample{std::move(values), known_sd};
}

std::vector<std::size_t> select_indices(const ImprovementSample& pool,
                                        std::size_t n_publish,
                                        const ReporterStrategy& strategy) {
  const std::size_t n = pool.size();
  if (n_publish < 1 || n_publish > n) throw DomainError("select: n_publish out of range");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});

  if (strategy.kind == ReporterStrategy::Kind::top_k) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return pool.values[a] > pool.values[b];
    });
  } else {
    // Partial Fisher-Yates: the first n_publish slots end up holding a
    // uniform subset without replacement.
    RngStream stream(strategy.seed);
    for (std::size_t i = 0; i < n_publish; ++i) {
      const std::size_t j = i + stream.next_below(n - i);
      std::swap(idx[i], idx[j]);
    }
  }

  idx.resize(n_publish);
  return idx;
}

ImprovementSample select(const ImprovementSample& pool, std::size_t n_publish,
                         const ReporterStrategy& strategy) {
  const std::vector<std::size_t> idx = select_indices(pool, n_publish, strategy);
  std::vector<double> chosen;
  chosen.reserve(n_publish);
  for (std::size_t i : idx) chosen.push_back(pool.values[i]);
  return ImprovementSample{std::move(chosen), pool.known_sd};
}

double publish_mean(const ImprovementSample& selection) {
  if (selection.values.empty()) throw DomainError("publish_mean: empty selection");
  double sum = 0.0;
  for (double v : selection.values) sum += v;
  return sum / static_cast<double>(selection.size());
}

}  // namespace pickaudit
