#include "pickaudit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pickaudit/errors.hpp"
#include "pickaudit/normal.hpp"

namespace pickaudit {

void fill_standard_normal(RngStream& stream, std::span<double> out) {
  for (double& u : out) u = stream.next_uniform();
  normal_inv_survival_batch(out, out);
}

std::vector<double> sample_normal(std::size_t n, double mean, double sd, RngSeed seed) {
  if (n < 1) throw DomainError("sample_normal: n must be >= 1");
  if (!(sd > 0.0) || !std::isfinite(sd)) throw DomainError("sample_normal: sd must be positive");
  if (!std::isfinite(mean)) throw DomainError("sample_normal: non-finite mean");
  std::vector<double> out(n);
  RngStream stream(seed);
  fill_standard_normal(stream, out);
  for (double& z : out) z = mean + sd * z;
  return out;
}

double top_k_mean(std::span<double> scratch, std::size_t k) {
  const std::size_t n = scratch.size();
  if (k < 1 || k > n) throw DomainError("top_k_mean: k out of range");
  if (k < n) {
    std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end(),
                     std::greater<>());
    std::sort(scratch.begin(), scratch.begin() + k, std::greater<>());
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += scratch[i];
    return sum / static_cast<double>(k);
  }
  double sum = 0.0;
  for (double v : scratch) sum += v;
  return sum / static_cast<double>(n);
}

double sample_top_k_mean(std::size_t n_total, std::size_t k, RngSeed seed) {
  if (n_total < 1) throw DomainError("sample_top_k_mean: n_total must be >= 1");
  if (k < 1 || k > n_total) throw DomainError("sample_top_k_mean: k out of range");
  std::vector<double> buf(n_total);
  RngStream stream(seed);
  fill_standard_normal(stream, buf);
  return top_k_mean(buf, k);
}

}  // namespace pickaudit
