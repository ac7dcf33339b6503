#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pickaudit/rng.hpp"

namespace pickaudit {

// Fills `out` with i.i.d. standard normal draws from `stream` by inverse
// transform through the batch inverse survival kernel, so sampling and the
// quantile function share one numeric code path.
void fill_standard_normal(RngStream& stream, std::span<double> out);

// n i.i.d. draws from N(mean, sd^2). Deterministic given the seed.
std::vector<double> sample_normal(std::size_t n, double mean, double sd, RngSeed seed);

// Mean of the k largest values in `scratch` (reordered in place). Summation
// runs over the selected values in descending order.
double top_k_mean(std::span<double> scratch, std::size_t k);

// Draws n_total standard normals and returns the mean of the k largest.
double sample_top_k_mean(std::size_t n_total, std::size_t k, RngSeed seed);

}  // namespace pickaudit
