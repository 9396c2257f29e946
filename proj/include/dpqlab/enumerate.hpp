#pragma once

#include <cstdint>

#include "dpqlab/distribution.hpp"
#include "dpqlab/sort.hpp"

namespace dpqlab {

inline constexpr std::size_t kEnumerationCap = 7;

// Exact cost law obtained by running the real instrumented sort down every
// branch of its random choices, weighting each leaf by the product of its
// draw probabilities. Independent of the oracle's convolution route, so the
// two must agree; also independent of the concrete input arrangement (cost
// depends only on pivot ranks), which the overload below lets tests confirm.
//
// classic + exchanges is outside the cost model and throws std::domain_error;
// n past the cap throws std::length_error (the tree grows too fast).
oracle::CostDistribution enumerate_distribution(std::size_t n, Algorithm algorithm,
                                                Metric metric,
                                                std::size_t cap = kEnumerationCap);
oracle::CostDistribution enumerate_distribution(const KeyArray& input, Algorithm algorithm,
                                                Metric metric,
                                                std::size_t cap = kEnumerationCap);

}  // namespace dpqlab
