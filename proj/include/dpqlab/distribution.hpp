#pragma once

#include <cstdint>
#include <map>

#include "dpqlab/counters.hpp"
#include "dpqlab/rational.hpp"

namespace dpqlab::oracle {

// Exact law of one cost metric at size n: value -> probability. Probabilities
// are exact rationals in (0, 1] and sum to exactly 1; zero-probability values
// are never stored.
struct CostDistribution {
    std::size_t n = 0;
    Metric metric = Metric::comparisons;
    std::map<std::uint64_t, Rational> probs;

    bool operator==(const CostDistribution&) const = default;
};

// Same shape with double probabilities, for sizes past the exact cap.
struct FloatCostDistribution {
    std::size_t n = 0;
    Metric metric = Metric::comparisons;
    std::map<std::uint64_t, double> probs;
};

Rational probability_sum(const CostDistribution& d);
Rational mean_of(const CostDistribution& d);
Rational variance_of(const CostDistribution& d);
// E[X(X-1)], the second factorial moment.
Rational factorial_moment_of(const CostDistribution& d);

double mean_of(const FloatCostDistribution& d);
double variance_of(const FloatCostDistribution& d);

}  // namespace dpqlab::oracle
