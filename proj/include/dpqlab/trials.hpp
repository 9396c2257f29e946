#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dpqlab/counters.hpp"
#include "dpqlab/distribution.hpp"
#include "dpqlab/rational.hpp"

namespace dpqlab::experiments {

struct TrialPlan {
    Algorithm algorithm = Algorithm::dual;
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;

    bool operator==(const TrialPlan&) const = default;
};

// Exact running totals for one metric. Arbitrary precision so that no trial
// count or key size can overflow them.
struct MetricTotals {
    BigInt sum = 0;
    BigInt sum_sq = 0;

    bool operator==(const MetricTotals&) const = default;
};

// Order-insensitive summary of a batch of trials. Because the totals are
// exact integers and every trial derives its stream from (master_seed, t)
// alone, the aggregate is bit-identical no matter how the trial set is split,
// scheduled, or merged.
struct TrialAggregate {
    TrialPlan plan;
    std::uint64_t count = 0;
    MetricTotals comparisons, exchanges, stages;

    const MetricTotals& totals(Metric m) const {
        switch (m) {
            case Metric::exchanges: return exchanges;
            case Metric::stages: return stages;
            default: return comparisons;
        }
    }

    bool operator==(const TrialAggregate&) const = default;
};

// Seed for trial t: the t-th splitmix64 output of the master seed.
std::uint64_t per_trial_seed(std::uint64_t master_seed, std::uint64_t t);

// Metrics the cost model covers for an algorithm (classic has no modeled
// exchange cost).
std::vector<Metric> supported_metrics(Algorithm a);

// Run trials [first, last) of the plan: each trial seeds its own source,
// draws a fresh uniform permutation, sorts it, and adds the counters to the
// totals.
TrialAggregate run_trial_range(const TrialPlan& plan, std::uint64_t first, std::uint64_t last);

// Reference loop over all trials, single-threaded.
TrialAggregate run_trials_serial(const TrialPlan& plan);

// Same contract, OpenMP-parallel over trials when available. Produces the
// exact same aggregate as the serial reference.
TrialAggregate run_trials(const TrialPlan& plan);

// Combine two partial aggregates of the same plan (associative, commutative).
TrialAggregate merge(const TrialAggregate& a, const TrialAggregate& b);

struct ComparisonReport {
    Metric metric = Metric::comparisons;
    Rational theory_mean;                    // from dp_expected, valid at every n
    std::optional<Rational> theory_variance; // closed form; dual comparisons only
    double empirical_mean = 0;
    double empirical_variance = 0;           // sample variance (count - 1 divisor)
    double std_error = 0;                    // sqrt(empirical_variance / count)
    double z_score = 0;                      // (empirical mean - theory mean) / std_error
};

// Needs count >= 2 (std::invalid_argument) and a modeled (algorithm, metric)
// pair (std::domain_error otherwise).
ComparisonReport compare(const TrialAggregate& agg, Metric metric);

// Observed frequency table of one metric over the plan's trials (same
// per-trial seeding as run_trials).
std::map<std::uint64_t, std::uint64_t> empirical_distribution(const TrialPlan& plan,
                                                              Metric metric);

// Total variation distance between observed frequencies and an exact law.
double distribution_distance(const std::map<std::uint64_t, std::uint64_t>& observed,
                             const oracle::CostDistribution& exact);

}  // namespace dpqlab::experiments
