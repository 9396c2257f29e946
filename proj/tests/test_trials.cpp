#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dpqlab/oracle.hpp"
#include "dpqlab/trials.hpp"

using namespace dpqlab;
using namespace dpqlab::experiments;

TEST_CASE("size-2 trials produce exactly known totals") {
    // Every dual-pivot run at n = 2 costs {1, 2, 1} whatever the seed.
    const TrialPlan plan{Algorithm::dual, 2, 500, 99};
    const TrialAggregate agg = run_trials_serial(plan);
    CHECK(agg.count == 500);
    CHECK(agg.comparisons.sum == 500);
    CHECK(agg.comparisons.sum_sq == 500);
    CHECK(agg.exchanges.sum == 1000);
    CHECK(agg.exchanges.sum_sq == 2000);
    CHECK(agg.stages.sum == 500);
    CHECK(agg.stages.sum_sq == 500);
}

TEST_CASE("aggregates are reproducible and seed-sensitive") {
    const TrialPlan plan{Algorithm::dual, 50, 200, 7};
    const TrialAggregate a = run_trials_serial(plan);
    const TrialAggregate b = run_trials_serial(plan);
    CHECK(a == b);

    const TrialPlan other{Algorithm::dual, 50, 200, 8};
    CHECK(!(run_trials_serial(other) == a));
}

TEST_CASE("serial, parallel, and shuffled split merges agree bit for bit") {
    const TrialPlan plan{Algorithm::dual, 80, 1000, 4242};
    const TrialAggregate serial = run_trials_serial(plan);
    const TrialAggregate parallel = run_trials(plan);
    CHECK(serial == parallel);

    // Cut the trial range into uneven pieces, merge them out of order.
    const std::vector<std::uint64_t> cuts = {0, 137, 138, 500, 999, 1000};
    std::vector<TrialAggregate> parts;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        parts.push_back(run_trial_range(plan, cuts[c], cuts[c + 1]));
    }
    std::reverse(parts.begin(), parts.end());
    TrialAggregate merged = parts[0];
    for (std::size_t c = 1; c < parts.size(); ++c) merged = merge(merged, parts[c]);
    CHECK(merged == serial);

    const TrialPlan other{Algorithm::dual, 80, 1000, 4243};
    CHECK_THROWS_AS(merge(serial, run_trials_serial(other)), std::invalid_argument);
    CHECK_THROWS_AS(run_trial_range(plan, 900, 1001), std::invalid_argument);
}

TEST_CASE("classic trials leave exchanges untouched") {
    const TrialPlan plan{Algorithm::classic, 30, 100, 3};
    const TrialAggregate agg = run_trials(plan);
    CHECK(agg.exchanges.sum == 0);
    CHECK(agg.exchanges.sum_sq == 0);
    CHECK(agg.comparisons.sum > 0);

    const auto metrics = supported_metrics(Algorithm::classic);
    CHECK(metrics == std::vector<Metric>{Metric::comparisons, Metric::stages});
    CHECK(supported_metrics(Algorithm::dual) ==
          std::vector<Metric>{Metric::comparisons, Metric::exchanges, Metric::stages});
}

TEST_CASE("comparison reports carry the exact theory values") {
    const TrialPlan plan{Algorithm::dual, 3, 4000, 11};
    const TrialAggregate agg = run_trials(plan);

    const ComparisonReport comparisons = compare(agg, Metric::comparisons);
    CHECK(comparisons.theory_mean == make_rational(8, 3));
    REQUIRE(comparisons.theory_variance.has_value());
    CHECK(*comparisons.theory_variance == make_rational(2, 9));
    CHECK(std::abs(comparisons.z_score) < 4.0);
    CHECK(comparisons.std_error > 0);

    const ComparisonReport exchanges = compare(agg, Metric::exchanges);
    CHECK(exchanges.theory_mean == make_rational(8, 3));
    CHECK(!exchanges.theory_variance.has_value());

    const ComparisonReport stages = compare(agg, Metric::stages);
    CHECK(stages.theory_mean == 1);
    CHECK(!stages.theory_variance.has_value());

    // Unmodeled pair and undersized batches.
    const TrialPlan classic_plan{Algorithm::classic, 10, 50, 5};
    const TrialAggregate classic_agg = run_trials(classic_plan);
    CHECK_THROWS_AS(compare(classic_agg, Metric::exchanges), std::domain_error);
    CHECK(compare(classic_agg, Metric::comparisons).theory_mean ==
          dpqlab::oracle::dp_expected(Algorithm::classic, Metric::comparisons, 10).values[10]);

    const TrialPlan tiny{Algorithm::dual, 5, 1, 1};
    const TrialAggregate tiny_agg = run_trials(tiny);
    CHECK_THROWS_AS(compare(tiny_agg, Metric::comparisons), std::invalid_argument);
}

TEST_CASE("aggregates obey the Cauchy-Schwarz bound") {
    for (const std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const TrialPlan plan{Algorithm::dual, 25, 400, seed};
        const TrialAggregate agg = run_trials(plan);
        for (const Metric m : supported_metrics(plan.algorithm)) {
            const MetricTotals& t = agg.totals(m);
            CHECK(t.sum_sq * agg.count >= t.sum * t.sum);
        }
    }
}

TEST_CASE("empirical distributions and total variation distance") {
    const TrialPlan plan{Algorithm::dual, 2, 300, 17};
    const auto observed = empirical_distribution(plan, Metric::comparisons);
    REQUIRE(observed.size() == 1);
    CHECK(observed.at(1) == 300);

    const auto laws = dpqlab::oracle::cost_distribution(Metric::comparisons, 2);
    CHECK(distribution_distance(observed, laws[2]) == 0.0);

    // Fully disjoint supports sit at distance 1.
    dpqlab::oracle::CostDistribution shifted;
    shifted.n = 2;
    shifted.metric = Metric::comparisons;
    shifted.probs = {{5, make_rational(1)}};
    CHECK(distribution_distance(observed, shifted) == 1.0);

    // A seeded batch at n = 4 stays TV-close to the exact three-point law.
    const TrialPlan plan4{Algorithm::dual, 4, 20000, 23};
    const auto observed4 = empirical_distribution(plan4, Metric::exchanges);
    const auto laws4 = dpqlab::oracle::cost_distribution(Metric::exchanges, 4);
    const double tv = distribution_distance(observed4, laws4[4]);
    CHECK(tv >= 0.0);
    CHECK(tv < 0.02);

    CHECK_THROWS_AS(distribution_distance({}, laws4[4]), std::invalid_argument);
}

TEST_CASE("per-trial seeds are splitmix outputs and distinct in practice") {
    CHECK(per_trial_seed(42, 0) != per_trial_seed(42, 1));
    CHECK(per_trial_seed(42, 0) != per_trial_seed(43, 0));
}
