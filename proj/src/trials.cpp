#include "dpqlab/trials.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dpqlab/oracle.hpp"
#include "dpqlab/random.hpp"
#include "dpqlab/sort.hpp"

namespace dpqlab::experiments {

std::uint64_t per_trial_seed(std::uint64_t master_seed, std::uint64_t t) {
    return splitmix64_at(master_seed, t);
}

std::vector<Metric> supported_metrics(Algorithm a) {
    if (a == Algorithm::dual) {
        return {Metric::comparisons, Metric::exchanges, Metric::stages};
    }
    return {Metric::comparisons, Metric::stages};
}

namespace {

CostCounters run_one_trial(const TrialPlan& plan, std::uint64_t t) {
    SeededSource source(per_trial_seed(plan.master_seed, t));
    KeyArray keys = generate_permutation(plan.n, source);
    return plan.algorithm == Algorithm::dual ? dual_pivot_quicksort(keys, source)
                                             : classic_quicksort(keys, source);
}

void add_counter(MetricTotals& totals, std::uint64_t value) {
    const BigInt v(static_cast<unsigned long>(value));
    totals.sum += v;
    totals.sum_sq += v * v;
}

}  // namespace

TrialAggregate run_trial_range(const TrialPlan& plan, std::uint64_t first, std::uint64_t last) {
    if (last > plan.trials || first > last) {
        throw std::invalid_argument("run_trial_range: range outside the plan");
    }
    TrialAggregate agg;
    agg.plan = plan;
    for (std::uint64_t t = first; t < last; ++t) {
        const CostCounters c = run_one_trial(plan, t);
        add_counter(agg.comparisons, c.comparisons);
        add_counter(agg.exchanges, c.exchanges);
        add_counter(agg.stages, c.stages);
        ++agg.count;
    }
    return agg;
}

TrialAggregate run_trials_serial(const TrialPlan& plan) {
    return run_trial_range(plan, 0, plan.trials);
}

TrialAggregate run_trials(const TrialPlan& plan) {
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    if (threads > 1 && plan.trials > 1) {
        // Chunk the trial range, one aggregate per chunk. Exact integer totals
        // make the merge order irrelevant, so this matches the serial
        // reference bit for bit no matter the schedule.
        const std::uint64_t chunks =
            std::min<std::uint64_t>(plan.trials, static_cast<std::uint64_t>(threads) * 8);
        std::vector<TrialAggregate> parts(chunks);
        const std::uint64_t per = plan.trials / chunks;
        const std::uint64_t extra = plan.trials % chunks;
#pragma omp parallel for schedule(dynamic)
        for (std::uint64_t c = 0; c < chunks; ++c) {
            const std::uint64_t first = c * per + std::min(c, extra);
            const std::uint64_t last = first + per + (c < extra ? 1 : 0);
            parts[c] = run_trial_range(plan, first, last);
        }
        TrialAggregate agg = parts[0];
        for (std::uint64_t c = 1; c < chunks; ++c) agg = merge(agg, parts[c]);
        return agg;
    }
#endif
    return run_trials_serial(plan);
}

TrialAggregate merge(const TrialAggregate& a, const TrialAggregate& b) {
    if (!(a.plan == b.plan)) throw std::invalid_argument("merge: aggregates of different plans");
    TrialAggregate m;
    m.plan = a.plan;
    m.count = a.count + b.count;
    m.comparisons = {a.comparisons.sum + b.comparisons.sum,
                     a.comparisons.sum_sq + b.comparisons.sum_sq};
    m.exchanges = {a.exchanges.sum + b.exchanges.sum, a.exchanges.sum_sq + b.exchanges.sum_sq};
    m.stages = {a.stages.sum + b.stages.sum, a.stages.sum_sq + b.stages.sum_sq};
    return m;
}

ComparisonReport compare(const TrialAggregate& agg, Metric metric) {
    bool supported = false;
    for (const Metric m : supported_metrics(agg.plan.algorithm)) supported |= m == metric;
    if (!supported) {
        throw std::domain_error("compare: the cost model does not cover " +
                                std::string(name(metric)) + " for the " +
                                std::string(name(agg.plan.algorithm)) + " algorithm");
    }
    if (agg.count < 2) throw std::invalid_argument("compare: need at least 2 trials");

    const auto& totals = agg.totals(metric);
    const unsigned long count = agg.count;
    const Rational emp_mean = Rational(totals.sum) / count;
    // Sample variance: (sum_sq - sum^2 / count) / (count - 1), exact.
    const Rational emp_var =
        (Rational(totals.sum_sq) - Rational(totals.sum * totals.sum) / count) / (count - 1);

    ComparisonReport report;
    report.metric = metric;
    report.theory_mean =
        oracle::dp_expected(agg.plan.algorithm, metric, agg.plan.n).values[agg.plan.n];
    if (agg.plan.algorithm == Algorithm::dual && metric == Metric::comparisons) {
        report.theory_variance = oracle::closed_dual_variance(agg.plan.n);
    }
    report.empirical_mean = to_double(emp_mean);
    report.empirical_variance = to_double(emp_var);
    report.std_error = std::sqrt(report.empirical_variance / static_cast<double>(count));
    const Rational delta = emp_mean - report.theory_mean;
    if (report.std_error > 0) {
        report.z_score = to_double(delta) / report.std_error;
    } else {
        // Degenerate metric (all trials equal): call it 0 when the mean is
        // spot on, +/-inf otherwise.
        report.z_score = sgn(delta) == 0 ? 0.0
                                         : std::copysign(HUGE_VAL, to_double(delta));
    }
    return report;
}

std::map<std::uint64_t, std::uint64_t> empirical_distribution(const TrialPlan& plan,
                                                              Metric metric) {
    std::map<std::uint64_t, std::uint64_t> freq;
    for (std::uint64_t t = 0; t < plan.trials; ++t) {
        const CostCounters c = run_one_trial(plan, t);
        ++freq[c.value(metric)];
    }
    return freq;
}

double distribution_distance(const std::map<std::uint64_t, std::uint64_t>& observed,
                             const oracle::CostDistribution& exact) {
    std::uint64_t trials = 0;
    for (const auto& [value, count] : observed) trials += count;
    if (trials == 0) throw std::invalid_argument("distribution_distance: empty observation");

    // Total variation: half the L1 gap over the union support, exact until the
    // final conversion.
    const auto frequency = [trials](std::uint64_t count) {
        Rational f(static_cast<unsigned long>(count), static_cast<unsigned long>(trials));
        f.canonicalize();
        return f;
    };
    Rational gap = 0;
    for (const auto& [value, p] : exact.probs) {
        const auto it = observed.find(value);
        const Rational obs = it == observed.end() ? Rational(0) : frequency(it->second);
        gap += abs(obs - p);
    }
    for (const auto& [value, count] : observed) {
        if (exact.probs.contains(value)) continue;
        gap += frequency(count);
    }
    return to_double(gap / 2);
}

}  // namespace dpqlab::experiments
