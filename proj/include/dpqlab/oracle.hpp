#pragma once

#include <cstdint>
#include <vector>

#include "dpqlab/counters.hpp"
#include "dpqlab/distribution.hpp"
#include "dpqlab/rational.hpp"

namespace dpqlab::oracle {

// Shared table of harmonic numbers H_n = sum 1/k and second-order harmonic
// numbers H2_n = sum 1/k^2, exact. h[n] and h2[n] are valid for n <= n_max.
struct HarmonicTable {
    std::vector<Rational> h;
    std::vector<Rational> h2;

    static HarmonicTable build(std::size_t n_max);
    std::size_t n_max() const { return h.empty() ? 0 : h.size() - 1; }
};

// One-off exact values (O(n) streaming, no table kept).
Rational harmonic(std::size_t n);
Rational harmonic2(std::size_t n);

// Closed forms for the mean costs. The dual-pivot exchange and stage forms
// only describe sizes n >= 4; below that they throw std::domain_error and the
// recurrence route (dp_expected) is the valid source.
//
//   dual comparisons mean:      2(n+1)H_n - 4n            (n >= 0)
//   dual exchanges mean:        (4/5)(n+1)H_n - (24n+4)/25  (n >= 4)
//   dual stages mean:           (2/5)(n+1) - 1/2          (n >= 4)
//   dual comparisons variance:  7n^2 - 4(n+1)^2 H2_n - 2(n+1)H_n + 13n   (n >= 2)
//   dual comparisons E[C(C-1)]: 4(n+1)^2 (H_{n+1}^2 - H2_{n+1})
//                               - 4(n+1)(4n+3) H_{n+1} + 23n^2 + 33n + 12 (n >= 2)
//   classic comparisons mean:   2(n+1)H_n - 4n            (n >= 0)
//   classic exchanges mean:     (2(n+1)H_n - 3n)/6        (n >= 0)
//
// Table overloads need ht.n_max() >= n (>= n+1 for the factorial moment).
Rational closed_dual_comparisons(std::size_t n);
Rational closed_dual_comparisons(std::size_t n, const HarmonicTable& ht);
Rational closed_dual_exchanges(std::size_t n);
Rational closed_dual_exchanges(std::size_t n, const HarmonicTable& ht);
Rational closed_dual_stages(std::size_t n);
Rational closed_dual_variance(std::size_t n);
Rational closed_dual_variance(std::size_t n, const HarmonicTable& ht);
Rational closed_dual_factorial_moment(std::size_t n);
Rational closed_dual_factorial_moment(std::size_t n, const HarmonicTable& ht);
Rational closed_classic_comparisons(std::size_t n);
Rational closed_classic_comparisons(std::size_t n, const HarmonicTable& ht);
Rational closed_classic_exchanges(std::size_t n);
Rational closed_classic_exchanges(std::size_t n, const HarmonicTable& ht);

// Expected cost table computed straight from the recurrences, valid for every
// n (including the sizes below the closed-form thresholds).
//
// Dual-pivot, uniform pivot-rank pair (i < j), kernel
//   v_n = toll(n) + 6/(n(n-1)) * sum_{i=1}^{n-1} (n-i) v_{i-1},  v_0 = v_1 = 0,
// with mean stage tolls: comparisons (5n-7)/3, exchanges 2(n+1)/3, stages 1.
//
// Classic, uniform pivot rank, kernel
//   v_n = toll(n) + (2/n) * sum_{j=0}^{n-1} v_j,  v_0 = 0,
// with stage tolls: comparisons n-1, stages 1 (v_1 = 0), and exchanges n/6
// with v_1 = 1/6. The exchange model charges 1/6 even to a single key; that
// initial value is what makes the closed form above telescope.
//
// Computed with prefix sums, O(n_max) rational steps per metric.
struct ExpectationTable {
    Algorithm algorithm = Algorithm::dual;
    Metric metric = Metric::comparisons;
    std::vector<Rational> values;  // values[n], 0 <= n <= n_max
};

ExpectationTable dp_expected(Algorithm algorithm, Metric metric, std::size_t n_max);

inline constexpr std::size_t kExactDistributionCap = 16;
inline constexpr std::size_t kFloatDistributionCap = 64;

// Exact laws for the dual-pivot sort, sizes 0..n_max, by convolution over the
// pivot-rank pair: a stage with ranks (i, j) at size n contributes its toll
// plus independent sub-laws at sizes i-1, j-i-1, n-j, each pair weighted
// 1/C(n,2). Throws std::length_error past the cap (use the float mode there).
std::vector<CostDistribution> cost_distribution(Metric metric, std::size_t n_max,
                                                std::size_t cap = kExactDistributionCap);
std::vector<FloatCostDistribution> cost_distribution_float(
    Metric metric, std::size_t n_max, std::size_t cap = kFloatDistributionCap);

// Exact means and variance next to their leading asymptotic shapes.
struct AsymptoticsRow {
    std::size_t n = 0;
    double dual_comparisons_exact = 0, dual_comparisons_asym = 0, dual_comparisons_ratio = 0;
    double dual_exchanges_exact = 0, dual_exchanges_asym = 0, dual_exchanges_ratio = 0;
    double classic_exchanges_exact = 0, classic_exchanges_asym = 0, classic_exchanges_ratio = 0;
    double variance_exact = 0, variance_asym = 0, variance_ratio = 0;
    double exchange_ratio = 0;       // dual exchanges mean / classic exchanges mean
    double variance_over_n_sq = 0;   // exact variance / n^2, limit 7 - 2*pi^2/3
};

// Asymptotic reference curves: comparisons 2 n ln n, dual exchanges
// (4/5) n ln n, classic exchanges (1/3) n ln n, comparison variance
// (7 - 2*pi^2/3) n^2 - 2 n ln n. Grid values must be >= 2, strictly
// increasing, and at most kAsymptoticsMaxN (exact harmonic streaming bound).
inline constexpr std::size_t kAsymptoticsMaxN = 100000;
AsymptoticsRow asymptotics(std::size_t n);
std::vector<AsymptoticsRow> asymptotics_grid(const std::vector<std::size_t>& n_grid);

}  // namespace dpqlab::oracle
