#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dpqlab/oracle.hpp"
#include "dpqlab/random.hpp"

using namespace dpqlab;
using namespace dpqlab::oracle;

namespace {

using Pmf = std::map<std::uint64_t, Rational>;

Pmf convolve(const Pmf& a, const Pmf& b) {
    Pmf out;
    for (const auto& [va, pa] : a) {
        for (const auto& [vb, pb] : b) out[va + vb] += pa * pb;
    }
    return out;
}

// Straight transcription of the law recursion, no sharing, no grouping — an
// independent reference for the production implementation.
std::vector<Pmf> naive_laws(Metric metric, std::size_t n_max) {
    std::vector<Pmf> laws(n_max + 1);
    laws[0] = {{0, make_rational(1)}};
    if (n_max >= 1) laws[1] = laws[0];
    for (std::size_t n = 2; n <= n_max; ++n) {
        Pmf out;
        const Rational weight(1, static_cast<unsigned long>(pair_count(n)));
        for (std::uint64_t i = 1; i < n; ++i) {
            for (std::uint64_t j = i + 1; j <= n; ++j) {
                std::uint64_t toll = 0;
                switch (metric) {
                    case Metric::comparisons:
                        toll = 1 + (i - 1) + 2 * (j - i - 1) + 2 * (n - j);
                        break;
                    case Metric::exchanges:
                        toll = (i - 1) + (n - j) + 2;
                        break;
                    case Metric::stages:
                        toll = 1;
                        break;
                }
                const Pmf conv =
                    convolve(convolve(laws[i - 1], laws[j - i - 1]), laws[n - j]);
                for (const auto& [v, p] : conv) out[v + toll] += p * weight;
            }
        }
        laws[n] = std::move(out);
    }
    return laws;
}

}  // namespace

TEST_CASE("hand-enumerated laws at sizes 3 and 4") {
    const auto comparisons = cost_distribution(Metric::comparisons, 4);
    const auto exchanges = cost_distribution(Metric::exchanges, 4);
    const auto stages = cost_distribution(Metric::stages, 4);

    CHECK(comparisons[0].probs == Pmf{{0, make_rational(1)}});
    CHECK(comparisons[1].probs == Pmf{{0, make_rational(1)}});
    CHECK(comparisons[2].probs == Pmf{{1, make_rational(1)}});
    CHECK(comparisons[3].probs ==
          Pmf{{2, make_rational(1, 3)}, {3, make_rational(2, 3)}});
    CHECK(comparisons[4].probs == Pmf{{4, make_rational(1, 2)},
                                      {5, make_rational(1, 6)},
                                      {6, make_rational(1, 3)}});

    CHECK(exchanges[2].probs == Pmf{{2, make_rational(1)}});
    CHECK(exchanges[3].probs == Pmf{{2, make_rational(1, 3)}, {3, make_rational(2, 3)}});
    CHECK(exchanges[4].probs == Pmf{{3, make_rational(1, 3)},
                                    {4, make_rational(1, 3)},
                                    {6, make_rational(1, 3)}});

    CHECK(stages[3].probs == Pmf{{1, make_rational(1)}});
    CHECK(stages[4].probs == Pmf{{1, make_rational(1, 2)}, {2, make_rational(1, 2)}});
}

TEST_CASE("production laws equal the naive reference recursion") {
    for (const Metric m : {Metric::comparisons, Metric::exchanges, Metric::stages}) {
        const auto reference = naive_laws(m, 9);
        const auto fast = cost_distribution(m, 9);
        REQUIRE(fast.size() == 10);
        for (std::size_t n = 0; n <= 9; ++n) {
            CHECK(fast[n].n == n);
            CHECK(fast[n].metric == m);
            CHECK(fast[n].probs == reference[n]);
        }
    }
}

TEST_CASE("laws are probability measures and match the recurrence means") {
    for (const Metric m : {Metric::comparisons, Metric::exchanges, Metric::stages}) {
        const auto laws = cost_distribution(m, 12);
        const auto dp = dp_expected(Algorithm::dual, m, 12);
        for (std::size_t n = 0; n <= 12; ++n) {
            CHECK(probability_sum(laws[n]) == 1);
            for (const auto& [value, p] : laws[n].probs) {
                CHECK(p > 0);
                CHECK(p <= 1);
            }
            CHECK(mean_of(laws[n]) == dp.values[n]);
        }
    }
}

TEST_CASE("law variance and falling moment meet the closed forms") {
    const auto laws = cost_distribution(Metric::comparisons, 12);
    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(variance_of(laws[n]) == closed_dual_variance(n));
        CHECK(factorial_moment_of(laws[n]) == closed_dual_factorial_moment(n));
    }
}

TEST_CASE("float laws track the exact laws") {
    for (const Metric m : {Metric::comparisons, Metric::exchanges, Metric::stages}) {
        const auto exact = cost_distribution(m, 12);
        const auto approx = cost_distribution_float(m, 12);
        for (std::size_t n = 0; n <= 12; ++n) {
            REQUIRE(approx[n].probs.size() == exact[n].probs.size());
            double gap = 0;
            for (const auto& [value, p] : exact[n].probs) {
                REQUIRE(approx[n].probs.contains(value));
                gap += std::abs(approx[n].probs.at(value) - to_double(p));
            }
            CHECK(gap / 2 < 1e-12);
        }
    }
}

TEST_CASE("size caps throw with a pointer to the alternative") {
    CHECK_THROWS_AS(cost_distribution(Metric::comparisons, kExactDistributionCap + 1),
                    std::length_error);
    CHECK_THROWS_AS(cost_distribution_float(Metric::comparisons, kFloatDistributionCap + 1),
                    std::length_error);
    CHECK_NOTHROW(cost_distribution(Metric::stages, kExactDistributionCap));
}

TEST_CASE("moment helpers on a known two-point law") {
    CostDistribution d;
    d.n = 9;
    d.metric = Metric::comparisons;
    d.probs = {{1, make_rational(1, 4)}, {5, make_rational(3, 4)}};
    CHECK(probability_sum(d) == 1);
    CHECK(mean_of(d) == make_rational(4));
    // E X^2 = 1/4 + 75/4 = 19, Var = 19 - 16 = 3; E[X(X-1)] = 0 + 20 . 3/4 = 15.
    CHECK(variance_of(d) == make_rational(3));
    CHECK(factorial_moment_of(d) == make_rational(15));
}
