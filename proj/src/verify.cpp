#include "dpqlab/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "dpqlab/enumerate.hpp"
#include "dpqlab/oracle.hpp"
#include "dpqlab/random.hpp"

namespace dpqlab::verify {

namespace {

using oracle::CostDistribution;
using oracle::ExpectationTable;
using oracle::HarmonicTable;

std::string fraction_pair(const Rational& expected, const Rational& got) {
    return "expected " + to_fraction_string(expected) + ", got " + to_fraction_string(got);
}

struct Battery {
    std::vector<CheckResult> results;

    void record(const std::string& name, bool pass, const std::string& detail) {
        results.push_back({name, pass, pass ? "" : detail});
    }
};

}  // namespace

std::vector<CheckResult> run_verification(std::size_t n_max, std::size_t dist_cap) {
    if (n_max < 4) throw std::invalid_argument("run_verification: need n_max >= 4");
    if (dist_cap < 2 || dist_cap > oracle::kExactDistributionCap) {
        throw std::invalid_argument("run_verification: dist_cap outside the exact law range");
    }

    Battery battery;
    const HarmonicTable ht = HarmonicTable::build(n_max + 1);

    // Closed forms against the recurrence route, over their validity ranges.
    {
        const ExpectationTable dp =
            oracle::dp_expected(Algorithm::dual, Metric::comparisons, n_max);
        bool pass = true;
        std::string detail;
        for (std::size_t n = 0; n <= n_max && pass; ++n) {
            const Rational closed = oracle::closed_dual_comparisons(n, ht);
            if (closed != dp.values[n]) {
                pass = false;
                detail = "n = " + std::to_string(n) + ": " + fraction_pair(closed, dp.values[n]);
            }
        }
        battery.record("dual comparisons: closed form = recurrence", pass, detail);
    }
    {
        const ExpectationTable dp = oracle::dp_expected(Algorithm::dual, Metric::exchanges, n_max);
        bool pass = true;
        std::string detail;
        for (std::size_t n = 4; n <= n_max && pass; ++n) {
            const Rational closed = oracle::closed_dual_exchanges(n, ht);
            if (closed != dp.values[n]) {
                pass = false;
                detail = "n = " + std::to_string(n) + ": " + fraction_pair(closed, dp.values[n]);
            }
        }
        // Below its threshold the closed form is known to disagree; pin the
        // documented gap (raw formula, evaluated inline since the guarded
        // function refuses these sizes) so a silent change shows up.
        const auto raw_formula = [&](long n) -> Rational {
            return make_rational(4, 5) * (n + 1) * ht.h[static_cast<std::size_t>(n)] -
                   make_rational(24 * n + 4, 25);
        };
        if (pass && !(dp.values[2] == 2 && raw_formula(2) == make_rational(38, 25))) {
            pass = false;
            detail = "small-size gap at n = 2 moved";
        }
        if (pass && !(dp.values[3] == make_rational(8, 3) && raw_formula(3) == make_rational(212, 75))) {
            pass = false;
            detail = "small-size gap at n = 3 moved";
        }
        battery.record("dual exchanges: closed form = recurrence (n >= 4)", pass, detail);
    }
    {
        const ExpectationTable dp = oracle::dp_expected(Algorithm::dual, Metric::stages, n_max);
        bool pass = true;
        std::string detail;
        for (std::size_t n = 4; n <= n_max && pass; ++n) {
            const Rational closed = oracle::closed_dual_stages(n);
            if (closed != dp.values[n]) {
                pass = false;
                detail = "n = " + std::to_string(n) + ": " + fraction_pair(closed, dp.values[n]);
            }
        }
        if (pass && !(dp.values[2] == 1 && dp.values[3] == 1)) {
            pass = false;
            detail = "recurrence no longer gives 1 stage at n = 2, 3";
        }
        battery.record("dual stages: closed form = recurrence (n >= 4)", pass, detail);
    }
    {
        const ExpectationTable dp =
            oracle::dp_expected(Algorithm::classic, Metric::comparisons, n_max);
        bool pass = true;
        std::string detail;
        for (std::size_t n = 0; n <= n_max && pass; ++n) {
            const Rational closed = oracle::closed_classic_comparisons(n, ht);
            if (closed != dp.values[n]) {
                pass = false;
                detail = "n = " + std::to_string(n) + ": " + fraction_pair(closed, dp.values[n]);
            }
        }
        battery.record("classic comparisons: closed form = recurrence", pass, detail);
    }
    {
        const ExpectationTable dp =
            oracle::dp_expected(Algorithm::classic, Metric::exchanges, n_max);
        bool pass = true;
        std::string detail;
        for (std::size_t n = 1; n <= n_max && pass; ++n) {
            const Rational closed = oracle::closed_classic_exchanges(n, ht);
            if (closed != dp.values[n]) {
                pass = false;
                detail = "n = " + std::to_string(n) + ": " + fraction_pair(closed, dp.values[n]);
            }
        }
        battery.record("classic exchanges: closed form = recurrence", pass, detail);
    }
    {
        bool pass = true;
        std::string detail;
        for (std::size_t n = 0; n <= n_max && pass; ++n) {
            const Rational dual = oracle::closed_dual_comparisons(n, ht);
            const Rational classic = oracle::closed_classic_comparisons(n, ht);
            if (dual != classic) {
                pass = false;
                detail = "n = " + std::to_string(n) + ": " + fraction_pair(dual, classic);
            }
        }
        battery.record("dual and classic comparison means coincide", pass, detail);
    }

    // Law moments against the independent closed forms and recurrences.
    for (const Metric metric : {Metric::comparisons, Metric::exchanges, Metric::stages}) {
        const auto laws = oracle::cost_distribution(metric, dist_cap);
        const ExpectationTable dp = oracle::dp_expected(Algorithm::dual, metric, dist_cap);
        bool pass = true;
        std::string detail;
        for (std::size_t n = 0; n <= dist_cap && pass; ++n) {
            if (oracle::probability_sum(laws[n]) != 1) {
                pass = false;
                detail = "law at n = " + std::to_string(n) + " does not sum to 1";
                break;
            }
            const Rational mean = oracle::mean_of(laws[n]);
            if (mean != dp.values[n]) {
                pass = false;
                detail = "mean at n = " + std::to_string(n) + ": " +
                         fraction_pair(dp.values[n], mean);
            }
        }
        battery.record(std::string("law mean = recurrence (") + std::string(name(metric)) + ")",
                       pass, detail);

        if (metric == Metric::comparisons) {
            bool vpass = true;
            std::string vdetail;
            for (std::size_t n = 2; n <= dist_cap && vpass; ++n) {
                const Rational var = oracle::variance_of(laws[n]);
                const Rational closed_var = oracle::closed_dual_variance(n, ht);
                if (var != closed_var) {
                    vpass = false;
                    vdetail = "variance at n = " + std::to_string(n) + ": " +
                              fraction_pair(closed_var, var);
                    break;
                }
                const Rational fact = oracle::factorial_moment_of(laws[n]);
                const Rational closed_fact = oracle::closed_dual_factorial_moment(n, ht);
                if (fact != closed_fact) {
                    vpass = false;
                    vdetail = "falling moment at n = " + std::to_string(n) + ": " +
                              fraction_pair(closed_fact, fact);
                }
            }
            battery.record("law variance and falling moment = closed forms", vpass, vdetail);
        }
    }

    // The instrumented sorts, enumerated exactly, against the law DP.
    {
        bool pass = true;
        std::string detail;
        for (const Metric metric : {Metric::comparisons, Metric::exchanges, Metric::stages}) {
            const auto laws = oracle::cost_distribution(metric, kEnumerationCap);
            for (std::size_t n = 0; n <= kEnumerationCap && pass; ++n) {
                const CostDistribution walked =
                    enumerate_distribution(n, Algorithm::dual, metric);
                if (walked.probs != laws[n].probs) {
                    pass = false;
                    detail = std::string(name(metric)) + " law differs at n = " +
                             std::to_string(n);
                }
            }
        }
        battery.record("enumerated dual sort = law DP (n <= 7)", pass, detail);
    }
    {
        bool pass = true;
        std::string detail;
        KeyArray scrambled = {5, 1, 4, 6, 2, 3};
        for (const Metric metric : {Metric::comparisons, Metric::exchanges, Metric::stages}) {
            const CostDistribution a = enumerate_distribution(6, Algorithm::dual, metric);
            const CostDistribution b = enumerate_distribution(scrambled, Algorithm::dual, metric);
            if (a.probs != b.probs) {
                pass = false;
                detail = std::string(name(metric)) + " law depends on the input arrangement";
            }
        }
        battery.record("enumerated law is input-independent", pass, detail);
    }
    {
        bool pass = true;
        std::string detail;
        const ExpectationTable dp =
            oracle::dp_expected(Algorithm::classic, Metric::comparisons, kEnumerationCap);
        const ExpectationTable dp_stages =
            oracle::dp_expected(Algorithm::classic, Metric::stages, kEnumerationCap);
        for (std::size_t n = 0; n <= kEnumerationCap && pass; ++n) {
            const Rational mean =
                oracle::mean_of(enumerate_distribution(n, Algorithm::classic, Metric::comparisons));
            const Rational mean_stages =
                oracle::mean_of(enumerate_distribution(n, Algorithm::classic, Metric::stages));
            if (mean != dp.values[n] || mean_stages != dp_stages.values[n]) {
                pass = false;
                detail = "classic mean differs at n = " + std::to_string(n);
            }
        }
        battery.record("enumerated classic sort = recurrence means (n <= 7)", pass, detail);
    }

    // Mean stage tolls: averaging the per-pair tolls over all C(n,2) pivot
    // pairs must give the closed stage costs.
    {
        bool pass = true;
        std::string detail;
        for (std::size_t n = 2; n <= 50 && pass; ++n) {
            Rational comp_sum = 0;
            Rational exch_sum = 0;
            for (std::uint64_t i = 1; i < n; ++i) {
                for (std::uint64_t j = i + 1; j <= n; ++j) {
                    comp_sum += static_cast<unsigned long>(2 * n - i - 2);
                    exch_sum += static_cast<unsigned long>((i - 1) + (n - j) + 2);
                }
            }
            const Rational pairs(static_cast<unsigned long>(pair_count(n)));
            const long ln = static_cast<long>(n);
            if (comp_sum / pairs != make_rational(5 * ln - 7, 3)) {
                pass = false;
                detail = "comparison toll mean off at n = " + std::to_string(n);
            } else if (exch_sum / pairs != make_rational(2 * (ln + 1), 3)) {
                pass = false;
                detail = "exchange toll mean off at n = " + std::to_string(n);
            }
        }
        battery.record("mean stage tolls match their closed values (n <= 50)", pass, detail);
    }

    // Harmonic square identity used by the variance derivation:
    // H_{n+1}^2 - H2_{n+1} = H_n^2 - H2_n + 2 H_n / (n+1).
    {
        const HarmonicTable t = HarmonicTable::build(101);
        bool pass = true;
        std::string detail;
        for (std::size_t n = 0; n <= 100 && pass; ++n) {
            const Rational lhs = t.h[n + 1] * t.h[n + 1] - t.h2[n + 1];
            const Rational rhs = t.h[n] * t.h[n] - t.h2[n] +
                                 Rational(2) * t.h[n] / make_rational(static_cast<long>(n) + 1);
            if (lhs != rhs) {
                pass = false;
                detail = "identity breaks at n = " + std::to_string(n);
            }
        }
        battery.record("harmonic square identity (n <= 100)", pass, detail);
    }

    return battery.results;
}

}  // namespace dpqlab::verify
