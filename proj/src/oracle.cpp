#include "dpqlab/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dpqlab::oracle {

namespace {

Rational frac(long num, long den = 1) { return make_rational(num, den); }

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// The closed forms proper, taking the harmonic values they need. All public
// entry points funnel through these.

Rational dual_comparisons_from(std::size_t n, const Rational& hn) {
    const long ln = static_cast<long>(n);
    return 2 * (ln + 1) * hn - 4 * ln;
}

Rational dual_exchanges_from(std::size_t n, const Rational& hn) {
    const long ln = static_cast<long>(n);
    return frac(4, 5) * (ln + 1) * hn - frac(24 * ln + 4, 25);
}

Rational dual_variance_from(std::size_t n, const Rational& hn, const Rational& h2n) {
    const long ln = static_cast<long>(n);
    return 7 * ln * ln - 4 * (ln + 1) * (ln + 1) * h2n - 2 * (ln + 1) * hn + 13 * ln;
}

Rational dual_factorial_moment_from(std::size_t n, const Rational& hn1, const Rational& h2n1) {
    const long ln = static_cast<long>(n);
    return 4 * (ln + 1) * (ln + 1) * (hn1 * hn1 - h2n1) - 4 * (ln + 1) * (4 * ln + 3) * hn1 +
           23 * ln * ln + 33 * ln + 12;
}

Rational classic_comparisons_from(std::size_t n, const Rational& hn) {
    const long ln = static_cast<long>(n);
    return 2 * (ln + 1) * hn - 4 * ln;
}

Rational classic_exchanges_from(std::size_t n, const Rational& hn) {
    const long ln = static_cast<long>(n);
    return (2 * (ln + 1) * hn - 3 * ln) / 6;
}

void check_exchange_threshold(std::size_t n) {
    if (n < 4) {
        throw std::domain_error(
            "closed_dual_exchanges: the closed form only describes n >= 4; "
            "use dp_expected for smaller sizes");
    }
}

void check_stage_threshold(std::size_t n) {
    if (n < 4) {
        throw std::domain_error(
            "closed_dual_stages: the closed form only describes n >= 4; "
            "use dp_expected for smaller sizes");
    }
}

}  // namespace

HarmonicTable HarmonicTable::build(std::size_t n_max) {
    HarmonicTable t;
    t.h.resize(n_max + 1);
    t.h2.resize(n_max + 1);
    t.h[0] = 0;
    t.h2[0] = 0;
    for (std::size_t k = 1; k <= n_max; ++k) {
        const Rational unit(1, static_cast<unsigned long>(k));
        t.h[k] = t.h[k - 1] + unit;
        t.h2[k] = t.h2[k - 1] + unit * unit;
    }
    return t;
}

Rational harmonic(std::size_t n) {
    Rational h = 0;
    for (std::size_t k = 1; k <= n; ++k) h += Rational(1, static_cast<unsigned long>(k));
    return h;
}

Rational harmonic2(std::size_t n) {
    Rational h2 = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational unit(1, static_cast<unsigned long>(k));
        h2 += unit * unit;
    }
    return h2;
}

Rational closed_dual_comparisons(std::size_t n) { return dual_comparisons_from(n, harmonic(n)); }

Rational closed_dual_comparisons(std::size_t n, const HarmonicTable& ht) {
    require(ht.n_max() >= n, "closed_dual_comparisons: harmonic table too small");
    return dual_comparisons_from(n, ht.h[n]);
}

Rational closed_dual_exchanges(std::size_t n) {
    check_exchange_threshold(n);
    return dual_exchanges_from(n, harmonic(n));
}

Rational closed_dual_exchanges(std::size_t n, const HarmonicTable& ht) {
    check_exchange_threshold(n);
    require(ht.n_max() >= n, "closed_dual_exchanges: harmonic table too small");
    return dual_exchanges_from(n, ht.h[n]);
}

Rational closed_dual_stages(std::size_t n) {
    check_stage_threshold(n);
    return frac(2, 5) * (static_cast<long>(n) + 1) - frac(1, 2);
}

Rational closed_dual_variance(std::size_t n) {
    return dual_variance_from(n, harmonic(n), harmonic2(n));
}

Rational closed_dual_variance(std::size_t n, const HarmonicTable& ht) {
    require(ht.n_max() >= n, "closed_dual_variance: harmonic table too small");
    return dual_variance_from(n, ht.h[n], ht.h2[n]);
}

Rational closed_dual_factorial_moment(std::size_t n) {
    return dual_factorial_moment_from(n, harmonic(n + 1), harmonic2(n + 1));
}

Rational closed_dual_factorial_moment(std::size_t n, const HarmonicTable& ht) {
    require(ht.n_max() >= n + 1, "closed_dual_factorial_moment: harmonic table too small");
    return dual_factorial_moment_from(n, ht.h[n + 1], ht.h2[n + 1]);
}

Rational closed_classic_comparisons(std::size_t n) {
    return classic_comparisons_from(n, harmonic(n));
}

Rational closed_classic_comparisons(std::size_t n, const HarmonicTable& ht) {
    require(ht.n_max() >= n, "closed_classic_comparisons: harmonic table too small");
    return classic_comparisons_from(n, ht.h[n]);
}

Rational closed_classic_exchanges(std::size_t n) {
    return classic_exchanges_from(n, harmonic(n));
}

Rational closed_classic_exchanges(std::size_t n, const HarmonicTable& ht) {
    require(ht.n_max() >= n, "closed_classic_exchanges: harmonic table too small");
    return classic_exchanges_from(n, ht.h[n]);
}

ExpectationTable dp_expected(Algorithm algorithm, Metric metric, std::size_t n_max) {
    ExpectationTable table;
    table.algorithm = algorithm;
    table.metric = metric;
    table.values.assign(n_max + 1, Rational(0));
    if (n_max < 1) return table;

    if (algorithm == Algorithm::dual) {
        // v_n = toll(n) + 6/(n(n-1)) * sum_{i=1}^{n-1} (n-i) v_{i-1}.
        // With A = sum v_k and B = sum k v_k over k <= n-2, the weighted sum
        // is (n-1)A - B.
        Rational sum = 0;
        Rational weighted = 0;
        for (std::size_t n = 2; n <= n_max; ++n) {
            const long ln = static_cast<long>(n);
            sum += table.values[n - 2];
            weighted += static_cast<long>(n - 2) * table.values[n - 2];
            Rational toll;
            switch (metric) {
                case Metric::comparisons: toll = frac(5 * ln - 7, 3); break;
                case Metric::exchanges: toll = frac(2 * (ln + 1), 3); break;
                case Metric::stages: toll = 1; break;
            }
            table.values[n] =
                toll + frac(6, ln * (ln - 1)) * ((ln - 1) * sum - weighted);
        }
        return table;
    }

    // Classic kernel: v_n = toll(n) + (2/n) sum_{j=0}^{n-1} v_j. The exchange
    // model starts from v_1 = 1/6 (it charges a single key a sixth of an
    // exchange) and its per-stage toll is n/6.
    if (metric == Metric::exchanges) table.values[1] = frac(1, 6);
    Rational sum = table.values[0];
    for (std::size_t n = 2; n <= n_max; ++n) {
        const long ln = static_cast<long>(n);
        sum += table.values[n - 1];
        Rational toll;
        switch (metric) {
            case Metric::comparisons: toll = ln - 1; break;
            case Metric::exchanges: toll = frac(ln, 6); break;
            case Metric::stages: toll = 1; break;
        }
        table.values[n] = toll + frac(2, ln) * sum;
    }
    return table;
}

AsymptoticsRow asymptotics(std::size_t n) { return asymptotics_grid({n}).front(); }

std::vector<AsymptoticsRow> asymptotics_grid(const std::vector<std::size_t>& n_grid) {
    require(!n_grid.empty(), "asymptotics_grid: empty grid");
    for (std::size_t g = 0; g < n_grid.size(); ++g) {
        require(n_grid[g] >= 2, "asymptotics_grid: grid values must be >= 2");
        require(n_grid[g] <= kAsymptoticsMaxN, "asymptotics_grid: grid value beyond supported range");
        require(g == 0 || n_grid[g - 1] < n_grid[g],
                "asymptotics_grid: grid must be strictly increasing");
    }

    // The only sizes where the exchange closed form is invalid.
    const ExpectationTable small_exchanges =
        dp_expected(Algorithm::dual, Metric::exchanges, 3);

    constexpr double kVarianceConstant = 7.0 - 2.0 * std::numbers::pi * std::numbers::pi / 3.0;

    std::vector<AsymptoticsRow> rows;
    rows.reserve(n_grid.size());
    Rational h = 0;
    Rational h2 = 0;
    std::size_t k = 0;
    for (const std::size_t n : n_grid) {
        while (k < n) {
            ++k;
            const Rational unit(1, static_cast<unsigned long>(k));
            h += unit;
            h2 += unit * unit;
        }
        const double nd = static_cast<double>(n);
        const double nlogn = nd * std::log(nd);

        AsymptoticsRow row;
        row.n = n;
        row.dual_comparisons_exact = to_double(dual_comparisons_from(n, h));
        row.dual_comparisons_asym = 2.0 * nlogn;
        row.dual_comparisons_ratio = row.dual_comparisons_exact / row.dual_comparisons_asym;
        row.dual_exchanges_exact = n >= 4 ? to_double(dual_exchanges_from(n, h))
                                          : to_double(small_exchanges.values[n]);
        row.dual_exchanges_asym = 0.8 * nlogn;
        row.dual_exchanges_ratio = row.dual_exchanges_exact / row.dual_exchanges_asym;
        row.classic_exchanges_exact = to_double(classic_exchanges_from(n, h));
        row.classic_exchanges_asym = nlogn / 3.0;
        row.classic_exchanges_ratio = row.classic_exchanges_exact / row.classic_exchanges_asym;
        row.variance_exact = to_double(dual_variance_from(n, h, h2));
        row.variance_asym = kVarianceConstant * nd * nd - 2.0 * nlogn;
        row.variance_ratio = row.variance_exact / row.variance_asym;
        row.exchange_ratio = row.dual_exchanges_exact / row.classic_exchanges_exact;
        row.variance_over_n_sq = row.variance_exact / (nd * nd);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dpqlab::oracle
