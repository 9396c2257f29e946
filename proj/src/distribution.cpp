#include "dpqlab/distribution.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpqlab/oracle.hpp"
#include "dpqlab/random.hpp"

namespace dpqlab::oracle {

Rational probability_sum(const CostDistribution& d) {
    Rational s = 0;
    for (const auto& [value, p] : d.probs) s += p;
    return s;
}

Rational mean_of(const CostDistribution& d) {
    Rational s = 0;
    for (const auto& [value, p] : d.probs) s += static_cast<unsigned long>(value) * p;
    return s;
}

Rational variance_of(const CostDistribution& d) {
    Rational sq = 0;
    for (const auto& [value, p] : d.probs) {
        const Rational v(static_cast<unsigned long>(value));
        sq += v * v * p;
    }
    const Rational m = mean_of(d);
    return sq - m * m;
}

Rational factorial_moment_of(const CostDistribution& d) {
    Rational s = 0;
    for (const auto& [value, p] : d.probs) {
        const Rational v(static_cast<unsigned long>(value));
        s += v * (v - 1) * p;
    }
    return s;
}

double mean_of(const FloatCostDistribution& d) {
    double s = 0;
    for (const auto& [value, p] : d.probs) s += static_cast<double>(value) * p;
    return s;
}

double variance_of(const FloatCostDistribution& d) {
    const double m = mean_of(d);
    double s = 0;
    for (const auto& [value, p] : d.probs) {
        const double dv = static_cast<double>(value) - m;
        s += dv * dv * p;
    }
    return s;
}

namespace {

inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(double v) { return v == 0.0; }

// Toll of one stage at size n with pivot ranks i < j: the partition counter
// deltas from sort.hpp, averaged over nothing (exact per-pair values).
std::uint64_t stage_toll(Metric metric, std::uint64_t i, std::uint64_t j, std::uint64_t n) {
    switch (metric) {
        case Metric::comparisons: return 2 * n - i - 2;
        case Metric::exchanges: return (i - 1) + (n - j) + 2;
        case Metric::stages: return 1;
    }
    return 0;
}

// Dense probability mass over offset..offset+mass.size()-1.
template <typename V>
struct DensePmf {
    std::uint64_t offset = 0;
    std::vector<V> mass;
};

template <typename V>
DensePmf<V> point_mass_zero() {
    DensePmf<V> p;
    p.mass.assign(1, V(1));
    return p;
}

template <typename V>
DensePmf<V> convolve(const DensePmf<V>& a, const DensePmf<V>& b) {
    DensePmf<V> r;
    r.offset = a.offset + b.offset;
    r.mass.assign(a.mass.size() + b.mass.size() - 1, V(0));
    for (std::size_t x = 0; x < a.mass.size(); ++x) {
        if (is_zero(a.mass[x])) continue;
        for (std::size_t y = 0; y < b.mass.size(); ++y) {
            if (is_zero(b.mass[y])) continue;
            r.mass[x + y] += a.mass[x] * b.mass[y];
        }
    }
    return r;
}

// Laws for sizes 0..n_max. A stage at size n with pivot ranks (i, j) splits
// the remaining keys into independent sub-laws of sizes i-1, j-i-1, n-j; the
// size-n law is the pair-uniform mixture of those triple convolutions shifted
// by the stage toll. The convolution of a triple only depends on the sorted
// size multiset, so it is computed once per multiset and reused across the
// pairs (the tolls still differ per pair).
template <typename V>
std::vector<DensePmf<V>> law_table(Metric metric, std::size_t n_max) {
    std::vector<DensePmf<V>> laws(n_max + 1);
    laws[0] = point_mass_zero<V>();
    if (n_max >= 1) laws[1] = point_mass_zero<V>();

    std::map<std::pair<std::size_t, std::size_t>, DensePmf<V>> pair_memo;
    const auto pair_conv = [&](std::size_t a, std::size_t b) -> const DensePmf<V>& {
        auto it = pair_memo.find({a, b});
        if (it == pair_memo.end()) {
            it = pair_memo.emplace(std::make_pair(a, b), convolve(laws[a], laws[b])).first;
        }
        return it->second;
    };

    for (std::size_t n = 2; n <= n_max; ++n) {
        std::map<std::array<std::size_t, 3>, DensePmf<V>> triples;
        struct Contribution {
            const DensePmf<V>* pmf;
            std::uint64_t shift;
        };
        std::vector<Contribution> contribs;
        contribs.reserve(pair_count(n));

        for (std::uint64_t i = 1; i < n; ++i) {
            for (std::uint64_t j = i + 1; j <= n; ++j) {
                std::array<std::size_t, 3> sizes = {static_cast<std::size_t>(i - 1),
                                                    static_cast<std::size_t>(j - i - 1),
                                                    static_cast<std::size_t>(n - j)};
                std::sort(sizes.begin(), sizes.end());
                auto it = triples.find(sizes);
                if (it == triples.end()) {
                    it = triples
                             .emplace(sizes,
                                      convolve(pair_conv(sizes[0], sizes[1]), laws[sizes[2]]))
                             .first;
                }
                contribs.push_back({&it->second, stage_toll(metric, i, j, n)});
            }
        }

        std::uint64_t lo = UINT64_MAX;
        std::uint64_t hi = 0;
        for (const Contribution& c : contribs) {
            lo = std::min(lo, c.pmf->offset + c.shift);
            hi = std::max(hi, c.pmf->offset + c.shift + c.pmf->mass.size() - 1);
        }

        DensePmf<V> acc;
        acc.offset = lo;
        acc.mass.assign(hi - lo + 1, V(0));
        for (const Contribution& c : contribs) {
            const std::uint64_t base = c.pmf->offset + c.shift - lo;
            for (std::size_t x = 0; x < c.pmf->mass.size(); ++x) {
                if (is_zero(c.pmf->mass[x])) continue;
                acc.mass[base + x] += c.pmf->mass[x];
            }
        }
        const V inv = V(1) / V(static_cast<unsigned long>(pair_count(n)));
        for (V& m : acc.mass) m *= inv;
        laws[n] = std::move(acc);
    }
    return laws;
}

}  // namespace

std::vector<CostDistribution> cost_distribution(Metric metric, std::size_t n_max,
                                                std::size_t cap) {
    if (n_max > cap) {
        throw std::length_error("cost_distribution: exact laws are capped at n = " +
                                std::to_string(cap) +
                                "; use cost_distribution_float for larger sizes");
    }
    const auto laws = law_table<Rational>(metric, n_max);
    std::vector<CostDistribution> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out[n].n = n;
        out[n].metric = metric;
        for (std::size_t x = 0; x < laws[n].mass.size(); ++x) {
            if (is_zero(laws[n].mass[x])) continue;
            out[n].probs[laws[n].offset + x] = laws[n].mass[x];
        }
    }
    return out;
}

std::vector<FloatCostDistribution> cost_distribution_float(Metric metric, std::size_t n_max,
                                                           std::size_t cap) {
    if (n_max > cap) {
        throw std::length_error("cost_distribution_float: capped at n = " + std::to_string(cap));
    }
    const auto laws = law_table<double>(metric, n_max);
    std::vector<FloatCostDistribution> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out[n].n = n;
        out[n].metric = metric;
        for (std::size_t x = 0; x < laws[n].mass.size(); ++x) {
            if (is_zero(laws[n].mass[x])) continue;
            out[n].probs[laws[n].offset + x] = laws[n].mass[x];
        }
    }
    return out;
}

}  // namespace dpqlab::oracle
