#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dpqlab/random.hpp"

using namespace dpqlab;

TEST_CASE("pair rank/unrank is a bijection") {
    for (std::uint64_t k = 2; k <= 40; ++k) {
        std::uint64_t rank = 0;
        for (std::uint64_t a = 0; a < k; ++a) {
            for (std::uint64_t b = a + 1; b < k; ++b) {
                CHECK(rank_pair(a, b, k) == rank);
                const auto [ua, ub] = unrank_pair(rank, k);
                CHECK(ua == a);
                CHECK(ub == b);
                ++rank;
            }
        }
        CHECK(rank == pair_count(k));
    }
}

TEST_CASE("seeded source is deterministic and in range") {
    SeededSource a(123), b(123), c(124);
    bool diverged = false;
    for (int t = 0; t < 1000; ++t) {
        const std::uint64_t va = a.uniform_index(97);
        CHECK(va < 97);
        CHECK(va == b.uniform_index(97));
        if (va != c.uniform_index(97)) diverged = true;
    }
    CHECK(diverged);

    SeededSource d(5);
    CHECK(d.uniform_index(1) == 0);
    CHECK_THROWS_AS(d.uniform_index(0), std::invalid_argument);
}

TEST_CASE("uniform_pair draws cover all pairs roughly evenly") {
    // k = 8 gives 28 cells; chi-square over 28000 draws. With 27 degrees of
    // freedom a statistic of 60 is far out in the tail, so a fixed seed that
    // behaves sits comfortably below it.
    constexpr std::uint64_t k = 8;
    const std::uint64_t cells = pair_count(k);
    const std::uint64_t draws = 1000 * cells;
    SeededSource src(2024);
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> histogram;
    for (std::uint64_t t = 0; t < draws; ++t) {
        const auto p = src.uniform_pair(k);
        CHECK(p.first < p.second);
        CHECK(p.second < k);
        ++histogram[p];
    }
    CHECK(histogram.size() == cells);
    const double expected = static_cast<double>(draws) / static_cast<double>(cells);
    double chi_sq = 0;
    for (const auto& [pair, count] : histogram) {
        const double d = static_cast<double>(count) - expected;
        chi_sq += d * d / expected;
    }
    CHECK(chi_sq < 60.0);

    SeededSource tiny(1);
    CHECK_THROWS_AS(tiny.uniform_pair(1), std::invalid_argument);
}

TEST_CASE("splitmix64_at jumps match sequential generation and spread") {
    // Consistency: position t equals t+1 steps of the sequential recurrence.
    const std::uint64_t seed = 42;
    std::uint64_t state = seed;
    for (std::uint64_t t = 0; t < 64; ++t) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z = z ^ (z >> 31);
        CHECK(splitmix64_at(seed, t) == z);
    }

    // Distinctness across trials and nearby seeds.
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 4; ++s) {
        for (std::uint64_t t = 0; t < 512; ++t) seen.insert(splitmix64_at(s, t));
    }
    CHECK(seen.size() == 4 * 512);
}
