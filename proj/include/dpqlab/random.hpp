#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace dpqlab {

// Number of unordered pairs over k items.
inline std::uint64_t pair_count(std::uint64_t k) {
    return k * (k - 1) / 2;
}

// Bijection between [0, pair_count(k)) and unordered pairs 0 <= a < b < k.
// Ranks run row-major: (0,1), (0,2), ..., (0,k-1), (1,2), ...
std::pair<std::uint64_t, std::uint64_t> unrank_pair(std::uint64_t rank, std::uint64_t k);
std::uint64_t rank_pair(std::uint64_t a, std::uint64_t b, std::uint64_t k);

// Source of randomness for the instrumented sorts. Only uniform_index is
// primitive; uniform_pair is a fixed mapping on top so that one pivot-pair
// draw always consumes exactly one index draw (the enumeration walker in
// enumerate.hpp depends on that).
class RandomSource {
public:
    virtual ~RandomSource() = default;

    // Uniform draw from [0, count); count must be >= 1.
    virtual std::uint64_t uniform_index(std::uint64_t count) = 0;

    // Uniform draw over all pair_count(count) unordered pairs, count >= 2.
    std::pair<std::uint64_t, std::uint64_t> uniform_pair(std::uint64_t count);
};

// Deterministic seeded source. mt19937_64 has a standard-mandated stream, and
// the rejection step below is plain arithmetic, so a given seed produces the
// same draws on every platform.
class SeededSource final : public RandomSource {
public:
    explicit SeededSource(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t uniform_index(std::uint64_t count) override;

private:
    std::mt19937_64 gen_;
};

// t-th output of the splitmix64 sequence started at seed, in O(1). Used to
// give Monte Carlo trial t its own independent stream.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t t);

}  // namespace dpqlab
