#include "dpqlab/random.hpp"

#include <stdexcept>

namespace dpqlab {

std::pair<std::uint64_t, std::uint64_t> unrank_pair(std::uint64_t rank, std::uint64_t k) {
    if (k < 2 || rank >= pair_count(k)) throw std::invalid_argument("unrank_pair: out of range");
    // Walk the rows (a, a+1..k-1); row a holds k-1-a pairs.
    std::uint64_t a = 0;
    std::uint64_t row = k - 1;
    while (rank >= row) {
        rank -= row;
        ++a;
        --row;
    }
    return {a, a + 1 + rank};
}

std::uint64_t rank_pair(std::uint64_t a, std::uint64_t b, std::uint64_t k) {
    if (!(a < b && b < k)) throw std::invalid_argument("rank_pair: need a < b < k");
    // Pairs before row a, plus the offset inside row a.
    return a * (2 * k - a - 1) / 2 + (b - a - 1);
}

std::pair<std::uint64_t, std::uint64_t> RandomSource::uniform_pair(std::uint64_t count) {
    if (count < 2) throw std::invalid_argument("uniform_pair: need count >= 2");
    return unrank_pair(uniform_index(pair_count(count)), count);
}

std::uint64_t SeededSource::uniform_index(std::uint64_t count) {
    if (count == 0) throw std::invalid_argument("uniform_index: need count >= 1");
    if (count == 1) return 0;
    // Rejection keeps the draw unbiased without touching the unportable
    // std::uniform_int_distribution.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % count;
    std::uint64_t r;
    do {
        r = gen_();
    } while (r >= limit);
    return r % count;
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t t) {
    // splitmix64 advances its state by a fixed increment and finalizes it, so
    // the t-th output is a pure function of (seed, t).
    std::uint64_t z = seed + (t + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace dpqlab
