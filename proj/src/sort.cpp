#include "dpqlab/sort.hpp"

#include <stdexcept>
#include <utility>

namespace dpqlab {

KeyArray generate_permutation(std::size_t n, RandomSource& rand) {
    KeyArray keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = static_cast<Key>(i) + 1;
    for (std::size_t i = n; i > 1; --i) {
        const std::uint64_t j = rand.uniform_index(i);
        std::swap(keys[i - 1], keys[j]);
    }
    return keys;
}

PartitionOutcome dual_pivot_partition(std::span<Key> segment, RandomSource& rand,
                                      CostCounters& counters) {
    const std::size_t k = segment.size();
    if (k < 2) throw std::invalid_argument("dual_pivot_partition: need segment size >= 2");

    // One draw over all position pairs; distinct keys make position pairs and
    // value pairs interchangeable, so the rank pair (i, j) below is uniform.
    const auto [pa, pb] = rand.uniform_pair(k);
    std::swap(segment[0], segment[pa]);
    std::swap(segment[k - 1], segment[pb]);
    if (segment[0] > segment[k - 1]) std::swap(segment[0], segment[k - 1]);
    const Key p1 = segment[0];
    const Key p2 = segment[k - 1];

    // Single forward pass with a low and a high cursor. Keys below p1 go left,
    // keys above p2 collect right, the rest stay in the middle.
    std::size_t lt = 1;
    std::size_t gt = k - 2;
    std::size_t i = 1;
    while (i <= gt) {
        if (segment[i] < p1) {
            std::swap(segment[i], segment[lt]);
            ++lt;
            ++i;
        } else if (segment[i] > p2) {
            while (i < gt && segment[gt] > p2) --gt;
            std::swap(segment[i], segment[gt]);
            --gt;
            // The key swapped in still needs its own classification.
            if (segment[i] < p1) {
                std::swap(segment[i], segment[lt]);
                ++lt;
            }
            ++i;
        } else {
            ++i;
        }
    }
    std::swap(segment[0], segment[lt - 1]);
    std::swap(segment[k - 1], segment[gt + 1]);

    PartitionOutcome out;
    out.left_size = lt - 1;
    out.middle_size = gt + 1 - lt;
    out.right_size = k - 2 - gt;
    out.small_pivot_rank = out.left_size + 1;
    out.large_pivot_rank = out.left_size + out.middle_size + 2;

    // Model costs, driven purely by how many keys fall into each region: one
    // comparison to order the pivots, one per key below p1, two per key at or
    // above p1; one exchange per key outside [p1, p2] plus the two pivot
    // placements. Not the swap count of the loop above.
    out.counter_delta.comparisons = 1 + out.left_size + 2 * (out.middle_size + out.right_size);
    out.counter_delta.exchanges = out.left_size + out.right_size + 2;
    out.counter_delta.stages = 1;
    counters += out.counter_delta;
    return out;
}

namespace {

void dual_sort_segment(std::span<Key> segment, RandomSource& rand, CostCounters& counters,
                       const StageObserver& observe) {
    if (segment.size() < 2) return;
    const PartitionOutcome out = dual_pivot_partition(segment, rand, counters);
    if (observe) observe(out);
    dual_sort_segment(segment.subspan(0, out.left_size), rand, counters, observe);
    dual_sort_segment(segment.subspan(out.left_size + 1, out.middle_size), rand, counters,
                      observe);
    dual_sort_segment(segment.subspan(segment.size() - out.right_size), rand, counters, observe);
}

void classic_sort_segment(std::span<Key> segment, RandomSource& rand, CostCounters& counters) {
    const std::size_t k = segment.size();
    if (k < 2) return;
    counters.comparisons += k - 1;
    counters.stages += 1;

    const std::uint64_t p = rand.uniform_index(k);
    std::swap(segment[p], segment[k - 1]);
    const Key pivot = segment[k - 1];
    std::size_t store = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (segment[i] < pivot) {
            std::swap(segment[i], segment[store]);
            ++store;
        }
    }
    std::swap(segment[store], segment[k - 1]);

    classic_sort_segment(segment.subspan(0, store), rand, counters);
    classic_sort_segment(segment.subspan(store + 1), rand, counters);
}

}  // namespace

CostCounters dual_pivot_quicksort(KeyArray& keys, RandomSource& rand,
                                  const StageObserver& observe) {
    CostCounters counters;
    dual_sort_segment(std::span<Key>(keys), rand, counters, observe);
    return counters;
}

CostCounters classic_quicksort(KeyArray& keys, RandomSource& rand) {
    CostCounters counters;
    classic_sort_segment(std::span<Key>(keys), rand, counters);
    return counters;
}

}  // namespace dpqlab
