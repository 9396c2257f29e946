#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dpqlab/counters.hpp"
#include "dpqlab/random.hpp"

namespace dpqlab {

using Key = std::int64_t;
using KeyArray = std::vector<Key>;

// Result of one dual-pivot partition stage. Ranks are 1-based within the
// segment; with segment size k and pivot ranks i < j the counter deltas are
//   comparisons: 1 + (i-1) + 2(j-i-1) + 2(k-j)
//   exchanges:   (i-1) + (k-j) + 2
//   stages:      1
// i.e. one pivot-ordering comparison, one comparison per key below the small
// pivot, two per remaining key, one exchange per key outside the pivots plus
// the two final pivot placements.
struct PartitionOutcome {
    std::uint64_t small_pivot_rank = 0;  // i
    std::uint64_t large_pivot_rank = 0;  // j
    std::uint64_t left_size = 0;         // keys below the small pivot
    std::uint64_t middle_size = 0;       // keys between the pivots
    std::uint64_t right_size = 0;        // keys above the large pivot
    CostCounters counter_delta;
};

using StageObserver = std::function<void(const PartitionOutcome&)>;

// Uniform random permutation of 1..n (Fisher-Yates driven by rand).
KeyArray generate_permutation(std::size_t n, RandomSource& rand);

// One dual-pivot stage over a segment of size >= 2: draws the pivot pair
// uniformly over all position pairs, physically rearranges the segment into
// [below | small pivot | between | large pivot | above], and accumulates the
// model counter deltas above. The physical swap count of the rearrangement is
// deliberately not what the exchanges counter records.
PartitionOutcome dual_pivot_partition(std::span<Key> segment, RandomSource& rand,
                                      CostCounters& counters);

// Full sorts with cutoff 0: segments of size <= 1 cost nothing, a segment of
// size 2 still runs one partition stage. Sorts in place, returns the counters.
// The observer, when set, sees every dual partition outcome (test hook).
CostCounters dual_pivot_quicksort(KeyArray& keys, RandomSource& rand,
                                  const StageObserver& observe = {});

// Single-pivot baseline: uniform pivot position, one stage costs k-1
// comparisons and 1 stage on a segment of size k. Its exchange behaviour is
// not part of the cost model, so the exchanges counter stays 0.
CostCounters classic_quicksort(KeyArray& keys, RandomSource& rand);

}  // namespace dpqlab
