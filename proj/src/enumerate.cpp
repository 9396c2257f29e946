#include "dpqlab/enumerate.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace dpqlab {

namespace {

// Replays a prescribed prefix of draw choices and auto-extends it with
// first-option picks. One run of the sort under this source visits one leaf
// of the choice tree; the recorded option counts give the leaf probability
// and drive the depth-first walk over all leaves.
struct PathEntry {
    std::uint64_t choice;
    std::uint64_t options;
};

class PathSource final : public RandomSource {
public:
    explicit PathSource(std::vector<PathEntry>& path) : path_(path) {}

    std::uint64_t uniform_index(std::uint64_t count) override {
        if (pos_ < path_.size()) {
            // Same input and same prior choices give the same draw shape.
            assert(path_[pos_].options == count);
            return path_[pos_++].choice;
        }
        path_.push_back({0, count});
        ++pos_;
        return 0;
    }

private:
    std::vector<PathEntry>& path_;
    std::size_t pos_ = 0;
};

}  // namespace

oracle::CostDistribution enumerate_distribution(const KeyArray& input, Algorithm algorithm,
                                                Metric metric, std::size_t cap) {
    if (algorithm == Algorithm::classic && metric == Metric::exchanges) {
        throw std::domain_error(
            "enumerate_distribution: classic exchanges are outside the cost model");
    }
    if (input.size() > cap) {
        throw std::length_error("enumerate_distribution: n = " + std::to_string(input.size()) +
                                " exceeds the enumeration cap " + std::to_string(cap));
    }

    oracle::CostDistribution dist;
    dist.n = input.size();
    dist.metric = metric;

    std::vector<PathEntry> path;
    while (true) {
        KeyArray keys = input;
        PathSource source(path);
        const CostCounters counters = algorithm == Algorithm::dual
                                          ? dual_pivot_quicksort(keys, source)
                                          : classic_quicksort(keys, source);

        Rational leaf_probability(1);
        for (const PathEntry& e : path) leaf_probability /= static_cast<unsigned long>(e.options);
        dist.probs[counters.value(metric)] += leaf_probability;

        // Advance to the next leaf: drop exhausted tail entries, then bump the
        // deepest live choice. The next run re-extends the path from there.
        while (!path.empty() && path.back().choice + 1 == path.back().options) path.pop_back();
        if (path.empty()) break;
        ++path.back().choice;
    }
    return dist;
}

oracle::CostDistribution enumerate_distribution(std::size_t n, Algorithm algorithm,
                                                Metric metric, std::size_t cap) {
    KeyArray identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<Key>(i) + 1;
    return enumerate_distribution(identity, algorithm, metric, cap);
}

}  // namespace dpqlab
