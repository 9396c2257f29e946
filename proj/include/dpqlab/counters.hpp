#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace dpqlab {

enum class Algorithm { dual, classic };
enum class Metric { comparisons, exchanges, stages };

// Model cost counters accumulated over one sorting run. These follow the cost
// semantics of the analysis, not the physical operation count of the
// rearrangement loop (see sort.hpp).
struct CostCounters {
    std::uint64_t comparisons = 0;
    std::uint64_t exchanges = 0;
    std::uint64_t stages = 0;

    std::uint64_t value(Metric m) const {
        switch (m) {
            case Metric::comparisons: return comparisons;
            case Metric::exchanges: return exchanges;
            case Metric::stages: return stages;
        }
        return 0;
    }

    CostCounters& operator+=(const CostCounters& o) {
        comparisons += o.comparisons;
        exchanges += o.exchanges;
        stages += o.stages;
        return *this;
    }

    bool operator==(const CostCounters&) const = default;
};

inline std::string_view name(Algorithm a) {
    return a == Algorithm::dual ? "dual" : "classic";
}

inline std::string_view name(Metric m) {
    switch (m) {
        case Metric::comparisons: return "comparisons";
        case Metric::exchanges: return "exchanges";
        case Metric::stages: return "stages";
    }
    return "?";
}

inline std::optional<Algorithm> algorithm_from_name(std::string_view s) {
    if (s == "dual") return Algorithm::dual;
    if (s == "classic") return Algorithm::classic;
    return std::nullopt;
}

inline std::optional<Metric> metric_from_name(std::string_view s) {
    if (s == "comparisons") return Metric::comparisons;
    if (s == "exchanges") return Metric::exchanges;
    if (s == "stages") return Metric::stages;
    return std::nullopt;
}

}  // namespace dpqlab
