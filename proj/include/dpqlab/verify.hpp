#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dpqlab::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // on failure: first offending (metric, n, expected, got)
};

// Full consistency battery: closed forms against recurrences, law moments
// against closed forms, enumeration of the real sorts against the law DP
// (n <= 7), mean-toll identities, harmonic identities. n_max >= 4 (throws
// std::invalid_argument below that), dist_cap bounds the law-consistency
// range and must stay within the exact distribution cap.
std::vector<CheckResult> run_verification(std::size_t n_max, std::size_t dist_cap);

}  // namespace dpqlab::verify
