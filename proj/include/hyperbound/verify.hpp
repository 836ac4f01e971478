#ifndef HYPERBOUND_VERIFY_HPP
#define HYPERBOUND_VERIFY_HPP

#include <string>
#include <vector>

#include "hyperbound/analysis.hpp"
#include "hyperbound/bounds.hpp"

namespace hyperbound {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;  // recorded values, or what failed
};

struct VerifyOptions {
    long long max_points = kDefaultMaxPoints;
    int s_max = 3;
};

/// Runs the full verification battery: closed-form count reproduction,
/// bound attainment, the tiny-case quadric classification, k_X values,
/// tangent-section counts, the Thas comparison sweep, the even-m
/// annotation, and the module property suites. Deterministic.
std::vector<CriterionResult> run_verification(const VerifyOptions& opt = {});

inline bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace hyperbound

#endif
