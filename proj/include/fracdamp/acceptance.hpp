#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracdamp/analytic.hpp"

namespace fracdamp::acceptance {

enum class Suite { Quick, Full };

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    double measured;
    double threshold;
    std::string detail;
};

/// Runs every acceptance criterion at its pinned tolerance. Quick shrinks
/// only the oracle-agreement step sizes (h = 4e-3 / 2e-3 instead of
/// 1e-3 / 5e-4); every threshold stays the same.
std::vector<CriterionResult> run_suite(Suite suite,
                                       const analytic::DecayQuadratureConfig& cfg = {});

/// One pass/fail line per criterion plus a summary; returns the number of
/// failed criteria.
int print_report(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace fracdamp::acceptance
