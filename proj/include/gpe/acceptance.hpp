#pragma once

#include <string>
#include <vector>

namespace gpe {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

/// Ids of every known criterion, in run order.
std::vector<int> criterion_ids();

/// Runs the numbered verification criteria, all of them when ids is empty.
/// Each criterion carries a time budget; exceeding it fails the criterion
/// even when the checks themselves hold. threads = 0 uses the OpenMP
/// default where a criterion does not pin its own thread count.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, int threads = 0);

} // namespace gpe
