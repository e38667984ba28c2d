#pragma once

#include <string>
#include <vector>

namespace twistcode {

struct CriterionResult {
    int id = 0;
    std::string label;
    bool pass = false;
    std::string detail;
};

/// The paper-reproduction suite: every tolerance and threshold is pinned
/// here. Exceptions from any layer fail the criterion with the message in
/// `detail` instead of aborting the run.
std::vector<CriterionResult> run_acceptance(const std::string& data_dir = "");

} // namespace twistcode
