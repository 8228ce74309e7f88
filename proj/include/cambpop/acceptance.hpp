#pragma once

#include <string>
#include <vector>

namespace cambpop {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // counts on success, first counterexample on failure
};

struct AcceptanceOptions {
    int jobs = 1;
    bool include_h4 = false;             // H4 image sweep (slow, optional)
    std::vector<int> only;               // run these criteria only; empty = all
};

// The ten acceptance criteria; exact checks throughout.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

} // namespace cambpop
