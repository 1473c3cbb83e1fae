#pragma once

#include <string>
#include <vector>

namespace virasoro {

// One golden or property check over the worked examples.
struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = true;
    // Failed sub-checks first, prefixed "FAIL:"; informational lines after.
    std::vector<std::string> notes;
    double seconds = 0;
};

std::vector<int> check_ids();
CheckResult run_check(int id);

}  // namespace virasoro
