#pragma once

// The verification battery: each check pins an expected result of the
// enumerations to a concrete number or cross-method comparison and reports
// pass/fail with the values it saw.  The CLI's paper subcommand and the
// acceptance runner both drive this.

#include <string>
#include <vector>

namespace grace {

inline constexpr int battery_size = 11;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct BatteryResult {
    std::vector<CriterionResult> results;
    bool all_pass = true;
};

// id in 1..battery_size
CriterionResult run_criterion(int id, int jobs = 1);

BatteryResult run_battery(int jobs = 1);

}  // namespace grace
