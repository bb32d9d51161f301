#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "isac/config.hpp"

namespace isac {

struct CheckResult {
    std::string id;
    bool hard = true;     // hard checks gate the exit code; soft ones only warn
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

struct ValidationOptions {
    std::uint64_t seed = 1;
    int threads = 0;
};

// Runs the full validation suite against the baseline deployment parameters,
// one CheckResult per criterion, streaming one line per check to `log`.
std::vector<CheckResult> run_validation(const ValidationOptions& opt, std::ostream& log);

bool any_hard_failure(const std::vector<CheckResult>& results);

std::string validation_report_csv(const std::vector<CheckResult>& results,
                                  const RunConfig& cfg);

}  // namespace isac
