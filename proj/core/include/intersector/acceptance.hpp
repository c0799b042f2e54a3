#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace intersector {

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

struct AcceptanceOptions {
    unsigned threads = 1;
};

/// Runs criteria 1..9 and prints one PASS/FAIL line per criterion to `log`.
std::vector<CriterionOutcome> run_acceptance(std::ostream& log, const AcceptanceOptions& opts = {});

}  // namespace intersector
