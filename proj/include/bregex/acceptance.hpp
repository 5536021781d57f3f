#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bregex::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs every acceptance criterion, printing one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_all(std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace bregex::acceptance
