#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcloc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;  // nonempty on failure
};

// The full verification battery: nine criteria, each a self-contained
// exact check with its wall-clock budget.  `only` restricts to one id.
std::vector<CriterionResult> runAcceptance(uint64_t seed = 2024, int only = 0,
                                           bool parallel = true);

// helper shared with the CLI: formats one result line
std::string formatCriterion(const CriterionResult& r);

}  // namespace mcloc
