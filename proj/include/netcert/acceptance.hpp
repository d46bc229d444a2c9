#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace netcert {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The built-in release gate: eight end-to-end checks covering the canonical
// realizations, classical bounds, algebraic certificates, see-saw recovery,
// sampling statistics, the auxiliary inequalities, and visibility scaling.
std::vector<CriterionResult> run_acceptance();

// Prints one PASS/FAIL line per criterion; returns true when all pass.
bool print_acceptance(std::ostream& out);

}  // namespace netcert
