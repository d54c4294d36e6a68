#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace priordan::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string summary;                     // what was checked / what broke
    nlohmann::ordered_json counterexample;   // null when passed
};

/// Runs the whole verification battery. Every criterion has a fixed range
/// baked in; max_n > 0 additionally caps every order/length parameter at
/// max_n (for quick runs). Exact equality everywhere, no tolerances.
std::vector<CriterionResult> run_acceptance(int max_n = 0);

} // namespace priordan::verify
