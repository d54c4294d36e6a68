#pragma once

#include <stdexcept>
#include <string>

namespace priordan {

// Raised when two routes that must agree (closed form vs. recursion,
// matrix oracle vs. summation formula, ...) produce different values.
// The CLI maps this to exit status 2; plain input errors use
// std::invalid_argument and map to exit status 1.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace priordan
