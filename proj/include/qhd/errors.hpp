#pragma once

#include <stdexcept>
#include <string>

namespace qhd {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad expression text. `pos` is a 0-based offset into the input string.
struct parse_error : error {
    std::size_t pos;
    parse_error(std::size_t p, const std::string& msg)
        : error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Division by zero, pole of a rational function, singular matrix, degenerate
// parameter point.
struct domain_error : error {
    using error::error;
};

// A rewrite did not finish within its step budget.
struct budget_error : error {
    using error::error;
};

} // namespace qhd
