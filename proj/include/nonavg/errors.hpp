#pragma once

#include <stdexcept>
#include <string>

namespace nonavg {

// Arithmetic that would wrap throws instead; results are exact or loud.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource budget was exceeded. Never a silent truncation.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input or a violated precondition.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : InvalidInput {
    explicit DimensionMismatch(const std::string& msg) : InvalidInput(msg) {}
};

}  // namespace nonavg
