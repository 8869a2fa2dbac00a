#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

// A series/polynomial coefficient that must be a nonnegative integer is not.
struct IntegralityViolation : std::runtime_error {
    explicit IntegralityViolation(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computation routes that must agree exactly do not.
struct MismatchWithPipeline : std::runtime_error {
    explicit MismatchWithPipeline(const std::string& what) : std::runtime_error(what) {}
};

// An element of the deformation ring whose inverse was requested is not a unit.
struct NotAUnit : std::runtime_error {
    explicit NotAUnit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace moduli
