#pragma once

#include <stdexcept>
#include <string>

namespace linemat {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad parameters, points outside the ground set, bad JSON.
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

// An enumeration refused to run past its configured budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// A randomized construction failed its exact genericity postcondition.
struct NonGenericError : Error {
    explicit NonGenericError(const std::string& what) : Error(what) {}
};

// Random-weight independence tests disagreed across seeds; caller should resample.
struct CollisionError : Error {
    explicit CollisionError(const std::string& what) : Error(what) {}
};

} // namespace linemat
