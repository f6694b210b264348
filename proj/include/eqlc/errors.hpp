#pragma once

#include <stdexcept>
#include <string>

namespace eqlc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// |a| != |b| where equal weights are required.
struct WeightMismatchError : Error {
    using Error::Error;
};

// A class function failed to decompose with non-negative integer multiplicities.
struct VirtualCharacterError : Error {
    std::string witness;
    VirtualCharacterError(const std::string& msg, std::string w)
        : Error(msg), witness(std::move(w)) {}
};

// H0 subtraction went negative: the input is not an induced module.
struct NotInducedError : Error {
    int degree;
    std::string witness;
    NotInducedError(const std::string& msg, int n, std::string w)
        : Error(msg), degree(n), witness(std::move(w)) {}
};

// The consistency window above the vanishing bound failed to reproduce the input.
struct VanishBoundError : Error {
    int degree;
    VanishBoundError(const std::string& msg, int n) : Error(msg), degree(n) {}
};

struct UndefinedDegreeError : Error {
    using Error::Error;
};

struct CacheCorruptError : Error {
    using Error::Error;
};

// Oracle basis would exceed the configured monomial budget; caller should use tier 2.
struct BudgetExceededError : Error {
    using Error::Error;
};

struct CalibrationError : Error {
    using Error::Error;
};

struct IndexRangeError : Error {
    using Error::Error;
};

}  // namespace eqlc
