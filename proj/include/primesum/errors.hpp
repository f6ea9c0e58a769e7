#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primesum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (e.g. an even candidate handed
/// to an odd-only strategy). Never silently corrected.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Bad command-line input or inconsistent request (mixed limits, empty set).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A 64-bit accumulator would have wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Results that must agree do not; indicates a strategy bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// A run was refused up front because its estimated cost exceeds the budget.
class CostGuardError : public Error {
public:
    CostGuardError(const std::string& what, std::uint64_t estimate, std::uint64_t budget)
        : Error(what), estimate_(estimate), budget_(budget) {}

    std::uint64_t estimate() const noexcept { return estimate_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t estimate_;
    std::uint64_t budget_;
};

/// Adds `b` to `a` in place, throwing OverflowError on wraparound.
inline void checked_add(std::uint64_t& a, std::uint64_t b, const char* what) {
    if (__builtin_add_overflow(a, b, &a)) {
        throw OverflowError(std::string(what) + " overflowed 64 bits");
    }
}

}  // namespace primesum
