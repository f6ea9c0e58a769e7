#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's trial-division engine.

#include <cstdint>
#include <random>

namespace testing_oracle {

inline bool is_prime_by_definition(std::uint64_t n) {
    std::uint64_t divisors = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) ++divisors;
    }
    return divisors == 2;
}

inline std::uint64_t linear_isqrt(std::uint64_t n) {
    std::uint64_t s = 0;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

// Fixed seed so failures reproduce.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64{0x5eed1234ULL + salt}; }

}  // namespace testing_oracle
