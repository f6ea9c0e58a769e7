#pragma once

#include <cstdint>

namespace primesum {

// Largest s with s*s <= n. Digit-by-digit, no floating point anywhere.
constexpr std::uint64_t integer_sqrt(std::uint64_t n) noexcept {
    std::uint64_t root = 0;
    std::uint64_t bit = std::uint64_t{1} << 62;
    while (bit > n) bit >>= 2;
    while (bit != 0) {
        if (n >= root + bit) {
            n -= root + bit;
            root = (root >> 1) + bit;
        } else {
            root >>= 1;
        }
        bit >>= 2;
    }
    return root;
}

}  // namespace primesum
