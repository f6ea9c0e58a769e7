#pragma once

#include <cstdint>
#include <vector>

// Ground truth for the strategies: a plain sieve and a naive divisor counter.
// Neither shares code with the trial-division engine.

namespace primesum::oracle {

inline constexpr std::uint64_t kDefaultSieveLimit = std::uint64_t{1} << 31;

struct SieveTable {
    std::uint64_t limit = 0;
    std::vector<bool> flags;  // flags[n] is true iff n is prime, n in [0, limit]

    bool is_prime(std::uint64_t n) const { return n <= limit && flags[n]; }
    std::uint64_t prime_count() const;
    std::vector<std::uint64_t> primes() const;
};

/// Throws CostGuardError when limit exceeds max_limit.
SieveTable build_sieve(std::uint64_t limit, std::uint64_t max_limit = kDefaultSieveLimit);

/// Sum of primes <= limit. Throws OverflowError rather than wrapping.
std::uint64_t oracle_prime_sum(std::uint64_t limit, std::uint64_t max_limit = kDefaultSieveLimit);

/// Same sum, taken from an existing table.
std::uint64_t prime_sum(const SieveTable& table);

/// |{d in [1, n] : n mod d == 0}|. Throws ContractError for n == 0.
std::uint64_t count_factors(std::uint64_t n);

}  // namespace primesum::oracle
