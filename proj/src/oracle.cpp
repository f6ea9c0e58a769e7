#include "primesum/oracle.hpp"

#include <algorithm>
#include <string>

#include "primesum/errors.hpp"

namespace primesum::oracle {

std::uint64_t SieveTable::prime_count() const {
    return static_cast<std::uint64_t>(std::count(flags.begin(), flags.end(), true));
}

std::vector<std::uint64_t> SieveTable::primes() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= limit; ++n) {
        if (flags[n]) out.push_back(n);
    }
    return out;
}

SieveTable build_sieve(std::uint64_t limit, std::uint64_t max_limit) {
    if (limit > max_limit) {
        throw CostGuardError("sieve limit " + std::to_string(limit) + " exceeds the memory budget of " +
                                 std::to_string(max_limit),
                             limit, max_limit);
    }
    SieveTable table;
    table.limit = limit;
    table.flags.assign(limit + 1, true);
    table.flags[0] = false;
    if (limit >= 1) table.flags[1] = false;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!table.flags[p]) continue;
        for (std::uint64_t m = p * p; m <= limit; m += p) table.flags[m] = false;
    }
    return table;
}

std::uint64_t prime_sum(const SieveTable& table) {
    std::uint64_t sum = 0;
    for (std::uint64_t n = 2; n <= table.limit; ++n) {
        if (table.flags[n]) checked_add(sum, n, "oracle prime sum");
    }
    return sum;
}

std::uint64_t oracle_prime_sum(std::uint64_t limit, std::uint64_t max_limit) {
    return prime_sum(build_sieve(limit, max_limit));
}

std::uint64_t count_factors(std::uint64_t n) {
    if (n == 0) throw ContractError("count_factors requires n >= 1");
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) ++count;
        if (d == n) break;
    }
    return count;
}

}  // namespace primesum::oracle
