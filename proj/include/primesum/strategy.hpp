#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primesum/ledger.hpp"

namespace primesum {

/// The seven rungs of the trial-division ladder, slowest first.
enum class StrategyId : std::uint8_t { L1 = 1, L2, L3, L4, L5, L6, L7 };

inline constexpr std::array<StrategyId, 7> kAllStrategies = {
    StrategyId::L1, StrategyId::L2, StrategyId::L3, StrategyId::L4,
    StrategyId::L5, StrategyId::L6, StrategyId::L7};

std::string_view to_string(StrategyId id) noexcept;

/// Accepts "L1".."L7" (case-insensitive "l" allowed).
std::optional<StrategyId> parse_strategy_id(std::string_view text) noexcept;

/// Upper end of the trial-divisor range for candidate n.
enum class DivisorBound : std::uint8_t {
    Full,         // n
    ExcludeSelf,  // n - 1
    Half,         // floor(n / 2)
    Sqrt,         // floor(sqrt(n))
};

std::string_view to_string(DivisorBound bound) noexcept;

struct StrategySpec {
    StrategyId id = StrategyId::L1;
    std::uint64_t denominator_step = 1;
    std::uint64_t numerator_step = 1;
    std::uint64_t start_candidate = 2;
    std::uint64_t initial_sum = 0;
    std::uint64_t count_target = 2;
    std::uint64_t denominator_start = 1;
    DivisorBound denominator_bound = DivisorBound::Full;
    bool early_exit = false;

    friend bool operator==(const StrategySpec&, const StrategySpec&) = default;
};

StrategySpec canonical_spec(StrategyId id) noexcept;

/// Throws ContractError unless `n` is a candidate `spec` can receive: n >= 2,
/// n >= start_candidate, and n on the numerator stride from start_candidate.
void check_candidate(const StrategySpec& spec, std::uint64_t n);

/// Last divisor of the trial range for `n` (may be below denominator_start,
/// meaning the range is empty). Does not touch any ledger.
std::uint64_t divisor_upper_bound(const StrategySpec& spec, std::uint64_t n) noexcept;

/// Trial-divides `n` over the spec's divisor range and compares the number of
/// zero remainders with `count_target`. Each remainder costs one modulo op.
bool is_prime_under(const StrategySpec& spec, std::uint64_t n, CostLedger& ledger);

inline constexpr std::uint64_t kDefaultCostBudget = 10'000'000'000ULL;

/// Rough modulo-op count for sum_primes(spec, limit); saturates at UINT64_MAX.
std::uint64_t estimate_modulo_ops(const StrategySpec& spec, std::uint64_t limit) noexcept;

struct RunResult {
    std::uint64_t limit = 0;
    StrategySpec spec;
    std::uint64_t prime_sum = 0;
    CostLedger ledger;
    std::chrono::nanoseconds wall_time{0};

    /// Equality on everything except wall time.
    bool same_outcome(const RunResult& other) const noexcept {
        return limit == other.limit && spec == other.spec && prime_sum == other.prime_sum &&
               ledger == other.ledger;
    }
};

/// Sum of all primes <= limit (inclusive) computed with `spec`.
///
/// Limits below 2 give 0 for every spec; the seeded sum of the odd-only
/// strategies only applies once 2 is in range. Throws CostGuardError before
/// doing any work if estimate_modulo_ops exceeds `cost_budget`, and
/// OverflowError if the running sum wraps.
RunResult sum_primes(const StrategySpec& spec, std::uint64_t limit,
                     std::uint64_t cost_budget = kDefaultCostBudget);

/// Entry k holds sum_primes(spec, k).prime_sum for every k in [0, limit],
/// produced by a single pass of the same candidate scan. `ledger` receives the
/// cost of that one pass.
std::vector<std::uint64_t> prime_sum_series(const StrategySpec& spec, std::uint64_t limit,
                                            CostLedger& ledger,
                                            std::uint64_t cost_budget = kDefaultCostBudget);

}  // namespace primesum
