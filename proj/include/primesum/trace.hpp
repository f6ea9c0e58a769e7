#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primesum/strategy.hpp"

namespace primesum {

/// One recorded remainder evaluation `numerator % denominator`.
struct TraceEvent {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
    bool remainder_zero = false;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

inline constexpr std::uint64_t kMaxTraceEvents = 10'000'000;

/// Lists, in order, every remainder `is_prime_under(spec, n, ...)` would
/// evaluate. Kept apart from the bulk classifier so bulk runs never allocate.
/// Throws ContractError for candidates the spec cannot receive and
/// CostGuardError when the divisor range is longer than `max_events`.
std::vector<TraceEvent> trace_candidate(const StrategySpec& spec, std::uint64_t n,
                                        std::uint64_t max_events = kMaxTraceEvents);

/// "N%D N%D ..." in event order; empty input gives "".
std::string render_trace(const std::vector<TraceEvent>& events);

}  // namespace primesum
