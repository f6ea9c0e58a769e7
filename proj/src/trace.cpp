#include "primesum/trace.hpp"

#include "primesum/errors.hpp"

namespace primesum {

std::vector<TraceEvent> trace_candidate(const StrategySpec& spec, std::uint64_t n,
                                        std::uint64_t max_events) {
    check_candidate(spec, n);

    const std::uint64_t first = spec.denominator_start;
    const std::uint64_t last = divisor_upper_bound(spec, n);
    const std::uint64_t step = spec.denominator_step;
    const std::uint64_t range = last < first ? 0 : (last - first) / step + 1;
    if (range > max_events) {
        throw CostGuardError("trace of " + std::to_string(n) + " under " +
                                 std::string(to_string(spec.id)) + " spans " +
                                 std::to_string(range) + " divisors, over the trace cap of " +
                                 std::to_string(max_events),
                             range, max_events);
    }

    std::vector<TraceEvent> events;
    events.reserve(spec.early_exit ? 1 : range);
    for (std::uint64_t i = 0; i < range; ++i) {
        const std::uint64_t d = first + i * step;
        const bool hit = n % d == 0;
        events.push_back({n, d, hit});
        if (hit && spec.early_exit) break;
    }
    return events;
}

std::string render_trace(const std::vector<TraceEvent>& events) {
    std::string text;
    for (const auto& e : events) {
        if (!text.empty()) text += ' ';
        text += std::to_string(e.numerator);
        text += '%';
        text += std::to_string(e.denominator);
    }
    return text;
}

}  // namespace primesum
