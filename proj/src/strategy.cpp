#include "primesum/strategy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "primesum/errors.hpp"
#include "primesum/integer_sqrt.hpp"

namespace primesum {

namespace {

// prime_sum_series keeps one 64-bit entry per integer.
constexpr std::uint64_t kMaxSeriesLimit = std::uint64_t{1} << 26;

void check_spec(const StrategySpec& spec) {
    if (spec.denominator_step == 0 || spec.numerator_step == 0) {
        throw ContractError("strategy " + std::string(to_string(spec.id)) +
                            ": steps must be positive");
    }
    if (spec.denominator_start == 0) {
        throw ContractError("strategy " + std::string(to_string(spec.id)) +
                            ": first trial divisor must be at least 1");
    }
    if (spec.start_candidate < 2) {
        throw ContractError("strategy " + std::string(to_string(spec.id)) +
                            ": first candidate must be at least 2");
    }
}

// Hot path; the caller has already validated spec and candidate.
bool classify(const StrategySpec& spec, std::uint64_t n, CostLedger& ledger) {
    if (spec.denominator_bound == DivisorBound::Sqrt) ++ledger.sqrt_evals;
    const std::uint64_t bound = divisor_upper_bound(spec, n);
    const std::uint64_t step = spec.denominator_step;

    std::uint64_t factors = 0;
    for (std::uint64_t d = spec.denominator_start; d <= bound;) {
        ++ledger.loop_iterations;
        ++ledger.modulo_ops;
        if (n % d == 0) {
            ++factors;
            if (spec.early_exit) break;
        }
        if (bound - d < step) break;
        d += step;
    }
    ++ledger.candidates_tested;
    return factors == spec.count_target;
}

// Walks candidates start, start+step, ... <= limit and reports the running
// sum after each one. Returns the final sum.
template <class OnCandidate>
std::uint64_t scan(const StrategySpec& spec, std::uint64_t limit, CostLedger& ledger,
                   OnCandidate&& on_candidate) {
    if (limit < 2) return 0;
    std::uint64_t sum = spec.initial_sum;
    for (std::uint64_t n = spec.start_candidate; n <= limit;) {
        if (classify(spec, n, ledger)) checked_add(sum, n, "prime sum");
        on_candidate(n, sum);
        if (limit - n < spec.numerator_step) break;
        n += spec.numerator_step;
    }
    return sum;
}

void enforce_budget(const StrategySpec& spec, std::uint64_t limit, std::uint64_t budget) {
    const std::uint64_t estimate = estimate_modulo_ops(spec, limit);
    if (estimate > budget) {
        throw CostGuardError(std::string(to_string(spec.id)) + " at limit " +
                                 std::to_string(limit) + " needs an estimated " +
                                 std::to_string(estimate) + " modulo operations, over the budget of " +
                                 std::to_string(budget),
                             estimate, budget);
    }
}

}  // namespace

std::string_view to_string(StrategyId id) noexcept {
    switch (id) {
        case StrategyId::L1: return "L1";
        case StrategyId::L2: return "L2";
        case StrategyId::L3: return "L3";
        case StrategyId::L4: return "L4";
        case StrategyId::L5: return "L5";
        case StrategyId::L6: return "L6";
        case StrategyId::L7: return "L7";
    }
    return "L?";
}

std::optional<StrategyId> parse_strategy_id(std::string_view text) noexcept {
    if (text.size() != 2 || (text[0] != 'L' && text[0] != 'l')) return std::nullopt;
    if (text[1] < '1' || text[1] > '7') return std::nullopt;
    return static_cast<StrategyId>(text[1] - '0');
}

std::string_view to_string(DivisorBound bound) noexcept {
    switch (bound) {
        case DivisorBound::Full: return "full";
        case DivisorBound::ExcludeSelf: return "exclude-self";
        case DivisorBound::Half: return "half";
        case DivisorBound::Sqrt: return "sqrt";
    }
    return "?";
}

StrategySpec canonical_spec(StrategyId id) noexcept {
    using B = DivisorBound;
    //                 id  dstep nstep start sum target dstart bound           exit
    switch (id) {
        case StrategyId::L1: return {id, 1, 1, 2, 0, 2, 1, B::Full, false};
        case StrategyId::L2: return {id, 1, 1, 2, 0, 0, 2, B::ExcludeSelf, false};
        case StrategyId::L3: return {id, 1, 1, 2, 0, 0, 2, B::Half, false};
        case StrategyId::L4: return {id, 1, 1, 2, 0, 0, 2, B::Sqrt, false};
        case StrategyId::L5: return {id, 1, 2, 3, 2, 0, 2, B::Sqrt, false};
        case StrategyId::L6: return {id, 2, 2, 3, 2, 0, 3, B::Sqrt, false};
        case StrategyId::L7: return {id, 2, 2, 3, 2, 0, 3, B::Sqrt, true};
    }
    return {};
}

void check_candidate(const StrategySpec& spec, std::uint64_t n) {
    check_spec(spec);
    const auto name = std::string(to_string(spec.id));
    if (n < spec.start_candidate) {
        throw ContractError(name + " only accepts candidates >= " +
                            std::to_string(spec.start_candidate) + ", got " + std::to_string(n));
    }
    if ((n - spec.start_candidate) % spec.numerator_step != 0) {
        throw ContractError(name + " only accepts candidates " + std::to_string(spec.start_candidate) +
                            " + k*" + std::to_string(spec.numerator_step) + ", got " +
                            std::to_string(n) +
                            (spec.numerator_step == 2 ? " (even candidates are never tested)" : ""));
    }
}

std::uint64_t divisor_upper_bound(const StrategySpec& spec, std::uint64_t n) noexcept {
    switch (spec.denominator_bound) {
        case DivisorBound::Full: return n;
        case DivisorBound::ExcludeSelf: return n == 0 ? 0 : n - 1;
        case DivisorBound::Half: return n / 2;
        case DivisorBound::Sqrt: return integer_sqrt(n);
    }
    return 0;
}

bool is_prime_under(const StrategySpec& spec, std::uint64_t n, CostLedger& ledger) {
    check_candidate(spec, n);
    return classify(spec, n, ledger);
}

std::uint64_t estimate_modulo_ops(const StrategySpec& spec, std::uint64_t limit) noexcept {
    if (limit < 2) return 0;
    const long double x = static_cast<long double>(limit);
    long double ops = 0;
    switch (spec.denominator_bound) {
        case DivisorBound::Full:
        case DivisorBound::ExcludeSelf: ops = x * x / 2; break;
        case DivisorBound::Half: ops = x * x / 4; break;
        case DivisorBound::Sqrt: ops = (2.0L / 3.0L) * x * std::sqrt(x); break;
    }
    if (spec.denominator_step > 1) ops /= static_cast<long double>(spec.denominator_step);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (ops >= static_cast<long double>(kMax)) return kMax;
    return static_cast<std::uint64_t>(ops);
}

RunResult sum_primes(const StrategySpec& spec, std::uint64_t limit, std::uint64_t cost_budget) {
    check_spec(spec);
    enforce_budget(spec, limit, cost_budget);

    RunResult result;
    result.limit = limit;
    result.spec = spec;
    const auto start = std::chrono::steady_clock::now();
    result.prime_sum = scan(spec, limit, result.ledger, [](std::uint64_t, std::uint64_t) {});
    result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

std::vector<std::uint64_t> prime_sum_series(const StrategySpec& spec, std::uint64_t limit,
                                            CostLedger& ledger, std::uint64_t cost_budget) {
    check_spec(spec);
    if (limit > kMaxSeriesLimit) {
        throw UsageError("prime_sum_series keeps one entry per integer; limit " +
                         std::to_string(limit) + " exceeds " + std::to_string(kMaxSeriesLimit));
    }
    enforce_budget(spec, limit, cost_budget);

    std::vector<std::uint64_t> series(limit + 1, 0);
    if (limit < 2) return series;

    std::uint64_t next = 2;
    std::uint64_t previous = spec.initial_sum;
    scan(spec, limit, ledger, [&](std::uint64_t n, std::uint64_t sum) {
        for (; next < n; ++next) series[next] = previous;
        series[n] = sum;
        next = n + 1;
        previous = sum;
    });
    for (; next <= limit; ++next) series[next] = previous;
    return series;
}

}  // namespace primesum
