#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primesum/strategy.hpp"

namespace primesum::report {

struct Row {
    StrategyId id = StrategyId::L1;
    std::uint64_t denominator_step = 0;
    std::uint64_t numerator_step = 0;
    std::uint64_t start_candidate = 0;
    std::uint64_t initial_sum = 0;
    std::uint64_t count_target = 0;
    std::uint64_t modulo_ops = 0;
    std::uint64_t prime_sum = 0;

    friend bool operator==(const Row&, const Row&) = default;
};

/// Column names, in output order, shared by every format.
inline constexpr std::string_view kColumns[] = {
    "id",           "denominator_step", "numerator_step", "start_candidate",
    "initial_sum",  "count_target",     "modulo_ops",     "prime_sum"};

struct ComparisonTable {
    std::uint64_t limit = 0;
    std::vector<Row> rows;
};

/// Rows follow the order of `results`. Throws UsageError when results is empty
/// or the limits differ, ConsistencyError when the prime sums differ.
ComparisonTable build_table(std::span<const RunResult> results);

enum class Format { Markdown, Csv, Json };

std::optional<Format> parse_format(std::string_view text) noexcept;

/// Deterministic text, plain ungrouped digits, LF line endings.
std::string render(const ComparisonTable& table, Format format);

}  // namespace primesum::report
