#pragma once

#include <cstdint>

namespace primesum {

/// Per-run operation counters. One unit of cost is one remainder evaluation;
/// square roots and loop trips are tallied separately and never folded into
/// `modulo_ops`.
struct CostLedger {
    std::uint64_t modulo_ops = 0;
    std::uint64_t sqrt_evals = 0;
    std::uint64_t loop_iterations = 0;
    std::uint64_t candidates_tested = 0;

    friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

}  // namespace primesum
