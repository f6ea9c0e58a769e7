#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "primesum/errors.hpp"
#include "primesum/report.hpp"
#include "primesum/strategy.hpp"

namespace primesum::cli {

enum class Command { Run, Trace, Compare, Verify };

struct CliConfig {
    Command command = Command::Run;
    std::optional<std::uint64_t> limit;
    std::vector<StrategyId> logics{kAllStrategies.begin(), kAllStrategies.end()};
    report::Format format = report::Format::Markdown;
    std::optional<std::string> out;
    std::uint64_t cost_budget = kDefaultCostBudget;
    std::optional<std::uint64_t> candidate;
};

enum ExitStatus : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitCostGuard = 3,
    kExitOverflow = 4,
};

/// Thrown by parse_args for --help; carries the rendered help text.
class HelpRequested : public Error {
public:
    using Error::Error;
};

/// `args` excludes the program name. Throws UsageError on anything malformed
/// (unknown flags included) and HelpRequested for --help.
CliConfig parse_args(const std::vector<std::string>& args);

/// Describes the first adjacent pair of rows whose modulo_ops fail to
/// decrease (strictly when `strict`), or nullopt when the ordering holds.
std::optional<std::string> ordering_violation(const report::ComparisonTable& table, bool strict);

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_trace(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses, dispatches, and maps every error to its exit status. Results go to
/// `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primesum::cli
