#include "primesum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "primesum/oracle.hpp"
#include "primesum/trace.hpp"

namespace primesum::cli {

namespace {

std::vector<StrategyId> parse_logics(const std::vector<std::string>& names) {
    std::vector<StrategyId> ids;
    for (const auto& name : names) {
        auto id = parse_strategy_id(name);
        if (!id) throw UsageError("unknown logic '" + name + "' (expected L1..L7)");
        ids.push_back(*id);
    }
    if (ids.empty()) throw UsageError("--logics must name at least one of L1..L7");
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::string join_ids(const std::vector<StrategyId>& ids, std::string_view sep) {
    std::string text;
    for (auto id : ids) {
        if (!text.empty()) text += sep;
        text += to_string(id);
    }
    return text;
}

// Every guard is checked before any logic starts; the runs then proceed in
// parallel, each with its own ledger, and come back in logic order.
std::vector<RunResult> run_logics(const CliConfig& config) {
    const std::uint64_t limit = *config.limit;
    for (auto id : config.logics) {
        const auto spec = canonical_spec(id);
        const auto estimate = estimate_modulo_ops(spec, limit);
        if (estimate > config.cost_budget) {
            throw CostGuardError(std::string(to_string(id)) + " at limit " + std::to_string(limit) +
                                     " needs an estimated " + std::to_string(estimate) +
                                     " modulo operations, over the budget of " +
                                     std::to_string(config.cost_budget),
                                 estimate, config.cost_budget);
        }
    }

    std::vector<std::future<RunResult>> pending;
    for (auto id : config.logics) {
        pending.push_back(std::async(std::launch::async, [id, limit, budget = config.cost_budget] {
            return sum_primes(canonical_spec(id), limit, budget);
        }));
    }
    std::vector<RunResult> results;
    for (auto& f : pending) results.push_back(f.get());
    return results;
}

// Writes to the --out file when one is given, otherwise to `fallback`.
class Sink {
public:
    Sink(const std::optional<std::string>& path, std::ostream& fallback) : stream_(&fallback) {
        if (path) {
            file_.open(*path, std::ios::binary | std::ios::trunc);
            if (!file_) throw UsageError("cannot open output file '" + *path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Trial-division prime summation: seven heuristic logics, instrumented"};
    app.name("primesum");
    app.require_subcommand(1);

    std::uint64_t limit = 0;
    std::uint64_t candidate = 0;
    std::uint64_t budget = kDefaultCostBudget;
    std::vector<std::string> logics;
    std::string format = "md";
    std::string out;

    const std::string limit_help = "Inclusive upper bound: every prime <= LIMIT is summed";
    const std::string logics_help = "Comma-separated subset of L1..L7 (default: all)";
    const std::string budget_help =
        "Refuse any logic whose estimated modulo-operation count exceeds this (default 10000000000)";

    std::vector<CLI::Option*> logics_options;
    auto add_common = [&](CLI::App* sub, bool with_format) {
        logics_options.push_back(sub->add_option("--logics", logics, logics_help)->delimiter(','));
        sub->add_option("--out", out, "Write results to this file instead of standard output");
        sub->add_option("--cost-budget", budget, budget_help);
        if (with_format) {
            sub->add_option("--format", format, "Output format: md, csv or json (default md)");
        }
    };

    auto* run = app.add_subcommand("run", "Sum primes <= LIMIT with each selected logic");
    run->add_option("--limit", limit, limit_help)->required();
    add_common(run, true);

    auto* compare = app.add_subcommand(
        "compare", "Like run, then check modulo_ops decreases from L1 towards L7");
    compare->add_option("--limit", limit, limit_help)->required();
    add_common(compare, true);

    auto* verify = app.add_subcommand("verify", "Check each selected logic against a sieve");
    verify->add_option("--limit", limit, limit_help)->required();
    add_common(verify, false);

    auto* trace = app.add_subcommand("trace", "List every remainder evaluated for one candidate");
    trace->add_option("--candidate", candidate, "Number to classify")->required();
    add_common(trace, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (auto* sub : {run, compare, verify, trace}) {
            if (sub->parsed()) target = sub;
        }
        throw HelpRequested(target->help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CliConfig config;
    if (run->parsed()) config.command = Command::Run;
    if (compare->parsed()) config.command = Command::Compare;
    if (verify->parsed()) config.command = Command::Verify;
    if (trace->parsed()) config.command = Command::Trace;

    if (config.command == Command::Trace) {
        config.candidate = candidate;
    } else {
        config.limit = limit;
    }
    if (std::any_of(logics_options.begin(), logics_options.end(),
                    [](const CLI::Option* o) { return o->count() > 0; })) {
        config.logics = parse_logics(logics);
    }
    auto parsed_format = report::parse_format(format);
    if (!parsed_format) throw UsageError("unknown format '" + format + "' (expected md, csv or json)");
    config.format = *parsed_format;
    if (budget == 0) throw UsageError("--cost-budget must be positive");
    config.cost_budget = budget;
    if (!out.empty()) config.out = out;
    return config;
}

std::optional<std::string> ordering_violation(const report::ComparisonTable& table, bool strict) {
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        const auto& a = table.rows[i - 1];
        const auto& b = table.rows[i];
        const bool ok = strict ? a.modulo_ops > b.modulo_ops : a.modulo_ops >= b.modulo_ops;
        if (!ok) {
            return std::string(to_string(a.id)) + "=" + std::to_string(a.modulo_ops) +
                   (strict ? " is not > " : " is not >= ") + std::string(to_string(b.id)) + "=" +
                   std::to_string(b.modulo_ops);
        }
    }
    return std::nullopt;
}

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream&) {
    if (!config.limit) throw UsageError("run requires --limit");
    const auto results = run_logics(config);
    const auto table = report::build_table(results);
    Sink sink(config.out, out);
    sink.get() << report::render(table, config.format);
    return kExitOk;
}

int cmd_compare(const CliConfig& config, std::ostream& out, std::ostream&) {
    if (!config.limit) throw UsageError("compare requires --limit");
    const auto results = run_logics(config);
    const auto table = report::build_table(results);

    // Tiny limits can leave several logics at zero cost, so strictness only
    // applies from limit 100 up.
    const bool strict = *config.limit >= 100;
    const auto violation = ordering_violation(table, strict);

    Sink sink(config.out, out);
    sink.get() << report::render(table, config.format);
    const std::string relation = strict ? " > " : " >= ";
    if (!violation) {
        sink.get() << "ordering: PASS modulo_ops " << join_ids(config.logics, relation) << '\n';
        return kExitOk;
    }
    sink.get() << "ordering: FAIL " << *violation << '\n';
    return kExitCheckFailed;
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream&) {
    if (!config.limit) throw UsageError("verify requires --limit");
    const std::uint64_t expected = oracle::oracle_prime_sum(*config.limit);
    const auto results = run_logics(config);

    Sink sink(config.out, out);
    bool all_pass = true;
    for (const auto& r : results) {
        const bool pass = r.prime_sum == expected;
        all_pass = all_pass && pass;
        sink.get() << to_string(r.spec.id) << ": " << (pass ? "PASS" : "FAIL")
                   << " prime_sum=" << r.prime_sum << " oracle=" << expected << '\n';
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_trace(const CliConfig& config, std::ostream& out, std::ostream&) {
    if (!config.candidate) throw UsageError("trace requires --candidate");
    const std::uint64_t n = *config.candidate;

    std::vector<std::string> lines;
    for (auto id : config.logics) {
        const auto spec = canonical_spec(id);
        try {
            check_candidate(spec, n);
        } catch (const ContractError& e) {
            throw UsageError(std::string(e.what()) +
                             "; L5-L7 only test odd candidates >= 3, L1-L4 any candidate >= 2");
        }
        lines.push_back(std::string(to_string(id)) + ": " + render_trace(trace_candidate(spec, n)));
    }

    Sink sink(config.out, out);
    for (const auto& line : lines) sink.get() << line << '\n';
    return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const CliConfig config = parse_args(args);
        switch (config.command) {
            case Command::Run: return cmd_run(config, out, err);
            case Command::Trace: return cmd_trace(config, out, err);
            case Command::Compare: return cmd_compare(config, out, err);
            case Command::Verify: return cmd_verify(config, out, err);
        }
        return kExitUsage;
    } catch (const HelpRequested& help) {
        out << help.what();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return kExitUsage;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CostGuardError& e) {
        err << "refused: " << e.what()
            << "\nraise --cost-budget or drop the slow logics with --logics (e.g. --logics L6,L7)\n";
        return kExitCostGuard;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitOverflow;
    } catch (const ConsistencyError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

}  // namespace primesum::cli
