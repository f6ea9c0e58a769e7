#include "primesum/report.hpp"

#include <array>

#include <json.hpp>

#include "primesum/errors.hpp"

namespace primesum::report {

namespace {

std::array<std::string, 8> cells(const Row& row) {
    return {std::string(to_string(row.id)),       std::to_string(row.denominator_step),
            std::to_string(row.numerator_step),   std::to_string(row.start_candidate),
            std::to_string(row.initial_sum),      std::to_string(row.count_target),
            std::to_string(row.modulo_ops),       std::to_string(row.prime_sum)};
}

std::string render_csv(const ComparisonTable& table) {
    std::string out;
    for (std::size_t i = 0; i < std::size(kColumns); ++i) {
        if (i) out += ',';
        out += kColumns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        const auto c = cells(row);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ',';
            out += c[i];
        }
        out += '\n';
    }
    return out;
}

std::string render_markdown(const ComparisonTable& table) {
    std::string out = "|";
    for (auto name : kColumns) {
        out += ' ';
        out += name;
        out += " |";
    }
    out += "\n|";
    for (std::size_t i = 0; i < std::size(kColumns); ++i) out += i == 0 ? " --- |" : " ---: |";
    out += '\n';
    for (const auto& row : table.rows) {
        out += '|';
        for (const auto& cell : cells(row)) {
            out += ' ';
            out += cell;
            out += " |";
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const ComparisonTable& table) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        obj["id"] = std::string(to_string(row.id));
        obj["denominator_step"] = row.denominator_step;
        obj["numerator_step"] = row.numerator_step;
        obj["start_candidate"] = row.start_candidate;
        obj["initial_sum"] = row.initial_sum;
        obj["count_target"] = row.count_target;
        obj["modulo_ops"] = row.modulo_ops;
        obj["prime_sum"] = row.prime_sum;
        array.push_back(std::move(obj));
    }
    return array.dump(2) + '\n';
}

}  // namespace

ComparisonTable build_table(std::span<const RunResult> results) {
    if (results.empty()) throw UsageError("cannot build a comparison table from zero runs");

    ComparisonTable table;
    table.limit = results.front().limit;
    const std::uint64_t expected_sum = results.front().prime_sum;
    for (const auto& r : results) {
        if (r.limit != table.limit) {
            throw UsageError("runs have different limits (" + std::to_string(table.limit) + " and " +
                             std::to_string(r.limit) + ")");
        }
        if (r.prime_sum != expected_sum) {
            throw ConsistencyError(std::string(to_string(r.spec.id)) + " summed to " +
                                   std::to_string(r.prime_sum) + " but " +
                                   std::string(to_string(results.front().spec.id)) + " summed to " +
                                   std::to_string(expected_sum) + " at limit " +
                                   std::to_string(table.limit));
        }
        table.rows.push_back({r.spec.id, r.spec.denominator_step, r.spec.numerator_step,
                              r.spec.start_candidate, r.spec.initial_sum, r.spec.count_target,
                              r.ledger.modulo_ops, r.prime_sum});
    }
    return table;
}

std::optional<Format> parse_format(std::string_view text) noexcept {
    if (text == "md" || text == "markdown") return Format::Markdown;
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    return std::nullopt;
}

std::string render(const ComparisonTable& table, Format format) {
    switch (format) {
        case Format::Markdown: return render_markdown(table);
        case Format::Csv: return render_csv(table);
        case Format::Json: return render_json(table);
    }
    return {};
}

}  // namespace primesum::report
