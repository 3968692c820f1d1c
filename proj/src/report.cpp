#include "gar/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <tuple>
#include <variant>

#include "gar/formats.hpp"
#include "gar/query.hpp"

namespace gar {

double reduction_rate(std::size_t input_count, std::size_t output_count) noexcept {
    if (input_count == 0) return 0.0;
    return 100.0 * static_cast<double>(input_count - output_count) / static_cast<double>(input_count);
}

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::NotFound, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename T>
using Loaded = std::variant<T, std::string>;

std::string describe(const std::exception& e, const std::filesystem::path& path) {
    return path.filename().string() + ": " + e.what();
}

ReportCell evaluate(const std::string& rlabel, const Loaded<RuleSet>& rules, const std::string& tlabel,
                    const Loaded<TaxonomySet>& taxes, const ReportOptions& options) {
    ReportCell cell;
    cell.ruleset_label = rlabel;
    cell.taxonomy_label = tlabel;
    if (const auto* err = std::get_if<std::string>(&rules)) {
        cell.error = *err;
        return cell;
    }
    if (const auto* err = std::get_if<std::string>(&taxes)) {
        cell.error = *err;
        return cell;
    }
    try {
        const auto& rs = std::get<RuleSet>(rules);
        const auto result = generalize(rs, std::get<TaxonomySet>(taxes), options.side, options.gart);
        cell.input_count = rs.size();
        cell.output_count = result.rules.size();
        cell.reduction_rate = reduction_rate(cell.input_count, cell.output_count);
        if (options.cell_dir) {
            std::vector<RuleView> views;
            for (const auto& r : result.rules) views.push_back(make_view(result, r));
            std::ofstream out(*options.cell_dir / (rlabel + "__" + tlabel + ".tsv"), std::ios::binary);
            out << export_view(views, {Measure::Support, Measure::Confidence});
            if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cell output for " + rlabel + "/" + tlabel);
        }
    } catch (const std::exception& e) {
        cell.input_count = cell.output_count = 0;
        cell.reduction_rate = 0.0;
        cell.error = e.what();
    }
    return cell;
}

} // namespace

ReductionReport build_report(const std::vector<LabeledPath>& rulesets, const std::vector<LabeledPath>& taxonomy_sets,
                             const ReportOptions& options) {
    options.gart.validate();
    if (options.cell_dir) std::filesystem::create_directories(*options.cell_dir);

    std::vector<Loaded<RuleSet>> rules;
    for (const auto& in : rulesets) {
        try {
            rules.emplace_back(formats::load_ruleset(slurp(in.path)).value);
        } catch (const std::exception& e) {
            rules.emplace_back(describe(e, in.path));
        }
    }
    std::vector<Loaded<TaxonomySet>> taxes;
    for (const auto& in : taxonomy_sets) {
        try {
            taxes.emplace_back(formats::load_taxonomies(slurp(in.path)));
        } catch (const std::exception& e) {
            taxes.emplace_back(describe(e, in.path));
        }
    }

    ReductionReport report;
    const std::size_t n = rulesets.size() * taxonomy_sets.size();
    report.cells.resize(n);
    auto run_range = [&](std::size_t first, std::size_t stride) {
        for (std::size_t k = first; k < n; k += stride) {
            const std::size_t i = k / taxonomy_sets.size(), j = k % taxonomy_sets.size();
            report.cells[k] = evaluate(rulesets[i].label, rules[i], taxonomy_sets[j].label, taxes[j], options);
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, n));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 1; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run_range, w, workers));
    run_range(0, workers);
    for (auto& j : jobs) j.get();

    std::stable_sort(report.cells.begin(), report.cells.end(), [](const ReportCell& a, const ReportCell& b) {
        return std::tie(a.ruleset_label, a.taxonomy_label) < std::tie(b.ruleset_label, b.taxonomy_label);
    });
    return report;
}

namespace {

std::string rate_text(const ReportCell& c) {
    if (c.error) return "error";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", c.reduction_rate);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string format_table(const ReductionReport& report) {
    std::vector<std::vector<std::string>> rows{{"ruleset", "taxonomies", "input", "output", "reduction"}};
    for (const auto& c : report.cells) {
        rows.push_back({c.ruleset_label, c.taxonomy_label, c.error ? "-" : std::to_string(c.input_count),
                        c.error ? "-" : std::to_string(c.output_count), rate_text(c)});
    }
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());

    std::string out;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            const bool numeric = k >= 2;
            const std::string pad(width[k] - row[k].size(), ' ');
            if (k) out += "  ";
            out += numeric ? pad + row[k] : row[k] + (k + 1 < row.size() ? pad : "");
        }
        out += '\n';
    }
    for (const auto& c : report.cells)
        if (c.error) out += "error in " + c.ruleset_label + " x " + c.taxonomy_label + ": " + *c.error + "\n";
    return out;
}

std::string format_csv(const ReductionReport& report) {
    std::string out = "ruleset,taxonomy_set,input,output,reduction_rate,error\n";
    for (const auto& c : report.cells) {
        out += csv_field(c.ruleset_label) + ',' + csv_field(c.taxonomy_label) + ',';
        if (c.error) {
            out += ",,," + csv_field(*c.error) + '\n';
            continue;
        }
        char rate[32];
        std::snprintf(rate, sizeof rate, "%.6f", c.reduction_rate);
        out += std::to_string(c.input_count) + ',' + std::to_string(c.output_count) + ',' + rate + ",\n";
    }
    return out;
}

} // namespace gar
