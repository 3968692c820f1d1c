#ifndef GAR_REPORT_HPP
#define GAR_REPORT_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gar/core.hpp"
#include "gar/gart.hpp"

namespace gar {

struct ReportCell {
    std::string ruleset_label;
    std::string taxonomy_label;
    std::size_t input_count = 0;
    std::size_t output_count = 0;
    /// Percentage in [0, 100].
    double reduction_rate = 0.0;
    /// Set when the cell could not be evaluated; counts are then meaningless.
    std::optional<std::string> error;
};

struct ReductionReport {
    /// Sorted by (ruleset_label, taxonomy_label).
    std::vector<ReportCell> cells;
};

/// (in - out) / in as a percentage; 0 for an empty input.
double reduction_rate(std::size_t input_count, std::size_t output_count) noexcept;

struct LabeledPath {
    std::string label;
    std::filesystem::path path;
};

struct ReportOptions {
    Side side = Side::LHS;
    GartOptions gart;
    /// When set, each evaluated cell writes `<rules>__<taxonomies>.tsv` there:
    /// a header line followed by one line per generalized rule.
    std::optional<std::filesystem::path> cell_dir;
    std::size_t threads = 1;
};

/// Evaluates the full cross product. A file that fails to load marks every
/// cell it participates in with an error instead of aborting the run.
ReductionReport build_report(const std::vector<LabeledPath>& rulesets, const std::vector<LabeledPath>& taxonomy_sets,
                             const ReportOptions& options = {});

/// Aligned plain-text table.
std::string format_table(const ReductionReport& report);
/// ruleset,taxonomy_set,input,output,reduction_rate,error
std::string format_csv(const ReductionReport& report);

} // namespace gar

#endif
