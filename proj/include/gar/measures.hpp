#ifndef GAR_MEASURES_HPP
#define GAR_MEASURES_HPP

#include <array>
#include <optional>
#include <string_view>

#include "gar/core.hpp"
#include "gar/gart.hpp"

namespace gar {

enum class Measure { Support, Confidence, Coverage, Lift, Leverage, Conviction };

inline constexpr std::array<Measure, 6> all_measures{Measure::Support, Measure::Confidence, Measure::Coverage,
                                                     Measure::Lift,    Measure::Leverage,   Measure::Conviction};

/// Lowercase vocabulary name, e.g. "support".
std::string_view measure_name(Measure m) noexcept;
/// Accepts the lowercase names and the interface aliases "sup" (support)
/// and "cov" (confidence), case-insensitively.
std::optional<Measure> parse_measure(std::string_view name);
/// Comma-separated list of valid names, for error messages.
std::string measure_vocabulary();

/// Objective measures; an absent value means undefined for this table.
struct MeasureVector {
    std::optional<double> support;
    std::optional<double> confidence;
    std::optional<double> coverage;
    std::optional<double> lift;
    std::optional<double> leverage;
    std::optional<double> conviction;

    std::optional<double> get(Measure m) const noexcept;
    void set(Measure m, std::optional<double> value) noexcept;

    friend bool operator==(const MeasureVector&, const MeasureVector&) = default;
};

struct ThresholdFlags {
    bool below_min_support = false;
    bool below_min_confidence = false;

    bool any() const noexcept { return below_min_support || below_min_confidence; }

    friend bool operator==(const ThresholdFlags&, const ThresholdFlags&) = default;
};

/// Throws EmptyTable when ct.n == 0.
MeasureVector measures_from_table(const ContingencyTable& ct);

/// An absent measure is never flagged.
ThresholdFlags flag_thresholds(const MeasureVector& v, const MiningParams& params) noexcept;

/// Table-derived measures, or the stored support/confidence of a pass-through
/// rule when no table exists.
MeasureVector measures_of(const GeneralizedRule& rule);

} // namespace gar

#endif
