#include "gar/measures.hpp"

#include <cctype>
#include <string>

namespace gar {

std::string_view measure_name(Measure m) noexcept {
    switch (m) {
    case Measure::Support: return "support";
    case Measure::Confidence: return "confidence";
    case Measure::Coverage: return "coverage";
    case Measure::Lift: return "lift";
    case Measure::Leverage: return "leverage";
    case Measure::Conviction: return "conviction";
    }
    return "";
}

std::optional<Measure> parse_measure(std::string_view name) {
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "sup") return Measure::Support;
    if (lower == "cov") return Measure::Confidence;
    for (auto m : all_measures)
        if (lower == measure_name(m)) return m;
    return std::nullopt;
}

std::string measure_vocabulary() {
    std::string out;
    for (auto m : all_measures) {
        if (!out.empty()) out += ", ";
        out += measure_name(m);
    }
    return out;
}

std::optional<double> MeasureVector::get(Measure m) const noexcept {
    switch (m) {
    case Measure::Support: return support;
    case Measure::Confidence: return confidence;
    case Measure::Coverage: return coverage;
    case Measure::Lift: return lift;
    case Measure::Leverage: return leverage;
    case Measure::Conviction: return conviction;
    }
    return std::nullopt;
}

void MeasureVector::set(Measure m, std::optional<double> value) noexcept {
    switch (m) {
    case Measure::Support: support = value; break;
    case Measure::Confidence: confidence = value; break;
    case Measure::Coverage: coverage = value; break;
    case Measure::Lift: lift = value; break;
    case Measure::Leverage: leverage = value; break;
    case Measure::Conviction: conviction = value; break;
    }
}

MeasureVector measures_from_table(const ContingencyTable& ct) {
    if (ct.n == 0) throw Error(ErrorCode::EmptyTable, "contingency table has no transactions");
    const double n = static_cast<double>(ct.n);
    const std::size_t lhs_count = ct.n_lr + ct.n_lnr;
    const std::size_t rhs_count = ct.n_lr + ct.n_nlr;
    const double rhs_freq = static_cast<double>(rhs_count) / n;

    MeasureVector v;
    v.support = static_cast<double>(ct.n_lr) / n;
    v.coverage = static_cast<double>(lhs_count) / n;
    if (lhs_count != 0) v.confidence = static_cast<double>(ct.n_lr) / static_cast<double>(lhs_count);
    if (v.confidence && rhs_count != 0) v.lift = *v.confidence / rhs_freq;
    v.leverage = *v.support - *v.coverage * rhs_freq;
    if (v.confidence && ct.n_lr != lhs_count) v.conviction = (1.0 - rhs_freq) / (1.0 - *v.confidence);
    return v;
}

ThresholdFlags flag_thresholds(const MeasureVector& v, const MiningParams& params) noexcept {
    ThresholdFlags f;
    f.below_min_support = v.support && *v.support < params.min_support;
    f.below_min_confidence = v.confidence && *v.confidence < params.min_confidence;
    return f;
}

MeasureVector measures_of(const GeneralizedRule& rule) {
    if (rule.table) return measures_from_table(*rule.table);
    MeasureVector v;
    if (rule.is_pass_through() && rule.sources.size() == 1) {
        v.support = rule.sources.front().support;
        v.confidence = rule.sources.front().confidence;
    }
    return v;
}

} // namespace gar
