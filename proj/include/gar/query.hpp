#ifndef GAR_QUERY_HPP
#define GAR_QUERY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gar/gart.hpp"
#include "gar/measures.hpp"

namespace gar {

enum class Comparator { Less, LessEqual, Greater, GreaterEqual, Equal };

struct MeasurePredicate {
    Measure measure = Measure::Support;
    Comparator op = Comparator::GreaterEqual;
    double value = 0.0;

    /// False when the measure is absent.
    bool holds(const MeasureVector& v) const;

    friend bool operator==(const MeasurePredicate&, const MeasurePredicate&) = default;
};

struct SortSpec {
    Measure measure = Measure::Support;
    bool descending = false;

    friend bool operator==(const SortSpec&, const SortSpec&) = default;
};

struct RuleQuery {
    std::optional<Itemset> lhs_contains;
    std::optional<Itemset> rhs_contains;
    std::optional<Itemset> any_side_contains;
    /// Item constraints match literally instead of through generalized items.
    bool exact_items = false;
    std::vector<MeasurePredicate> predicates;
    /// Empty selects every measure.
    std::vector<Measure> selected_measures;
    std::optional<std::size_t> limit;
    std::optional<std::size_t> offset;
    std::optional<SortSpec> sort_by;
};

/// Throws Query naming the valid vocabulary.
Measure require_measure(std::string_view name);
/// "support>=0.5", "lift<1", "confidence=1" (also accepts the unicode ≤ ≥).
MeasurePredicate parse_predicate(std::string_view text);
/// "support" or "support:asc" / "support:desc".
SortSpec parse_sort(std::string_view text);

/// Builds a query from repeated key/value parameters: item, lhs, rhs,
/// measure, where, sort, limit, offset, exact.
RuleQuery parse_query(const std::multimap<std::string, std::string>& params);

struct RuleLinks {
    bool expanded = false;
    bool sources = false;
    bool measures_drilldown = false;

    friend bool operator==(const RuleLinks&, const RuleLinks&) = default;
};

struct RuleView {
    std::string id;
    GeneralizedRule rule;
    /// Restricted to the query's selected measures.
    MeasureVector measures;
    /// Present when the rule set records its mining parameters.
    std::optional<ThresholdFlags> flags;
    RuleLinks links;
};

RuleView make_view(const GeneralizedRuleSet& set, const GeneralizedRule& rule,
                   const std::vector<Measure>& selected = {});

/// Does `item` constrain-match `rule` on `side` (nullopt = either side)?
bool item_matches(const GeneralizedRule& rule, const Item& item, std::optional<Side> side, const TaxonomySet& taxes,
                  bool exact = false);

std::vector<RuleView> run_query(const GeneralizedRuleSet& set, const RuleQuery& q);

/// "E" link. Throws NotAvailable for pass-through rules.
std::vector<RuleKey> drilldown_expanded(const RuleView& view, const TaxonomySet& taxes);
/// "S" link. Throws NotAvailable for pass-through rules.
std::vector<AssociationRule> drilldown_sources(const RuleView& view);

struct MeasureDrilldown {
    MeasureVector measures;
    ThresholdFlags flags;
    /// Names of the measures under their mining threshold.
    std::vector<std::string> violated;
};

/// "M" link: the full vector plus the violated thresholds.
MeasureDrilldown drilldown_measures(const RuleView& view);

/// "(light) & shoe ⇒ cap" with generalized items parenthesized.
std::string render_rule(const GeneralizedRule& rule);

/// Tab-separated table: header then one line per view, measures to 4 places.
std::string export_view(const std::vector<RuleView>& views, const std::vector<Measure>& columns);

} // namespace gar

#endif
