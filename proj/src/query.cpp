#include "gar/query.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace gar {

bool MeasurePredicate::holds(const MeasureVector& v) const {
    auto x = v.get(measure);
    if (!x) return false;
    switch (op) {
    case Comparator::Less: return *x < value;
    case Comparator::LessEqual: return *x <= value;
    case Comparator::Greater: return *x > value;
    case Comparator::GreaterEqual: return *x >= value;
    case Comparator::Equal: return *x == value;
    }
    return false;
}

Measure require_measure(std::string_view name) {
    auto m = parse_measure(name);
    if (!m)
        throw Error(ErrorCode::Query,
                    "unknown measure '" + std::string(name) + "'; valid measures: " + measure_vocabulary());
    return *m;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text) {
    auto t = trim(text);
    double value = 0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw Error(ErrorCode::Query, "malformed number '" + std::string(text) + "'");
    return value;
}

std::size_t parse_count(std::string_view text, const char* what) {
    auto t = trim(text);
    std::size_t value = 0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw Error(ErrorCode::Query, std::string(what) + " must be a non-negative integer");
    return value;
}

Item query_item(std::string_view token) {
    if (!Item::is_valid_name(token)) throw Error(ErrorCode::Query, "invalid item '" + std::string(token) + "'");
    return Item(std::string(token));
}

void add_item(std::optional<Itemset>& slot, std::string_view token) {
    if (!slot) slot.emplace();
    slot->insert(query_item(token));
}

} // namespace

MeasurePredicate parse_predicate(std::string_view text) {
    struct Op {
        std::string_view token;
        Comparator cmp;
    };
    static constexpr Op ops[] = {{"<=", Comparator::LessEqual}, {">=", Comparator::GreaterEqual},
                                 {"\xe2\x89\xa4", Comparator::LessEqual}, {"\xe2\x89\xa5", Comparator::GreaterEqual},
                                 {"<", Comparator::Less},         {">", Comparator::Greater},
                                 {"=", Comparator::Equal}};
    for (const auto& op : ops) {
        auto pos = text.find(op.token);
        if (pos == std::string_view::npos) continue;
        MeasurePredicate p;
        p.measure = require_measure(trim(text.substr(0, pos)));
        p.op = op.cmp;
        p.value = parse_number(text.substr(pos + op.token.size()));
        return p;
    }
    throw Error(ErrorCode::Query, "predicate '" + std::string(text) + "' needs one of <, <=, >, >=, =");
}

SortSpec parse_sort(std::string_view text) {
    SortSpec s;
    auto colon = text.find(':');
    s.measure = require_measure(trim(text.substr(0, colon)));
    if (colon != std::string_view::npos) {
        auto dir = trim(text.substr(colon + 1));
        if (dir == "desc") s.descending = true;
        else if (dir != "asc") throw Error(ErrorCode::Query, "sort direction must be 'asc' or 'desc'");
    }
    return s;
}

RuleQuery parse_query(const std::multimap<std::string, std::string>& params) {
    RuleQuery q;
    for (const auto& [key, value] : params) {
        if (key == "item") add_item(q.any_side_contains, value);
        else if (key == "lhs") add_item(q.lhs_contains, value);
        else if (key == "rhs") add_item(q.rhs_contains, value);
        else if (key == "measure") q.selected_measures.push_back(require_measure(value));
        else if (key == "where") q.predicates.push_back(parse_predicate(value));
        else if (key == "sort") q.sort_by = parse_sort(value);
        else if (key == "limit") q.limit = parse_count(value, "limit");
        else if (key == "offset") q.offset = parse_count(value, "offset");
        else if (key == "exact") q.exact_items = value == "1" || value == "true";
        else throw Error(ErrorCode::Query, "unknown query parameter '" + key + "'");
    }
    return q;
}

bool item_matches(const GeneralizedRule& rule, const Item& item, std::optional<Side> side, const TaxonomySet& taxes,
                  bool exact) {
    auto on = [&](Side s) {
        if (rule_side(rule, s).contains(item)) return true;
        if (exact || s != rule.side) return false;
        return std::any_of(rule.generalized_items.begin(), rule.generalized_items.end(),
                           [&](const Item& g) { return is_ancestor(taxes, g, item); });
    };
    return side ? on(*side) : on(Side::LHS) || on(Side::RHS);
}

RuleView make_view(const GeneralizedRuleSet& set, const GeneralizedRule& rule, const std::vector<Measure>& selected) {
    RuleView view;
    view.id = rule_id(rule.key());
    view.rule = rule;
    auto full = measures_of(rule);
    if (selected.empty()) {
        view.measures = full;
    } else {
        for (auto m : selected) view.measures.set(m, full.get(m));
    }
    if (set.mining_params) view.flags = flag_thresholds(full, *set.mining_params);
    view.links.expanded = !rule.generalized_items.empty();
    view.links.sources = !rule.generalized_items.empty();
    view.links.measures_drilldown = view.flags && view.flags->any();
    return view;
}

std::vector<RuleView> run_query(const GeneralizedRuleSet& set, const RuleQuery& q) {
    auto all_match = [&](const std::optional<Itemset>& items, std::optional<Side> side, const GeneralizedRule& g) {
        if (!items) return true;
        return std::all_of(items->begin(), items->end(),
                           [&](const Item& x) { return item_matches(g, x, side, set.taxonomies, q.exact_items); });
    };

    std::vector<RuleView> out;
    for (const auto& g : set.rules) {
        if (!all_match(q.lhs_contains, Side::LHS, g) || !all_match(q.rhs_contains, Side::RHS, g) ||
            !all_match(q.any_side_contains, std::nullopt, g))
            continue;
        auto full = measures_of(g);
        if (!std::all_of(q.predicates.begin(), q.predicates.end(), [&](const auto& p) { return p.holds(full); }))
            continue;
        out.push_back(make_view(set, g, q.selected_measures));
    }

    if (q.sort_by) {
        const auto spec = *q.sort_by;
        std::stable_sort(out.begin(), out.end(), [&](const RuleView& a, const RuleView& b) {
            auto x = measures_of(a.rule).get(spec.measure);
            auto y = measures_of(b.rule).get(spec.measure);
            if (!x || !y) return x.has_value() && !y.has_value();
            return spec.descending ? *x > *y : *x < *y;
        });
    }

    const std::size_t begin = std::min(q.offset.value_or(0), out.size());
    const std::size_t end = q.limit ? std::min(out.size(), begin + *q.limit) : out.size();
    return {std::make_move_iterator(out.begin() + static_cast<std::ptrdiff_t>(begin)),
            std::make_move_iterator(out.begin() + static_cast<std::ptrdiff_t>(end))};
}

std::vector<RuleKey> drilldown_expanded(const RuleView& view, const TaxonomySet& taxes) {
    if (!view.links.expanded)
        throw Error(ErrorCode::NotAvailable, "rule " + to_string(view.rule.key()) + " has no generalized items");
    return expand(view.rule, taxes);
}

std::vector<AssociationRule> drilldown_sources(const RuleView& view) {
    if (!view.links.sources)
        throw Error(ErrorCode::NotAvailable, "rule " + to_string(view.rule.key()) + " was not generalized");
    return view.rule.sources;
}

MeasureDrilldown drilldown_measures(const RuleView& view) {
    if (!view.links.measures_drilldown)
        throw Error(ErrorCode::NotAvailable, "rule " + to_string(view.rule.key()) + " meets its mining thresholds");
    MeasureDrilldown out{measures_of(view.rule), *view.flags, {}};
    if (out.flags.below_min_support) out.violated.emplace_back(measure_name(Measure::Support));
    if (out.flags.below_min_confidence) out.violated.emplace_back(measure_name(Measure::Confidence));
    return out;
}

std::string render_rule(const GeneralizedRule& rule) {
    auto side_text = [&](const Itemset& items) {
        std::string out;
        for (const auto& item : items) {
            if (!out.empty()) out += " & ";
            out += rule.generalized_items.contains(item) ? "(" + item.name() + ")" : item.name();
        }
        return out;
    };
    return side_text(rule.lhs) + " \xe2\x87\x92 " + side_text(rule.rhs);
}

std::string export_view(const std::vector<RuleView>& views, const std::vector<Measure>& columns) {
    std::string out = "rule";
    for (auto m : columns) {
        out += '\t';
        out += measure_name(m);
    }
    out += '\n';
    for (const auto& view : views) {
        out += render_rule(view.rule);
        for (auto m : columns) {
            out += '\t';
            if (auto v = view.measures.get(m)) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.4f", *v);
                out += buf;
            } else {
                out += '-';
            }
        }
        out += '\n';
    }
    return out;
}

} // namespace gar
