#include "gar/gart.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace gar {

void GartOptions::validate() const {
    if (max_level && *max_level < 1) throw Error(ErrorCode::InvalidArgument, "max_level must be at least 1");
}

GeneralizedRule GeneralizedRule::pass_through(const AssociationRule& rule, Side side) {
    GeneralizedRule g;
    g.lhs = rule.lhs;
    g.rhs = rule.rhs;
    g.side = side;
    g.sources = {rule};
    return g;
}

const Itemset& rule_side(const GeneralizedRule& rule, Side side) noexcept {
    return side == Side::LHS ? rule.lhs : rule.rhs;
}

RuleSet GeneralizedRuleSet::source_ruleset() const {
    RuleSet out;
    out.set_mining_params(mining_params);
    for (const auto& rule : rules)
        for (const auto& src : rule.sources) out.add(src);
    return out;
}

std::size_t GeneralizedRuleSet::source_count() const {
    std::size_t total = 0;
    for (const auto& rule : rules) total += rule.sources.size();
    return total;
}

const GeneralizedRule* GeneralizedRuleSet::find(const RuleKey& key) const {
    auto it = std::lower_bound(rules.begin(), rules.end(), key,
                               [](const GeneralizedRule& r, const RuleKey& k) { return r.key() < k; });
    return it != rules.end() && it->key() == key ? &*it : nullptr;
}

std::map<Itemset, std::vector<AssociationRule>> partition_by_fixed_side(const RuleSet& rules, Side side) {
    std::map<Itemset, std::vector<AssociationRule>> groups;
    for (const auto& [key, rule] : rules) groups[rule_side(rule, other(side))].push_back(rule);
    return groups;
}

namespace {

Itemset& mutable_side(GeneralizedRule& rule, Side side) { return side == Side::LHS ? rule.lhs : rule.rhs; }

void merge_into(GeneralizedRule& into, GeneralizedRule&& from) {
    std::vector<AssociationRule> merged;
    merged.reserve(into.sources.size() + from.sources.size());
    std::merge(std::make_move_iterator(into.sources.begin()), std::make_move_iterator(into.sources.end()),
               std::make_move_iterator(from.sources.begin()), std::make_move_iterator(from.sources.end()),
               std::back_inserter(merged),
               [](const AssociationRule& a, const AssociationRule& b) { return a.key() < b.key(); });
    into.sources = std::move(merged);
    into.generalized_items = set_union(into.generalized_items, from.generalized_items);
}

// Returns the merged group and whether any item was replaced.
std::pair<std::vector<GeneralizedRule>, bool> ascend(const std::vector<GeneralizedRule>& group, const Taxonomy& tax,
                                                     Side side) {
    std::map<RuleKey, GeneralizedRule> merged;
    bool changed = false;
    for (const auto& rule : group) {
        const Itemset& fixed = rule_side(rule, other(side));
        std::vector<Item> next;
        Itemset produced;
        for (const auto& item : rule_side(rule, side)) {
            auto parent = tax.parent_of(item);
            if (parent && !fixed.contains(*parent)) {
                next.push_back(*parent);
                produced.insert(*parent);
                changed = true;
            } else {
                next.push_back(item);
            }
        }
        GeneralizedRule g = rule;
        Itemset side_items(std::move(next));
        Itemset kept = set_intersection(rule.generalized_items, side_items);
        g.generalized_items = set_union(kept, produced);
        mutable_side(g, side) = std::move(side_items);
        g.table.reset();
        auto key = g.key();
        auto it = merged.find(key);
        if (it == merged.end()) merged.emplace(std::move(key), std::move(g));
        else merge_into(it->second, std::move(g));
    }
    std::vector<GeneralizedRule> out;
    out.reserve(merged.size());
    for (auto& [key, g] : merged) out.push_back(std::move(g));
    return {std::move(out), changed};
}

std::vector<std::string> collision_warnings(const Itemset& fixed, const std::vector<AssociationRule>& rules,
                                            const TaxonomySet& taxes, Side side) {
    std::set<std::string> out;
    for (const auto& rule : rules) {
        for (const auto& g : rule_side(rule, side)) {
            for (const auto& f : fixed) {
                if (is_ancestor(taxes, f, g) || is_ancestor(taxes, g, f))
                    out.insert("side-item collision in " + to_string(rule.key()) + ": '" + g.name() + "' and '" +
                               f.name() + "' share a taxonomy branch");
            }
        }
    }
    return {out.begin(), out.end()};
}

// Per-item transaction bitsets, built on demand.
class MatchIndex {
public:
    MatchIndex(const TransactionDatabase& db, const TaxonomySet& taxes)
        : db_(db), taxes_(taxes), words_((db.size() + 63) / 64) {
        for (const auto& t : db.transactions())
            for (const auto& item : t.items) {
                auto& bits = literal_[item];
                if (bits.empty()) bits.assign(words_, 0);
                bits[t.id / 64] |= std::uint64_t{1} << (t.id % 64);
            }
    }

    std::vector<std::uint64_t> match(const Itemset& items) {
        std::vector<std::uint64_t> acc(words_, ~std::uint64_t{0});
        for (const auto& item : items) {
            const auto& bits = item_bits(item);
            for (std::size_t w = 0; w < words_; ++w) acc[w] &= bits[w];
        }
        trim(acc);
        return acc;
    }

    ContingencyTable table(const Itemset& lhs, const Itemset& rhs) {
        auto l = match(lhs);
        auto r = match(rhs);
        ContingencyTable ct;
        ct.n = db_.size();
        std::size_t nl = 0, nr = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            ct.n_lr += static_cast<std::size_t>(std::popcount(l[w] & r[w]));
            nl += static_cast<std::size_t>(std::popcount(l[w]));
            nr += static_cast<std::size_t>(std::popcount(r[w]));
        }
        ct.n_lnr = nl - ct.n_lr;
        ct.n_nlr = nr - ct.n_lr;
        ct.n_nlnr = ct.n - ct.n_lr - ct.n_lnr - ct.n_nlr;
        return ct;
    }

private:
    void trim(std::vector<std::uint64_t>& bits) const {
        if (words_ && db_.size() % 64) bits.back() &= (std::uint64_t{1} << (db_.size() % 64)) - 1;
    }

    const std::vector<std::uint64_t>& item_bits(const Item& item) {
        auto it = expanded_.find(item);
        if (it != expanded_.end()) return it->second;
        std::vector<std::uint64_t> bits(words_, 0);
        for (const auto& node : self_and_descendants(taxes_, item)) {
            auto lit = literal_.find(node);
            if (lit == literal_.end()) continue;
            for (std::size_t w = 0; w < words_; ++w) bits[w] |= lit->second[w];
        }
        return expanded_.emplace(item, std::move(bits)).first->second;
    }

    const TransactionDatabase& db_;
    const TaxonomySet& taxes_;
    std::size_t words_;
    std::map<Item, std::vector<std::uint64_t>> literal_;
    std::map<Item, std::vector<std::uint64_t>> expanded_;
};

} // namespace

std::vector<GeneralizedRule> ascend_one_level(const std::vector<GeneralizedRule>& group, const Taxonomy& tax,
                                              Side side) {
    return ascend(group, tax, side).first;
}

GeneralizedRuleSet generalize(const RuleSet& rules, const TaxonomySet& taxes, Side side, const GartOptions& opts,
                              const TransactionDatabase* db) {
    opts.validate();
    if (db && db->empty()) throw Error(ErrorCode::EmptyDatabase, "contingency tables need a non-empty database");

    GeneralizedRuleSet out;
    out.side = side;
    out.options = opts;
    out.mining_params = rules.mining_params();
    out.taxonomies = taxes;

    for (const auto& [fixed, members] : partition_by_fixed_side(rules, side)) {
        auto warnings = collision_warnings(fixed, members, taxes, side);
        out.warnings.insert(out.warnings.end(), warnings.begin(), warnings.end());

        std::vector<GeneralizedRule> current;
        current.reserve(members.size());
        for (const auto& rule : members) current.push_back(GeneralizedRule::pass_through(rule, side));

        for (const auto& tax : taxes) {
            for (std::size_t level = 0; !opts.max_level || level < *opts.max_level; ++level) {
                auto [next, changed] = ascend(current, tax, side);
                if (!changed) break;
                if (opts.merge_only && next.size() == current.size()) break;
                current = std::move(next);
            }
        }
        out.rules.insert(out.rules.end(), std::make_move_iterator(current.begin()),
                         std::make_move_iterator(current.end()));
    }
    std::sort(out.rules.begin(), out.rules.end(),
              [](const GeneralizedRule& a, const GeneralizedRule& b) { return a.key() < b.key(); });

    if (db) {
        out.n_transactions = db->size();
        auto overlap = database_overlap_warnings(taxes, *db);
        out.warnings.insert(out.warnings.end(), overlap.begin(), overlap.end());
        MatchIndex index(*db, taxes);
        for (auto& rule : out.rules) rule.table = index.table(rule.lhs, rule.rhs);
    }
    return out;
}

std::vector<bool> match_set(const TransactionDatabase& db, const Itemset& items, const TaxonomySet& taxes) {
    MatchIndex index(db, taxes);
    auto bits = index.match(items);
    std::vector<bool> out(db.size());
    for (std::size_t i = 0; i < db.size(); ++i) out[i] = bits[i / 64] >> (i % 64) & 1;
    return out;
}

ContingencyTable contingency(const TransactionDatabase& db, const Itemset& lhs, const Itemset& rhs,
                             const TaxonomySet& taxes) {
    if (db.empty()) throw Error(ErrorCode::EmptyDatabase, "contingency table of an empty database");
    MatchIndex index(db, taxes);
    return index.table(lhs, rhs);
}

ContingencyTable contingency(const TransactionDatabase& db, const GeneralizedRule& rule, const TaxonomySet& taxes) {
    return contingency(db, rule.lhs, rule.rhs, taxes);
}

std::vector<RuleKey> expand(const GeneralizedRule& rule, const TaxonomySet& taxes) {
    const Side side = rule.side;
    const Itemset& fixed = rule_side(rule, other(side));
    const Itemset plain = set_difference(rule_side(rule, side), rule.generalized_items);

    std::vector<Itemset> partial{plain};
    for (const auto& g : rule.generalized_items) {
        std::vector<Itemset> next;
        for (const auto& base : partial)
            for (const auto& leaf : leaf_descendants(taxes, g)) {
                Itemset s = base;
                s.insert(leaf);
                next.push_back(std::move(s));
            }
        partial = std::move(next);
    }

    std::set<RuleKey> out;
    for (auto& s : partial) {
        if (s.intersects(fixed)) continue;
        out.insert(side == Side::LHS ? RuleKey{std::move(s), fixed} : RuleKey{fixed, std::move(s)});
    }
    return {out.begin(), out.end()};
}

} // namespace gar
