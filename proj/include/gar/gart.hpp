#ifndef GAR_GART_HPP
#define GAR_GART_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gar/core.hpp"
#include "gar/taxonomy.hpp"

namespace gar {

/// Joint counts of a rule's two sides against a transaction database.
struct ContingencyTable {
    std::size_t n_lr = 0;   // lhs and rhs
    std::size_t n_lnr = 0;  // lhs, not rhs
    std::size_t n_nlr = 0;  // rhs, not lhs
    std::size_t n_nlnr = 0; // neither
    std::size_t n = 0;

    friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
};

struct GartOptions {
    /// Parent steps allowed per item and taxonomy; absent means up to the roots.
    std::optional<std::size_t> max_level;
    /// Keep a level pass only when it merged at least two rules.
    bool merge_only = false;

    void validate() const;

    friend bool operator==(const GartOptions&, const GartOptions&) = default;
};

struct GeneralizedRule {
    Itemset lhs;
    Itemset rhs;
    Side side = Side::LHS;
    /// Original rules collapsed into this one, in canonical key order.
    std::vector<AssociationRule> sources;
    /// Items on the generalized side that were introduced by ascent.
    Itemset generalized_items;
    std::optional<ContingencyTable> table;

    RuleKey key() const { return RuleKey{lhs, rhs}; }
    bool is_pass_through() const { return generalized_items.empty(); }

    static GeneralizedRule pass_through(const AssociationRule& rule, Side side);

    friend bool operator==(const GeneralizedRule&, const GeneralizedRule&) = default;
};

const Itemset& rule_side(const GeneralizedRule& rule, Side side) noexcept;

struct GeneralizedRuleSet {
    /// Canonical key order.
    std::vector<GeneralizedRule> rules;
    Side side = Side::LHS;
    GartOptions options;
    std::optional<MiningParams> mining_params;
    TaxonomySet taxonomies;
    /// Transactions the tables were computed against, when a database was given.
    std::optional<std::size_t> n_transactions;
    std::vector<std::string> warnings;

    /// Reassembles the input rule set from the sources.
    RuleSet source_ruleset() const;
    std::size_t source_count() const;
    const GeneralizedRule* find(const RuleKey& key) const;

    friend bool operator==(const GeneralizedRuleSet&, const GeneralizedRuleSet&) = default;
};

/// Groups rules by their fixed side: rhs when generalizing LHS, lhs otherwise.
std::map<Itemset, std::vector<AssociationRule>> partition_by_fixed_side(const RuleSet& rules, Side side);

/// One simultaneous parent step for every replaceable item of the generalized
/// side, then duplicate merging. An item is not replaced by a parent that
/// already sits on the fixed side.
std::vector<GeneralizedRule> ascend_one_level(const std::vector<GeneralizedRule>& group, const Taxonomy& tax,
                                              Side side);

GeneralizedRuleSet generalize(const RuleSet& rules, const TaxonomySet& taxes, Side side,
                              const GartOptions& opts = {}, const TransactionDatabase* db = nullptr);

/// Transaction ids matching an itemset: every item is present itself or via a
/// taxonomy descendant.
std::vector<bool> match_set(const TransactionDatabase& db, const Itemset& items, const TaxonomySet& taxes);

ContingencyTable contingency(const TransactionDatabase& db, const Itemset& lhs, const Itemset& rhs,
                             const TaxonomySet& taxes);
ContingencyTable contingency(const TransactionDatabase& db, const GeneralizedRule& rule, const TaxonomySet& taxes);

/// Each generalized item replaced by each of its leaf descendants; overlapping
/// expansions are dropped. A pass-through rule expands to itself.
std::vector<RuleKey> expand(const GeneralizedRule& rule, const TaxonomySet& taxes);

} // namespace gar

#endif
