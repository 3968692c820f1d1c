#ifndef GAR_CORE_HPP
#define GAR_CORE_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gar/error.hpp"

namespace gar {

/// An opaque, case-sensitive item token. Non-empty, no whitespace or control
/// characters. Taxonomy nodes and database items share this type.
class Item {
public:
    explicit Item(std::string name);
    Item(const char* name) : Item(std::string(name)) {}

    const std::string& name() const noexcept { return name_; }

    static bool is_valid_name(std::string_view name) noexcept;

    friend auto operator<=>(const Item&, const Item&) = default;
    friend bool operator==(const Item&, const Item&) = default;

private:
    std::string name_;
};

/// A finite set of items kept in lexicographic order without duplicates.
class Itemset {
public:
    using const_iterator = std::vector<Item>::const_iterator;

    Itemset() = default;
    Itemset(std::initializer_list<Item> items);
    explicit Itemset(std::vector<Item> items);

    template <typename It>
    Itemset(It first, It last) : Itemset(std::vector<Item>(first, last)) {}

    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }
    const_iterator begin() const noexcept { return items_.begin(); }
    const_iterator end() const noexcept { return items_.end(); }
    const Item& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<Item>& items() const noexcept { return items_; }

    bool contains(const Item& item) const;
    /// True when every item of `other` is in this set.
    bool includes(const Itemset& other) const;
    bool intersects(const Itemset& other) const;

    /// Returns true if the item was not already present.
    bool insert(const Item& item);
    bool erase(const Item& item);

    friend Itemset set_union(const Itemset& a, const Itemset& b);
    friend Itemset set_intersection(const Itemset& a, const Itemset& b);
    friend Itemset set_difference(const Itemset& a, const Itemset& b);

    friend auto operator<=>(const Itemset&, const Itemset&) = default;
    friend bool operator==(const Itemset&, const Itemset&) = default;

private:
    std::vector<Item> items_;
};

/// Space-separated canonical rendering, e.g. "a b c".
std::string to_string(const Itemset& set);

struct Transaction {
    std::size_t id = 0;
    Itemset items;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// Ordered baskets. Ids are positions; the item universe is maintained as the
/// exact union of all transactions.
class TransactionDatabase {
public:
    TransactionDatabase() = default;
    explicit TransactionDatabase(std::vector<Itemset> baskets);

    void add(Itemset basket);

    std::size_t size() const noexcept { return transactions_.size(); }
    bool empty() const noexcept { return transactions_.empty(); }
    const std::vector<Transaction>& transactions() const noexcept { return transactions_; }
    const Transaction& operator[](std::size_t i) const { return transactions_[i]; }
    const Itemset& item_universe() const noexcept { return universe_; }

    friend bool operator==(const TransactionDatabase&, const TransactionDatabase&) = default;

private:
    std::vector<Transaction> transactions_;
    Itemset universe_;
};

enum class Side { LHS, RHS };

Side other(Side side) noexcept;
std::string_view to_string(Side side) noexcept;
/// Accepts "lhs"/"rhs" in any case.
std::optional<Side> parse_side(std::string_view token);

/// Canonical identity of a rule: (lhs, rhs) as sets.
struct RuleKey {
    Itemset lhs;
    Itemset rhs;

    friend auto operator<=>(const RuleKey&, const RuleKey&) = default;
    friend bool operator==(const RuleKey&, const RuleKey&) = default;
};

/// Throws InvalidRule when a side is empty or the sides overlap.
RuleKey canonicalize_rule(Itemset lhs, Itemset rhs);

/// "a & b => c" style rendering used in messages.
std::string to_string(const RuleKey& key);

/// Stable 16-hex-digit URL-safe identifier of a rule (FNV-1a over the sides).
std::string rule_id(const RuleKey& key);

struct AssociationRule {
    Itemset lhs;
    Itemset rhs;
    std::optional<double> support;
    std::optional<double> confidence;

    AssociationRule() = default;
    /// Validates sides and measure ranges.
    AssociationRule(Itemset lhs, Itemset rhs, std::optional<double> support = std::nullopt,
                    std::optional<double> confidence = std::nullopt);

    RuleKey key() const { return RuleKey{lhs, rhs}; }

    friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

const Itemset& rule_side(const AssociationRule& rule, Side side) noexcept;
const Itemset& rule_side(const RuleKey& rule, Side side) noexcept;

struct MiningParams {
    double min_support = 0.5;
    double min_confidence = 0.5;
    std::size_t max_items = 5;

    /// Throws InvalidArgument when a field is out of range.
    void validate() const;

    friend bool operator==(const MiningParams&, const MiningParams&) = default;
};

/// Duplicate-free rules in canonical key order.
class RuleSet {
public:
    RuleSet() = default;
    explicit RuleSet(std::vector<AssociationRule> rules, std::optional<MiningParams> params = std::nullopt);

    /// Returns false (and keeps the existing rule) on a duplicate key.
    bool add(AssociationRule rule);
    bool contains(const RuleKey& key) const { return rules_.count(key) != 0; }
    const AssociationRule* find(const RuleKey& key) const;

    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    std::vector<AssociationRule> rules() const;

    auto begin() const noexcept { return rules_.begin(); }
    auto end() const noexcept { return rules_.end(); }

    const std::optional<MiningParams>& mining_params() const noexcept { return params_; }
    void set_mining_params(std::optional<MiningParams> params) { params_ = std::move(params); }

    friend bool operator==(const RuleSet&, const RuleSet&) = default;

private:
    std::map<RuleKey, AssociationRule> rules_;
    std::optional<MiningParams> params_;
};

} // namespace gar

#endif
