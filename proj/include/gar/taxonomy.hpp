#ifndef GAR_TAXONOMY_HPP
#define GAR_TAXONOMY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gar/core.hpp"

namespace gar {

struct TaxonomyEdge {
    Item child;
    Item parent;

    friend auto operator<=>(const TaxonomyEdge&, const TaxonomyEdge&) = default;
    friend bool operator==(const TaxonomyEdge&, const TaxonomyEdge&) = default;
};

/// An is-a forest: every node has at most one parent and parent links never
/// cycle. Internal nodes are the generalized items.
class Taxonomy {
public:
    Taxonomy() = default;

    const std::string& name() const noexcept { return name_; }
    /// Edges in canonical (child, parent) order.
    const std::vector<TaxonomyEdge>& edges() const noexcept { return edges_; }
    const Itemset& roots() const noexcept { return roots_; }
    const Itemset& nodes() const noexcept { return nodes_; }

    bool contains(const Item& item) const { return nodes_.contains(item); }
    bool is_internal(const Item& item) const { return children_.count(item) != 0; }
    bool is_leaf(const Item& item) const { return contains(item) && !is_internal(item); }

    std::optional<Item> parent_of(const Item& item) const;
    const std::vector<Item>& children_of(const Item& item) const;

    /// Leaves at or below `item`; {item} when it is not an internal node.
    Itemset leaf_descendants(const Item& item) const;
    /// Every node strictly below `item`.
    Itemset descendants(const Item& item) const;
    /// Number of parent steps from `item` to its root (0 for roots/unknown).
    std::size_t depth(const Item& item) const;

    friend bool operator==(const Taxonomy& a, const Taxonomy& b) {
        return a.name_ == b.name_ && a.edges_ == b.edges_;
    }

    friend Taxonomy build_taxonomy(std::vector<TaxonomyEdge> edges, std::string name);

private:
    std::string name_;
    std::vector<TaxonomyEdge> edges_;
    std::map<Item, Item> parent_;
    std::map<Item, std::vector<Item>> children_;
    Itemset nodes_;
    Itemset roots_;
};

/// Validates the edges into a forest. Identical duplicate edges collapse.
/// Throws DuplicateParent (naming the child) or Cycle (naming a node on it).
Taxonomy build_taxonomy(std::vector<TaxonomyEdge> edges, std::string name = {});

std::optional<Item> parent_of(const Taxonomy& tax, const Item& item);

/// Ordered list of taxonomies with pairwise disjoint node sets.
class TaxonomySet {
public:
    TaxonomySet() = default;
    /// Throws Disjointness when a node appears in two taxonomies.
    explicit TaxonomySet(std::vector<Taxonomy> taxonomies);

    const std::vector<Taxonomy>& taxonomies() const noexcept { return taxonomies_; }
    std::size_t size() const noexcept { return taxonomies_.size(); }
    bool empty() const noexcept { return taxonomies_.empty(); }
    auto begin() const noexcept { return taxonomies_.begin(); }
    auto end() const noexcept { return taxonomies_.end(); }
    const Taxonomy& operator[](std::size_t i) const { return taxonomies_[i]; }

    /// The taxonomy owning `item`, if any.
    const Taxonomy* find(const Item& item) const;
    bool is_internal(const Item& item) const;
    std::optional<Item> parent_of(const Item& item) const;

    friend bool operator==(const TaxonomySet&, const TaxonomySet&) = default;

private:
    std::vector<Taxonomy> taxonomies_;
    std::map<Item, std::size_t> owner_;
};

Itemset leaf_descendants(const TaxonomySet& taxes, const Item& item);
/// `item` plus every node below it.
Itemset self_and_descendants(const TaxonomySet& taxes, const Item& item);
/// Strict ancestry: `anc` is reachable from `desc` by one or more parent steps.
bool is_ancestor(const TaxonomySet& taxes, const Item& anc, const Item& desc);

/// Items of the database that are internal nodes of some taxonomy.
std::vector<std::string> database_overlap_warnings(const TaxonomySet& taxes, const TransactionDatabase& db);

} // namespace gar

#endif
