#include "gar/taxonomy.hpp"

#include <algorithm>

namespace gar {

Taxonomy build_taxonomy(std::vector<TaxonomyEdge> edges, std::string name) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Taxonomy tax;
    tax.name_ = std::move(name);
    std::vector<Item> nodes;
    for (const auto& edge : edges) {
        if (edge.child == edge.parent)
            throw Error(ErrorCode::Cycle, "cycle through '" + edge.child.name() + "' (self edge)");
        auto [it, inserted] = tax.parent_.emplace(edge.child, edge.parent);
        if (!inserted)
            throw Error(ErrorCode::DuplicateParent, "item '" + edge.child.name() + "' has two parents: '" +
                                                        it->second.name() + "' and '" + edge.parent.name() + "'");
        tax.children_[edge.parent].push_back(edge.child);
        nodes.push_back(edge.child);
        nodes.push_back(edge.parent);
    }
    tax.nodes_ = Itemset(std::move(nodes));

    // Walk parent links from every node; with single parents a revisit within
    // one walk means a cycle.
    std::map<Item, int> state; // 1 = on current walk, 2 = known to reach a root
    for (const auto& start : tax.nodes_) {
        std::vector<Item> walk;
        std::optional<Item> cur = start;
        while (cur) {
            auto s = state.find(*cur);
            if (s != state.end()) {
                if (s->second == 1) throw Error(ErrorCode::Cycle, "cycle through '" + cur->name() + "'");
                break;
            }
            state[*cur] = 1;
            walk.push_back(*cur);
            auto p = tax.parent_.find(*cur);
            if (p == tax.parent_.end()) break;
            cur = p->second;
        }
        for (const auto& node : walk) state[node] = 2;
    }

    for (const auto& node : tax.nodes_)
        if (!tax.parent_.count(node)) tax.roots_.insert(node);
    tax.edges_ = std::move(edges);
    return tax;
}

std::optional<Item> Taxonomy::parent_of(const Item& item) const {
    auto it = parent_.find(item);
    if (it == parent_.end()) return std::nullopt;
    return it->second;
}

const std::vector<Item>& Taxonomy::children_of(const Item& item) const {
    static const std::vector<Item> none;
    auto it = children_.find(item);
    return it == children_.end() ? none : it->second;
}

Itemset Taxonomy::descendants(const Item& item) const {
    std::vector<Item> out;
    std::vector<Item> stack(children_of(item));
    while (!stack.empty()) {
        Item node = std::move(stack.back());
        stack.pop_back();
        const auto& kids = children_of(node);
        stack.insert(stack.end(), kids.begin(), kids.end());
        out.push_back(std::move(node));
    }
    return Itemset(std::move(out));
}

Itemset Taxonomy::leaf_descendants(const Item& item) const {
    if (!is_internal(item)) return Itemset{item};
    std::vector<Item> leaves;
    for (const auto& node : descendants(item))
        if (!is_internal(node)) leaves.push_back(node);
    return Itemset(std::move(leaves));
}

std::size_t Taxonomy::depth(const Item& item) const {
    std::size_t steps = 0;
    for (auto p = parent_of(item); p; p = parent_of(*p)) ++steps;
    return steps;
}

std::optional<Item> parent_of(const Taxonomy& tax, const Item& item) { return tax.parent_of(item); }

TaxonomySet::TaxonomySet(std::vector<Taxonomy> taxonomies) : taxonomies_(std::move(taxonomies)) {
    for (std::size_t i = 0; i < taxonomies_.size(); ++i) {
        for (const auto& node : taxonomies_[i].nodes()) {
            auto [it, inserted] = owner_.emplace(node, i);
            if (!inserted)
                throw Error(ErrorCode::Disjointness, "item '" + node.name() + "' appears in taxonomies '" +
                                                         taxonomies_[it->second].name() + "' and '" +
                                                         taxonomies_[i].name() + "'");
        }
    }
}

const Taxonomy* TaxonomySet::find(const Item& item) const {
    auto it = owner_.find(item);
    return it == owner_.end() ? nullptr : &taxonomies_[it->second];
}

bool TaxonomySet::is_internal(const Item& item) const {
    const auto* tax = find(item);
    return tax && tax->is_internal(item);
}

std::optional<Item> TaxonomySet::parent_of(const Item& item) const {
    const auto* tax = find(item);
    return tax ? tax->parent_of(item) : std::nullopt;
}

Itemset leaf_descendants(const TaxonomySet& taxes, const Item& item) {
    const auto* tax = taxes.find(item);
    return tax ? tax->leaf_descendants(item) : Itemset{item};
}

Itemset self_and_descendants(const TaxonomySet& taxes, const Item& item) {
    const auto* tax = taxes.find(item);
    if (!tax) return Itemset{item};
    auto out = tax->descendants(item);
    out.insert(item);
    return out;
}

bool is_ancestor(const TaxonomySet& taxes, const Item& anc, const Item& desc) {
    const auto* tax = taxes.find(desc);
    if (!tax) return false;
    for (auto p = tax->parent_of(desc); p; p = tax->parent_of(*p))
        if (*p == anc) return true;
    return false;
}

std::vector<std::string> database_overlap_warnings(const TaxonomySet& taxes, const TransactionDatabase& db) {
    std::vector<std::string> out;
    for (const auto& item : db.item_universe())
        if (taxes.is_internal(item))
            out.push_back("database item '" + item.name() + "' is an internal taxonomy node");
    return out;
}

} // namespace gar
