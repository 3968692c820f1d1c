#include "gar/synth.hpp"

#include <cstdio>
#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace gar {

void SynthParams::validate() const {
    if (transactions == 0 || leaf_items == 0 || taxonomy_depth == 0 || branching == 0 || seed == 0)
        throw Error(ErrorCode::InvalidArgument, "synthetic data parameters must all be at least 1");
}

namespace {

// std distributions are implementation-defined; these are not.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) {
        const std::uint64_t bound = n;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

std::string numbered(const char* prefix, std::size_t i, std::size_t count) {
    int width = 1;
    for (std::size_t c = count; c >= 10; c /= 10) ++width;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, i);
    return buf;
}

} // namespace

SynthData synthesize(const SynthParams& params) {
    params.validate();
    Draw draw(params.seed);

    std::vector<Item> leaves;
    for (std::size_t i = 0; i < params.leaf_items; ++i) leaves.emplace_back(numbered("item-", i, params.leaf_items));
    for (std::size_t i = leaves.size(); i > 1; --i) std::swap(leaves[i - 1], leaves[draw.below(i)]);

    // Group consecutive nodes level by level; remember each node's parent.
    std::vector<TaxonomyEdge> edges;
    std::vector<std::vector<Item>> sibling_groups;
    std::vector<Item> level = leaves;
    for (std::size_t d = 1; d <= params.taxonomy_depth && (d == 1 || level.size() > 1); ++d) {
        std::vector<Item> parents;
        const std::size_t groups = (level.size() + params.branching - 1) / params.branching;
        for (std::size_t g = 0; g < groups; ++g) {
            Item parent(numbered(("cat" + std::to_string(d) + "-").c_str(), g, groups));
            std::vector<Item> members;
            for (std::size_t k = g * params.branching; k < std::min(level.size(), (g + 1) * params.branching); ++k) {
                edges.push_back({level[k], parent});
                members.push_back(level[k]);
            }
            if (d == 1) sibling_groups.push_back(std::move(members));
            parents.push_back(std::move(parent));
        }
        level = std::move(parents);
    }

    // Split the forest into one taxonomy per root.
    std::map<Item, Item> parent_of;
    for (const auto& e : edges) parent_of.emplace(e.child, e.parent);
    auto root_of = [&](Item node) {
        for (auto it = parent_of.find(node); it != parent_of.end(); it = parent_of.find(node)) node = it->second;
        return node;
    };
    std::map<Item, std::vector<TaxonomyEdge>> by_root;
    for (const auto& e : edges) by_root[root_of(e.child)].push_back(e);
    std::vector<Taxonomy> taxonomies;
    for (auto& [root, tree] : by_root) taxonomies.push_back(build_taxonomy(std::move(tree), "tree-" + root.name()));

    // Popular groups are drawn more often (quadratic skew toward low indices).
    const std::size_t n_groups = sibling_groups.size();
    auto pick_group = [&] {
        double u = draw.unit();
        return std::min(n_groups - 1, static_cast<std::size_t>(u * u * static_cast<double>(n_groups)));
    };

    std::vector<std::vector<Item>> baskets(params.transactions);
    for (auto& basket : baskets) {
        const std::size_t themes = 1 + draw.below(3);
        for (std::size_t t = 0; t < themes; ++t) {
            const std::size_t g = pick_group();
            const auto& group = sibling_groups[g];
            basket.push_back(group[draw.below(group.size())]);
            if (draw.chance(0.25)) basket.push_back(group[draw.below(group.size())]);
            // Groups come in pairs that are often bought together.
            if (draw.chance(0.5)) {
                const auto& partner = sibling_groups[(g ^ 1) < n_groups ? (g ^ 1) : g];
                basket.push_back(partner[draw.below(partner.size())]);
            }
        }
    }
    // Every leaf occurs at least once.
    std::vector<bool> seen(leaves.size(), false);
    std::map<Item, std::size_t> index;
    for (std::size_t i = 0; i < leaves.size(); ++i) index.emplace(leaves[i], i);
    for (const auto& basket : baskets)
        for (const auto& item : basket) seen[index[item]] = true;
    for (std::size_t i = 0, slot = 0; i < leaves.size(); ++i)
        if (!seen[i]) baskets[slot++ % baskets.size()].push_back(leaves[i]);

    SynthData out;
    for (auto& basket : baskets) out.db.add(Itemset(std::move(basket)));
    out.taxonomies = TaxonomySet(std::move(taxonomies));
    return out;
}

} // namespace gar
