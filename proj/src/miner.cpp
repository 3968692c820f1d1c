#include "gar/miner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

namespace gar {

std::size_t min_support_count(double min_support, std::size_t n) {
    auto frac = [n](std::size_t c) { return static_cast<double>(c) / static_cast<double>(n); };
    if (n == 0) return 0;
    auto c = static_cast<std::size_t>(std::ceil(min_support * static_cast<double>(n)));
    while (c > 0 && frac(c - 1) >= min_support) --c;
    while (c <= n && frac(c) < min_support) ++c;
    return c;
}

namespace {

using Ids = std::vector<std::size_t>;

// Candidates of size k+1 from sorted frequent k-sets sharing a (k-1)-prefix,
// keeping only those whose every k-subset is frequent.
std::vector<Ids> next_candidates(const std::vector<Ids>& level) {
    std::vector<Ids> out;
    for (std::size_t i = 0; i < level.size(); ++i) {
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            const auto& a = level[i];
            const auto& b = level[j];
            if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
            Ids cand = a;
            cand.push_back(b.back());
            bool closed = true;
            for (std::size_t drop = 0; drop + 2 < cand.size() && closed; ++drop) {
                Ids sub;
                for (std::size_t t = 0; t < cand.size(); ++t)
                    if (t != drop) sub.push_back(cand[t]);
                closed = std::binary_search(level.begin(), level.end(), sub);
            }
            if (closed) out.push_back(std::move(cand));
        }
    }
    return out;
}

} // namespace

std::vector<FrequentItemset> frequent_itemsets(const TransactionDatabase& db, double min_support,
                                               std::size_t max_items) {
    if (db.empty()) throw Error(ErrorCode::EmptyDatabase, "cannot mine an empty database");
    if (!(min_support > 0.0 && min_support <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "min_support must lie in (0,1]");

    const auto& universe = db.item_universe().items();
    const std::size_t threshold = min_support_count(min_support, db.size());

    std::vector<Ids> baskets;
    baskets.reserve(db.size());
    for (const auto& t : db.transactions()) {
        Ids ids;
        for (const auto& item : t.items)
            ids.push_back(static_cast<std::size_t>(
                std::lower_bound(universe.begin(), universe.end(), item) - universe.begin()));
        baskets.push_back(std::move(ids));
    }

    std::vector<FrequentItemset> out;
    auto emit = [&](const Ids& ids, std::size_t count) {
        std::vector<Item> items;
        for (auto id : ids) items.push_back(universe[id]);
        out.push_back(FrequentItemset{Itemset(std::move(items)), count});
    };

    std::vector<std::size_t> single(universe.size(), 0);
    for (const auto& b : baskets)
        for (auto id : b) ++single[id];
    std::vector<Ids> level;
    for (std::size_t id = 0; id < universe.size(); ++id) {
        if (single[id] >= threshold) {
            level.push_back({id});
            emit(level.back(), single[id]);
        }
    }

    for (std::size_t k = 2; k <= max_items && !level.empty(); ++k) {
        auto candidates = next_candidates(level);
        std::vector<std::size_t> counts(candidates.size(), 0);
        for (const auto& b : baskets) {
            if (b.size() < k) continue;
            for (std::size_t c = 0; c < candidates.size(); ++c)
                if (std::includes(b.begin(), b.end(), candidates[c].begin(), candidates[c].end())) ++counts[c];
        }
        level.clear();
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (counts[c] >= threshold) {
                emit(candidates[c], counts[c]);
                level.push_back(std::move(candidates[c]));
            }
        }
    }
    return out;
}

RuleSet derive_rules(const std::vector<FrequentItemset>& freq, const MiningParams& params, std::size_t n) {
    params.validate();
    std::map<Itemset, std::size_t> counts;
    for (const auto& f : freq) counts.emplace(f.items, f.count);

    auto count_of = [&](const Itemset& set) {
        auto it = counts.find(set);
        if (it == counts.end())
            throw Error(ErrorCode::ClosureViolation, "subset {" + to_string(set) + "} of a frequent itemset is missing");
        return it->second;
    };

    RuleSet rules;
    rules.set_mining_params(params);
    for (const auto& f : freq) {
        const auto& items = f.items.items();
        const std::size_t k = items.size();
        if (k < 2 || k > params.max_items) continue;
        if (k >= 64) throw Error(ErrorCode::InvalidArgument, "itemset too large to split into rules");
        const std::uint64_t full = (std::uint64_t{1} << k) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            std::vector<Item> lhs, rhs;
            for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? lhs : rhs).push_back(items[i]);
            Itemset lhs_set(std::move(lhs));
            const std::size_t lhs_count = count_of(lhs_set);
            count_of(Itemset(rhs.begin(), rhs.end()));
            const double confidence = static_cast<double>(f.count) / static_cast<double>(lhs_count);
            if (confidence < params.min_confidence) continue;
            const double support = static_cast<double>(f.count) / static_cast<double>(n);
            rules.add(AssociationRule(std::move(lhs_set), Itemset(std::move(rhs)), support, confidence));
        }
    }
    return rules;
}

RuleSet mine(const TransactionDatabase& db, const MiningParams& params) {
    params.validate();
    auto freq = frequent_itemsets(db, params.min_support, params.max_items);
    return derive_rules(freq, params, db.size());
}

} // namespace gar
