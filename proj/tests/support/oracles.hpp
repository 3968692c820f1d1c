#ifndef GAR_TEST_ORACLES_HPP
#define GAR_TEST_ORACLES_HPP

// Brute-force reference computations. They deliberately use only the core
// value types and parent links, never the miner, the gart index or the
// taxonomy descendant queries they are checked against.

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gar/core.hpp"
#include "gar/taxonomy.hpp"

namespace gar::test {

inline std::size_t naive_count(const TransactionDatabase& db, const std::set<std::string>& items) {
    std::size_t count = 0;
    for (const auto& t : db.transactions()) {
        bool all = true;
        for (const auto& name : items) {
            bool found = false;
            for (const auto& item : t.items) found = found || item.name() == name;
            all = all && found;
        }
        count += all;
    }
    return count;
}

struct OracleItemset {
    std::set<std::string> items;
    std::size_t count;
};

/// Every subset of the universe whose relative support reaches min_support.
inline std::vector<OracleItemset> brute_frequent(const TransactionDatabase& db, double min_support,
                                                 std::size_t max_items) {
    std::vector<std::string> universe;
    for (const auto& item : db.item_universe()) universe.push_back(item.name());
    std::vector<OracleItemset> out;
    const std::uint64_t limit = std::uint64_t{1} << universe.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        std::set<std::string> s;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1) s.insert(universe[i]);
        if (s.size() > max_items) continue;
        auto c = naive_count(db, s);
        if (static_cast<double>(c) / static_cast<double>(db.size()) >= min_support) out.push_back({s, c});
    }
    return out;
}

struct OracleRule {
    std::set<std::string> lhs, rhs;
    double support, confidence;

    friend bool operator<(const OracleRule& a, const OracleRule& b) {
        return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
    }
};

inline std::vector<OracleRule> brute_rules(const TransactionDatabase& db, const MiningParams& params) {
    std::vector<OracleRule> out;
    for (const auto& f : brute_frequent(db, params.min_support, params.max_items)) {
        if (f.items.size() < 2) continue;
        std::vector<std::string> v(f.items.begin(), f.items.end());
        const std::uint64_t full = (std::uint64_t{1} << v.size()) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            std::set<std::string> lhs, rhs;
            for (std::size_t i = 0; i < v.size(); ++i) (mask >> i & 1 ? lhs : rhs).insert(v[i]);
            double conf = static_cast<double>(f.count) / static_cast<double>(naive_count(db, lhs));
            if (conf < params.min_confidence) continue;
            out.push_back({lhs, rhs, static_cast<double>(f.count) / static_cast<double>(db.size()), conf});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Is `anc` on the parent chain of `node` (or equal to it)?
inline bool naive_at_or_below(const TaxonomySet& taxes, const std::string& node, const std::string& anc) {
    std::string cur = node;
    for (std::size_t guard = 0; guard < 10000; ++guard) {
        if (cur == anc) return true;
        std::string next;
        for (const auto& tax : taxes)
            for (const auto& e : tax.edges())
                if (next.empty() && e.child.name() == cur) next = e.parent.name();
        if (next.empty()) return false;
        cur = next;
    }
    return false;
}

inline bool naive_matches(const Transaction& t, const Itemset& set, const TaxonomySet& taxes) {
    for (const auto& x : set) {
        bool ok = false;
        for (const auto& item : t.items) ok = ok || naive_at_or_below(taxes, item.name(), x.name());
        if (!ok) return false;
    }
    return true;
}

struct OracleTable {
    std::size_t n_lr = 0, n_lnr = 0, n_nlr = 0, n_nlnr = 0;
};

inline OracleTable naive_table(const TransactionDatabase& db, const Itemset& lhs, const Itemset& rhs,
                               const TaxonomySet& taxes) {
    OracleTable t;
    for (const auto& tr : db.transactions()) {
        bool l = naive_matches(tr, lhs, taxes);
        bool r = naive_matches(tr, rhs, taxes);
        if (l && r) ++t.n_lr;
        else if (l) ++t.n_lnr;
        else if (r) ++t.n_nlr;
        else ++t.n_nlnr;
    }
    return t;
}

/// Leaves whose parent chain passes through `item`, by scanning all nodes.
inline std::set<std::string> naive_leaves_under(const TaxonomySet& taxes, const std::string& item) {
    std::set<std::string> parents, nodes;
    for (const auto& tax : taxes)
        for (const auto& e : tax.edges()) {
            parents.insert(e.parent.name());
            nodes.insert(e.child.name());
            nodes.insert(e.parent.name());
        }
    if (!parents.count(item)) return {item};
    std::set<std::string> out;
    for (const auto& n : nodes)
        if (!parents.count(n) && naive_at_or_below(taxes, n, item)) out.insert(n);
    return out;
}

} // namespace gar::test

#endif
