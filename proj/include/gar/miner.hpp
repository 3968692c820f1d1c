#ifndef GAR_MINER_HPP
#define GAR_MINER_HPP

#include <cstddef>
#include <vector>

#include "gar/core.hpp"

namespace gar {

struct FrequentItemset {
    Itemset items;
    std::size_t count = 0;

    friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

/// Smallest absolute count c with c / n >= min_support.
std::size_t min_support_count(double min_support, std::size_t n);

/// Level-wise Apriori. Output is ordered by size, then lexicographically.
/// Throws EmptyDatabase when db has no transactions.
std::vector<FrequentItemset> frequent_itemsets(const TransactionDatabase& db, double min_support,
                                               std::size_t max_items);

/// All rules lhs => rhs splitting a frequent itemset with confidence >= the
/// threshold. `freq` must be downward closed (ClosureViolation otherwise).
RuleSet derive_rules(const std::vector<FrequentItemset>& freq, const MiningParams& params, std::size_t n);

RuleSet mine(const TransactionDatabase& db, const MiningParams& params);

} // namespace gar

#endif
