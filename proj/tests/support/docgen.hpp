#ifndef GAR_TEST_DOCGEN_HPP
#define GAR_TEST_DOCGEN_HPP

// Random values of each document kind, for round-trip checks.

#include "gar/gart.hpp"
#include "generators.hpp"

namespace gar::test {

inline TransactionDatabase random_nonempty_db(Rng& rng, const std::vector<Item>& leaves, std::size_t max_n) {
    TransactionDatabase db;
    const std::size_t n = uniform(rng, 1, max_n);
    for (std::size_t i = 0; i < n; ++i) db.add(random_itemset(rng, leaves, 4));
    return db;
}

inline GeneralizedRuleSet random_generalized(Rng& rng) {
    auto leaves = leaf_names(uniform(rng, 2, 8));
    auto taxes = random_forest(rng, leaves);
    auto rules = random_rules(rng, leaves, 10);
    GartOptions opts;
    if (coin(rng, 0.4)) opts.max_level = uniform(rng, 1, 3);
    opts.merge_only = coin(rng, 0.3);
    auto db = random_nonempty_db(rng, leaves, 15);
    return generalize(rules, taxes, coin(rng, 0.5) ? Side::LHS : Side::RHS, opts, coin(rng, 0.6) ? &db : nullptr);
}

} // namespace gar::test

#endif
