#include <doctest.h>

#include "gar/miner.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace gar;

namespace {

std::vector<test::OracleRule> as_oracle(const RuleSet& rules) {
    std::vector<test::OracleRule> out;
    for (const auto& [key, r] : rules) {
        std::set<std::string> l, h;
        for (const auto& i : r.lhs) l.insert(i.name());
        for (const auto& i : r.rhs) h.insert(i.name());
        out.push_back({l, h, *r.support, *r.confidence});
    }
    std::sort(out.begin(), out.end());
    return out;
}

TransactionDatabase small_db() { return TransactionDatabase({{"a", "b"}, {"a", "c"}, {"a", "b", "c"}, {"b"}}); }

} // namespace

TEST_CASE("support threshold count is exact at the fractional level") {
    CHECK(min_support_count(0.5, 4) == 2);
    CHECK(min_support_count(0.3, 10) == 3); // naive ceil(0.3*10) rounds to 4
    CHECK(min_support_count(1.0, 7) == 7);
    CHECK(min_support_count(0.01, 4) == 1);
}

TEST_CASE("frequent itemsets of the four-basket example") {
    auto freq = frequent_itemsets(small_db(), 0.5, 3);
    // Frozen from brute-force enumeration of all 7 non-empty subsets.
    std::vector<FrequentItemset> expected{
        {{"a"}, 3}, {{"b"}, 3}, {{"c"}, 2}, {{"a", "b"}, 2}, {{"a", "c"}, 2},
    };
    CHECK(freq == expected);
    auto oracle = test::brute_frequent(small_db(), 0.5, 3);
    CHECK(oracle.size() == expected.size());
}

TEST_CASE("min_support 1.0 keeps only items present everywhere") {
    TransactionDatabase db({{"a", "b", "x"}, {"x", "c"}, {"x", "a"}});
    auto freq = frequent_itemsets(db, 1.0, 5);
    REQUIRE(freq.size() == 1);
    CHECK(freq[0].items == Itemset{"x"});
    CHECK(freq[0].count == 3);
}

TEST_CASE("single transaction") {
    auto freq = frequent_itemsets(TransactionDatabase({{"x"}}), 0.5, 5);
    CHECK(freq == std::vector<FrequentItemset>{{{"x"}, 1}});
}

TEST_CASE("empty database is an error") {
    CHECK_THROWS_AS(frequent_itemsets(TransactionDatabase{}, 0.5, 5), Error);
    CHECK_THROWS_AS(mine(TransactionDatabase{}, MiningParams{}), Error);
}

TEST_CASE("derive_rules on the four-basket example") {
    MiningParams params{0.5, 0.5, 3};
    auto rules = derive_rules(frequent_itemsets(small_db(), 0.5, 3), params, 4);
    auto a_b = rules.find(canonicalize_rule({"a"}, {"b"}));
    REQUIRE(a_b);
    CHECK(*a_b->confidence == 2.0 / 3.0);
    CHECK(*a_b->support == 2.0 / 4.0);
    CHECK(rules.size() == 4); // a=>b, b=>a, a=>c, c=>a
    CHECK(as_oracle(rules).size() == test::brute_rules(small_db(), params).size());
}

TEST_CASE("derive_rules edge cases") {
    MiningParams params{0.5, 0.5, 3};
    CHECK(derive_rules({{{"a"}, 3}}, params, 4).empty());
    CHECK_THROWS_AS(derive_rules({{{"a", "b"}, 2}, {{"a"}, 3}}, params, 4), Error);

    TransactionDatabase db({{"a", "b"}, {"a"}, {"a", "b"}, {"c"}});
    auto strict = mine(db, MiningParams{0.25, 1.0, 3});
    CHECK(strict.contains(canonicalize_rule({"b"}, {"a"})));
    CHECK(!strict.contains(canonicalize_rule({"a"}, {"b"})));
}

TEST_CASE("mine records the default parameters") {
    auto rules = mine(small_db(), MiningParams{});
    REQUIRE(rules.mining_params());
    CHECK(rules.mining_params()->min_support == 0.5);
    CHECK(rules.mining_params()->min_confidence == 0.5);
    CHECK(rules.mining_params()->max_items == 5);
}

TEST_CASE("mined rules equal exhaustive enumeration and rescan") {
    test::Rng rng(1234);
    for (int round = 0; round < 150; ++round) {
        auto universe = test::leaf_names(test::uniform(rng, 1, 6));
        auto db = test::random_db(rng, universe, test::uniform(rng, 1, 8), 0.5);
        if (db.item_universe().empty()) continue;
        MiningParams params{static_cast<double>(test::uniform(rng, 1, 8)) / 8.0,
                            static_cast<double>(test::uniform(rng, 1, 10)) / 10.0, test::uniform(rng, 2, 5)};
        auto freq = frequent_itemsets(db, params.min_support, params.max_items);
        // Downward closure with monotone counts.
        std::map<Itemset, std::size_t> counts;
        for (const auto& f : freq) counts[f.items] = f.count;
        for (const auto& f : freq)
            for (const auto& item : f.items) {
                auto sub = f.items;
                sub.erase(item);
                if (sub.empty()) continue;
                REQUIRE(counts.count(sub));
                CHECK(counts[sub] >= f.count);
            }
        auto rules = mine(db, params);
        CHECK(as_oracle(rules).size() == test::brute_rules(db, params).size());
        auto got = as_oracle(rules);
        auto want = test::brute_rules(db, params);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].lhs == want[i].lhs);
            CHECK(got[i].rhs == want[i].rhs);
            CHECK(got[i].support == want[i].support);
            CHECK(got[i].confidence == want[i].confidence);
        }
        for (const auto& [key, r] : rules) {
            std::set<std::string> all, lhs;
            for (const auto& i : r.lhs) { all.insert(i.name()); lhs.insert(i.name()); }
            for (const auto& i : r.rhs) all.insert(i.name());
            double sup = static_cast<double>(test::naive_count(db, all)) / static_cast<double>(db.size());
            double conf = static_cast<double>(test::naive_count(db, all)) /
                          static_cast<double>(test::naive_count(db, lhs));
            CHECK(std::abs(*r.support - sup) <= 1e-12);
            CHECK(std::abs(*r.confidence - conf) <= 1e-12);
            CHECK(*r.support >= params.min_support);
            CHECK(*r.confidence >= params.min_confidence);
        }
    }
}
