#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace gar;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::NotFound;
}

std::set<std::string> names(const Itemset& s) {
    std::set<std::string> out;
    for (const auto& i : s) out.insert(i.name());
    return out;
}

} // namespace

TEST_CASE("the clothes forest has two roots") {
    auto tax = test::fig1_taxonomy();
    CHECK(tax.roots() == Itemset{"sport-clothes", "shoes"});
    CHECK(tax.name() == "clothes");
    CHECK(build_taxonomy({}, "empty").roots().empty());
}

TEST_CASE("build_taxonomy rejects cycles and multiple parents") {
    CHECK(code_of([] { build_taxonomy({{"a", "b"}, {"b", "a"}}); }) == ErrorCode::Cycle);
    CHECK(code_of([] { build_taxonomy({{"a", "a"}}); }) == ErrorCode::Cycle);
    CHECK(code_of([] { build_taxonomy({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "a"}}); }) == ErrorCode::Cycle);
    try {
        build_taxonomy({{"short", "light-clothes"}, {"short", "pants"}});
        FAIL("expected duplicate parent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateParent);
        CHECK(std::string(e.what()).find("short") != std::string::npos);
    }
    // Repeating an identical edge is harmless.
    CHECK(build_taxonomy({{"a", "b"}, {"a", "b"}}).edges().size() == 1);
}

TEST_CASE("parent_of") {
    auto tax = test::fig1_taxonomy();
    CHECK(parent_of(tax, "short") == Item("light-clothes"));
    CHECK(!parent_of(tax, "cap"));
    CHECK(!parent_of(tax, "sport-clothes"));
}

TEST_CASE("leaf_descendants") {
    TaxonomySet taxes({test::fig1_taxonomy()});
    CHECK(leaf_descendants(taxes, "light-clothes") == Itemset{"t-shirt", "short"});
    CHECK(leaf_descendants(taxes, "cap") == Itemset{"cap"});
    CHECK(leaf_descendants(taxes, "sport-clothes") == Itemset{"t-shirt", "short"});
    CHECK(leaf_descendants(taxes, "short") == Itemset{"short"});
}

TEST_CASE("is_ancestor is strict") {
    TaxonomySet taxes({test::fig1_taxonomy()});
    CHECK(is_ancestor(taxes, "sport-clothes", "short"));
    CHECK(!is_ancestor(taxes, "short", "short"));
    CHECK(!is_ancestor(taxes, "shoes", "cap"));
    CHECK(!is_ancestor(taxes, "short", "sport-clothes"));
}

TEST_CASE("taxonomy sets must be disjoint") {
    auto a = build_taxonomy({{"x", "p"}}, "a");
    auto b = build_taxonomy({{"y", "p"}}, "b");
    CHECK(code_of([&] { TaxonomySet({a, b}); }) == ErrorCode::Disjointness);
}

TEST_CASE("database items that are internal nodes are reported") {
    TaxonomySet taxes({test::fig1_taxonomy()});
    TransactionDatabase db;
    db.add({"short", "light-clothes"});
    auto w = database_overlap_warnings(taxes, db);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("light-clothes") != std::string::npos);
}

TEST_CASE("random forests: parent walks terminate and descendants agree with a brute-force walk") {
    test::Rng rng(42);
    for (int round = 0; round < 200; ++round) {
        auto taxes = test::random_forest(rng, test::leaf_names(12), 3, 4);
        for (const auto& tax : taxes) {
            for (const auto& node : tax.nodes()) {
                std::size_t steps = 0;
                for (auto p = tax.parent_of(node); p; p = tax.parent_of(*p)) {
                    ++steps;
                    REQUIRE(steps <= tax.nodes().size());
                }
                Item root = node;
                while (auto p = tax.parent_of(root)) root = *p;
                CHECK(tax.roots().contains(root));
                CHECK(tax.depth(node) == steps);

                auto leaves = leaf_descendants(taxes, node);
                CHECK(!leaves.empty());
                CHECK(names(leaves) == test::naive_leaves_under(taxes, node.name()));
                if (tax.is_internal(node)) {
                    Itemset from_children;
                    for (const auto& child : tax.children_of(node))
                        from_children = set_union(from_children, leaf_descendants(taxes, child));
                    CHECK(from_children == leaves);
                } else {
                    CHECK(leaves == Itemset{node});
                }
            }
        }
    }
}
