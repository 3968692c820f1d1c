#include <doctest.h>

#include <functional>

#include "docgen.hpp"
#include "fixtures.hpp"
#include "gar/formats.hpp"
#include "generators.hpp"

using namespace gar;
using namespace gar::formats;

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

} // namespace

TEST_CASE("parse_transactions") {
    auto two = parse_transactions("a b c\nb c\n");
    CHECK(two.value.size() == 2);
    CHECK(two.warnings.empty());

    auto dup = parse_transactions("# comment\na a b\n");
    REQUIRE(dup.value.size() == 1);
    CHECK(dup.value[0].items == Itemset{"a", "b"});
    CHECK(dup.warnings.size() == 1);

    auto clothing = parse_transactions(test::clothing_db_text());
    CHECK(clothing.value.size() == 7);
    CHECK(clothing.value.item_universe().size() == 6);
    CHECK(clothing.value == test::clothing_db());

    CHECK(parse_transactions("\n\n# only comments\n").value.empty());
    CHECK(parse_transactions("  a\t\tb  \r\n").value[0].items == Itemset{"a", "b"});
}

TEST_CASE("parse_transactions reports bad bytes with a position") {
    try {
        parse_transactions("a b\nc \x01 d\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("parse_taxonomies") {
    auto one = parse_taxonomies("= clothes\nt-shirt\tlight-clothes\nshort\tlight-clothes\n");
    REQUIRE(one.size() == 1);
    CHECK(one[0].name() == "clothes");
    CHECK(one[0].nodes().size() == 3);
    CHECK(one.is_internal("light-clothes"));
    CHECK(parse_taxonomies("").empty());

    auto two = parse_taxonomies(test::fig2_taxonomy_text());
    CHECK(two == test::fig2_taxonomies());

    CHECK(code_of([] { parse_taxonomies("= a\nx\tp\n= b\ny\tp\n"); }) == ErrorCode::Disjointness);
    CHECK(code_of([] { parse_taxonomies("a\tb\nb\ta\n"); }) == ErrorCode::Cycle);
    try {
        parse_taxonomies("# header\nx\ty\nx y\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
        CHECK(e.line() == 3);
    }
    CHECK(code_of([] { parse_taxonomies("a\tb\tc\n"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_taxonomies("light clothes\tsport\n"); }) == ErrorCode::Parse);
}

TEST_CASE("import_borgelt_rules") {
    auto r = import_borgelt_rules("cap <- short slipper (12.5, 66.7)\n");
    REQUIRE(r.value.size() == 1);
    const auto& rule = r.value.begin()->second;
    CHECK(rule.lhs == Itemset{"short", "slipper"});
    CHECK(rule.rhs == Itemset{"cap"});
    CHECK(*rule.support == 0.125);
    CHECK(*rule.confidence == 0.667);

    auto bare = import_borgelt_rules("x <- y\n");
    REQUIRE(bare.value.size() == 1);
    CHECK(!bare.value.begin()->second.support);
    CHECK(bare.warnings.size() == 1);

    auto dup = import_borgelt_rules("a <- b c (10, 50)\na <- c b (10, 50)\n");
    CHECK(dup.value.size() == 1);
    CHECK(dup.warnings.size() == 1);

    for (const char* bad : {"a b c\n", "a <- (1, 2)\n", "<- a (1, 2)\n", "a <- b (12.5/3, 66.7)\n",
                            "a <- b (1e1, 2)\n", "a <- b (150, 20)\n", "a <- a (1, 2)\n", "a <- b (1, 2, 3)\n"}) {
        CAPTURE(bad);
        CHECK(code_of([&] { import_borgelt_rules(bad); }) == ErrorCode::Parse);
    }
}

TEST_CASE("decimal shifting is exact") {
    CHECK(shift_decimal("0.125", 2) == "12.5");
    CHECK(shift_decimal("12.5", -2) == "0.125");
    CHECK(shift_decimal("1", 2) == "100");
    CHECK(shift_decimal("0", -2) == "0");
    CHECK(shift_decimal("7", -2) == "0.07");
    CHECK(shift_decimal("0.00001", 2) == "0.001");
    CHECK(shift_decimal(".5", 0) == "0.5");
}

TEST_CASE("borgelt export then import reproduces the rule set") {
    test::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        auto rules = test::random_rules(rng, test::leaf_names(7), 12);
        // Borgelt text carries no mining parameters.
        rules.set_mining_params(std::nullopt);
        RuleSet real;
        for (const auto& [key, rule] : rules) {
            auto copy = rule;
            if (copy.support && test::coin(rng, 0.5)) {
                copy.support = std::uniform_real_distribution<double>(0, 1)(rng);
                copy.confidence = std::uniform_real_distribution<double>(0, 1)(rng);
            }
            real.add(copy);
        }
        rules = real;
        auto text = export_borgelt_rules(rules);
        auto back = import_borgelt_rules(text).value;
        CHECK(back == rules);
        CHECK(export_borgelt_rules(back) == text);
    }
    RuleSet odd({AssociationRule({"a"}, {"b"}, 0.07, 1.0 / 3.0), AssociationRule({"c"}, {"d"}, 1e-9, 0.1 + 0.2)});
    CHECK(import_borgelt_rules(export_borgelt_rules(odd)).value == odd);
}

TEST_CASE("text formats round-trip") {
    test::Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        auto leaves = test::leaf_names(8);
        auto db = test::random_nonempty_db(rng, leaves, 10);
        CHECK(parse_transactions(write_transactions(db)).value == db);
        auto taxes = test::random_forest(rng, leaves);
        CHECK(parse_taxonomies(write_taxonomies(taxes)) == taxes);
        CHECK(write_taxonomies(parse_taxonomies(write_taxonomies(taxes))) == write_taxonomies(taxes));
    }
}

TEST_CASE("structured documents round-trip byte-identically") {
    test::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        DocumentHeader header;
        if (test::coin(rng, 0.3)) header.created_at = "2026-10-18T12:00:00Z";
        auto leaves = test::leaf_names(8);

        TransactionDatabase db;
        for (std::size_t k = test::uniform(rng, 0, 8); k > 0; --k)
            db.add(test::coin(rng, 0.1) ? Itemset{} : test::random_itemset(rng, leaves, 4));
        auto db_text = write_transactions_document(db, header);
        CHECK(parse_transactions_document(db_text) == db);
        CHECK(write_transactions_document(parse_transactions_document(db_text), parse_header(db_text)) == db_text);

        auto taxes = test::random_forest(rng, leaves);
        auto tax_text = write_taxonomy_document(taxes, header);
        CHECK(parse_taxonomy_document(tax_text) == taxes);
        CHECK(write_taxonomy_document(parse_taxonomy_document(tax_text), parse_header(tax_text)) == tax_text);

        auto rules = test::random_rules(rng, leaves, 10);
        auto rules_text = write_ruleset(rules, header);
        CHECK(parse_ruleset(rules_text) == rules);
        CHECK(write_ruleset(parse_ruleset(rules_text), parse_header(rules_text)) == rules_text);

        auto gen = test::random_generalized(rng);
        auto gen_text = write_generalized(gen, header);
        CHECK(parse_generalized(gen_text) == gen);
        CHECK(write_generalized(parse_generalized(gen_text), parse_header(gen_text)) == gen_text);
        CHECK(parse_header(gen_text).kind == DocumentKind::GeneralizedRuleSet);
    }
}

TEST_CASE("generalized document of the worked example") {
    auto out = generalize(test::fig2_rules(), test::fig2_taxonomies(), Side::LHS);
    auto text = write_generalized(out);
    auto back = parse_generalized(text);
    REQUIRE(back.rules.size() == 1);
    CHECK(back.rules[0].sources.size() == 4);
    CHECK(text.find("\"created_at\"") == std::string::npos);

    auto empty = write_generalized(GeneralizedRuleSet{});
    CHECK(parse_generalized(empty).rules.empty());
    CHECK(empty.find("\"rules\": []") != std::string::npos);
}

TEST_CASE("structured documents are checked") {
    CHECK(code_of([] { parse_ruleset("{\"format_version\": \"2\", \"kind\": \"ruleset\"}"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_ruleset(write_transactions_document(TransactionDatabase{})); }) == ErrorCode::Parse);
    CHECK(code_of([] {
              parse_ruleset(R"({"format_version":"1","kind":"ruleset","mining_params":null,
                "rules":[{"lhs":["a"],"rhs":["a"],"support":null,"confidence":null}]})");
          }) == ErrorCode::Parse);
    try {
        parse_ruleset("{\n  \"format_version\": \"1\",\n  oops\n}");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
        CHECK(e.line() == 3);
    }
    CHECK(code_of([] {
              parse_taxonomy_document(
                  R"({"format_version":"1","kind":"taxonomy","taxonomies":[{"name":"t","edges":[["a","b"],["b","a"]]}]})");
          }) == ErrorCode::Cycle);
}

TEST_CASE("loaders accept either representation") {
    auto db = test::clothing_db();
    CHECK(load_transactions(write_transactions_document(db)).value == db);
    CHECK(load_transactions(write_transactions(db)).value == db);
    CHECK(load_taxonomies(write_taxonomy_document(test::fig2_taxonomies())) == test::fig2_taxonomies());
    CHECK(load_ruleset(test::fig2_rules_text()).value == test::fig2_rules());
    CHECK(load_ruleset(write_ruleset(test::fig2_rules())).value == test::fig2_rules());
}

TEST_CASE("parsers are total over random bytes") {
    test::Rng rng(21);
    const std::string alphabet = "ab <-()%,.0123456789\t\n#={}[]\":\x01\xff";
    auto run = [](const std::function<void()>& f) {
        try {
            f();
        } catch (const Error&) {
        }
    };
    for (int i = 0; i < 3000; ++i) {
        std::string text;
        for (std::size_t k = test::uniform(rng, 0, 40); k > 0; --k)
            text += alphabet[test::uniform(rng, 0, alphabet.size() - 1)];
        run([&] { parse_transactions(text); });
        run([&] { parse_taxonomies(text); });
        run([&] { import_borgelt_rules(text); });
        run([&] { parse_ruleset(text); });
        run([&] { parse_generalized(text); });
        run([&] { parse_transactions_document(text); });
        run([&] { parse_taxonomy_document(text); });
        for (auto kind : {DocumentKind::Transactions, DocumentKind::Taxonomy, DocumentKind::RuleSet,
                          DocumentKind::GeneralizedRuleSet})
            run([&] { validate(kind, text); });
    }
    // Mutations of a valid document.
    auto doc = write_generalized(generalize(test::fig2_rules(), test::fig2_taxonomies(), Side::LHS));
    for (int i = 0; i < 2000; ++i) {
        auto mutated = doc;
        for (int k = 0; k < 3; ++k)
            mutated[test::uniform(rng, 0, mutated.size() - 1)] = alphabet[test::uniform(rng, 0, alphabet.size() - 1)];
        run([&] { parse_generalized(mutated); });
    }
    CHECK(true);
}
