#ifndef GAR_TEST_FIXTURES_HPP
#define GAR_TEST_FIXTURES_HPP

#include "gar/core.hpp"
#include "gar/taxonomy.hpp"

namespace gar::test {

// The four rules that all conclude "cap" and the two one-level taxonomies
// used in the worked generalization example.
inline RuleSet fig2_rules() {
    return RuleSet({
        AssociationRule({"short", "slipper"}, {"cap"}),
        AssociationRule({"sandal", "short"}, {"cap"}),
        AssociationRule({"sandal", "t-shirt"}, {"cap"}),
        AssociationRule({"slipper", "t-shirt"}, {"cap"}),
    });
}

inline Taxonomy clothes_taxonomy() {
    return build_taxonomy({{"t-shirt", "light-clothes"}, {"short", "light-clothes"}}, "clothes");
}

inline Taxonomy shoes_taxonomy() {
    return build_taxonomy({{"slipper", "light-shoes"}, {"sandal", "light-shoes"}}, "shoes");
}

inline TaxonomySet fig2_taxonomies() { return TaxonomySet({clothes_taxonomy(), shoes_taxonomy()}); }

// The clothes forest of the taxonomy figure: light clothes sit under sport
// clothes, sandals under shoes.
inline Taxonomy fig1_taxonomy() {
    return build_taxonomy({{"t-shirt", "light-clothes"},
                           {"short", "light-clothes"},
                           {"light-clothes", "sport-clothes"},
                           {"sandal", "shoes"}},
                          "clothes");
}

// Seven baskets over the clothing items.
inline TransactionDatabase clothing_db() {
    return TransactionDatabase({
        {"t-shirt", "slipper", "cap"},
        {"short", "slipper", "cap"},
        {"sandal", "short", "cap"},
        {"sandal", "t-shirt", "cap"},
        {"slipper", "t-shirt", "cap"},
        {"cap", "jacket"},
        {"t-shirt", "sandal"},
    });
}

inline const char* clothing_db_text() {
    return "t-shirt slipper cap\n"
           "short slipper cap\n"
           "sandal short cap\n"
           "sandal t-shirt cap\n"
           "slipper t-shirt cap\n"
           "cap jacket\n"
           "t-shirt sandal\n";
}

inline const char* fig2_taxonomy_text() {
    return "= clothes\n"
           "t-shirt\tlight-clothes\n"
           "short\tlight-clothes\n"
           "= shoes\n"
           "slipper\tlight-shoes\n"
           "sandal\tlight-shoes\n";
}

inline const char* fig2_rules_text() {
    return "cap <- short slipper\n"
           "cap <- sandal short\n"
           "cap <- sandal t-shirt\n"
           "cap <- slipper t-shirt\n";
}

} // namespace gar::test

#endif
