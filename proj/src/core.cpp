#include "gar/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iterator>

namespace gar {

namespace {

bool valid_utf8(std::string_view s) noexcept {
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        std::size_t extra = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xe0) == 0xc0) {
            extra = 1;
            cp = c & 0x1f;
        } else if ((c & 0xf0) == 0xe0) {
            extra = 2;
            cp = c & 0x0f;
        } else if ((c & 0xf8) == 0xf0) {
            extra = 3;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + extra >= s.size()) return false;
        for (std::size_t k = 1; k <= extra; ++k) {
            auto b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xc0) != 0x80) return false;
            cp = cp << 6 | (b & 0x3f);
        }
        static constexpr std::uint32_t min_for[] = {0, 0x80, 0x800, 0x10000};
        if (cp < min_for[extra] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return false;
        i += extra + 1;
    }
    return true;
}

} // namespace

bool Item::is_valid_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    bool printable = std::none_of(name.begin(), name.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return u < 0x20 || u == 0x7f || c == ' ';
    });
    return printable && valid_utf8(name);
}

Item::Item(std::string name) : name_(std::move(name)) {
    if (!is_valid_name(name_))
        throw Error(ErrorCode::InvalidItem, "invalid item name '" + name_ + "'");
}

Itemset::Itemset(std::initializer_list<Item> items) : Itemset(std::vector<Item>(items)) {}

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool Itemset::contains(const Item& item) const {
    return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::includes(const Itemset& other) const {
    return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
}

bool Itemset::intersects(const Itemset& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return true;
    }
    return false;
}

bool Itemset::insert(const Item& item) {
    auto it = std::lower_bound(items_.begin(), items_.end(), item);
    if (it != items_.end() && *it == item) return false;
    items_.insert(it, item);
    return true;
}

bool Itemset::erase(const Item& item) {
    auto it = std::lower_bound(items_.begin(), items_.end(), item);
    if (it == items_.end() || *it != item) return false;
    items_.erase(it);
    return true;
}

Itemset set_union(const Itemset& a, const Itemset& b) {
    Itemset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
}

Itemset set_intersection(const Itemset& a, const Itemset& b) {
    Itemset out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
}

Itemset set_difference(const Itemset& a, const Itemset& b) {
    Itemset out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
}

std::string to_string(const Itemset& set) {
    std::string out;
    for (const auto& item : set) {
        if (!out.empty()) out += ' ';
        out += item.name();
    }
    return out;
}

TransactionDatabase::TransactionDatabase(std::vector<Itemset> baskets) {
    transactions_.reserve(baskets.size());
    for (auto& basket : baskets) add(std::move(basket));
}

void TransactionDatabase::add(Itemset basket) {
    universe_ = set_union(universe_, basket);
    transactions_.push_back(Transaction{transactions_.size(), std::move(basket)});
}

Side other(Side side) noexcept { return side == Side::LHS ? Side::RHS : Side::LHS; }

std::string_view to_string(Side side) noexcept { return side == Side::LHS ? "lhs" : "rhs"; }

std::optional<Side> parse_side(std::string_view token) {
    std::string lower;
    for (char c : token) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "lhs") return Side::LHS;
    if (lower == "rhs") return Side::RHS;
    return std::nullopt;
}

RuleKey canonicalize_rule(Itemset lhs, Itemset rhs) {
    if (lhs.empty() || rhs.empty())
        throw Error(ErrorCode::InvalidRule, "rule sides must be non-empty");
    if (lhs.intersects(rhs))
        throw Error(ErrorCode::InvalidRule,
                    "rule sides overlap on {" + to_string(set_intersection(lhs, rhs)) + "}");
    return RuleKey{std::move(lhs), std::move(rhs)};
}

namespace {

std::string join_amp(const Itemset& set) {
    std::string out;
    for (const auto& item : set) {
        if (!out.empty()) out += " & ";
        out += item.name();
    }
    return out;
}

void check_fraction(const std::optional<double>& value, const char* what) {
    if (value && !(*value >= 0.0 && *value <= 1.0))
        throw Error(ErrorCode::InvalidRule, std::string(what) + " must lie in [0,1]");
}

} // namespace

std::string to_string(const RuleKey& key) { return join_amp(key.lhs) + " => " + join_amp(key.rhs); }

std::string rule_id(const RuleKey& key) {
    std::uint64_t hash = 14695981039346656037ull;
    auto feed = [&hash](unsigned char c) {
        hash ^= c;
        hash *= 1099511628211ull;
    };
    for (const Itemset* side : {&key.lhs, &key.rhs}) {
        for (const auto& item : *side) {
            for (char c : item.name()) feed(static_cast<unsigned char>(c));
            feed(0x1f);
        }
        feed(0x1e);
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, hash >>= 4) out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
    return out;
}

AssociationRule::AssociationRule(Itemset lhs_, Itemset rhs_, std::optional<double> support_,
                                 std::optional<double> confidence_)
    : support(support_), confidence(confidence_) {
    auto key = canonicalize_rule(std::move(lhs_), std::move(rhs_));
    lhs = std::move(key.lhs);
    rhs = std::move(key.rhs);
    check_fraction(support, "support");
    check_fraction(confidence, "confidence");
}

const Itemset& rule_side(const AssociationRule& rule, Side side) noexcept {
    return side == Side::LHS ? rule.lhs : rule.rhs;
}

const Itemset& rule_side(const RuleKey& rule, Side side) noexcept {
    return side == Side::LHS ? rule.lhs : rule.rhs;
}

void MiningParams::validate() const {
    if (!(min_support > 0.0 && min_support <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "min_support must lie in (0,1]");
    if (!(min_confidence > 0.0 && min_confidence <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "min_confidence must lie in (0,1]");
    if (max_items < 2)
        throw Error(ErrorCode::InvalidArgument, "max_items must be at least 2");
}

RuleSet::RuleSet(std::vector<AssociationRule> rules, std::optional<MiningParams> params)
    : params_(std::move(params)) {
    for (auto& rule : rules) add(std::move(rule));
}

bool RuleSet::add(AssociationRule rule) {
    auto key = rule.key();
    return rules_.emplace(std::move(key), std::move(rule)).second;
}

const AssociationRule* RuleSet::find(const RuleKey& key) const {
    auto it = rules_.find(key);
    return it == rules_.end() ? nullptr : &it->second;
}

std::vector<AssociationRule> RuleSet::rules() const {
    std::vector<AssociationRule> out;
    out.reserve(rules_.size());
    for (const auto& [key, rule] : rules_) out.push_back(rule);
    return out;
}

} // namespace gar
