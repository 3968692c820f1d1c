#include "gar/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include <json.hpp>

#include "gar/measures.hpp"

namespace gar::formats {

using Json = nlohmann::ordered_json;

std::string_view to_string(DocumentKind kind) noexcept {
    switch (kind) {
    case DocumentKind::Transactions: return "transactions";
    case DocumentKind::Taxonomy: return "taxonomy";
    case DocumentKind::RuleSet: return "ruleset";
    case DocumentKind::GeneralizedRuleSet: return "generalized-ruleset";
    }
    return "";
}

std::optional<DocumentKind> parse_kind(std::string_view token) {
    for (auto kind : {DocumentKind::Transactions, DocumentKind::Taxonomy, DocumentKind::RuleSet,
                      DocumentKind::GeneralizedRuleSet})
        if (token == to_string(kind)) return kind;
    return std::nullopt;
}

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number++, line});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
    return s;
}

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_blank(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_blank(line[i])) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

Item make_item(std::string_view token, std::size_t line, std::size_t column) {
    if (!Item::is_valid_name(token))
        throw Error(ErrorCode::Parse, "invalid item token '" + std::string(token) + "'", line, column);
    return Item(std::string(token));
}

// Shortest round-trip fixed-notation rendering of a non-negative double.
std::string fixed_repr(double value) {
    char buf[512];
    auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
    return std::string(buf, res.ptr);
}

std::optional<double> parse_plain_double(std::string_view s) {
    double value = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value, std::chars_format::fixed);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

bool is_plain_decimal(std::string_view s) {
    bool digit = false, point = false;
    for (char c : s) {
        if (c >= '0' && c <= '9') digit = true;
        else if (c == '.' && !point) point = true;
        else return false;
    }
    return digit;
}

} // namespace

std::string shift_decimal(std::string_view number, int places) {
    if (!is_plain_decimal(number)) throw Error(ErrorCode::Parse, "not a plain decimal '" + std::string(number) + "'");
    auto point = number.find('.');
    std::string digits(number.substr(0, point));
    if (point != std::string_view::npos) digits += number.substr(point + 1);
    long long pos = static_cast<long long>(point == std::string_view::npos ? number.size() : point) + places;
    if (pos < 0) {
        digits.insert(0, static_cast<std::size_t>(-pos), '0');
        pos = 0;
    }
    if (pos > static_cast<long long>(digits.size())) digits.append(static_cast<std::size_t>(pos) - digits.size(), '0');
    std::string int_part = digits.substr(0, static_cast<std::size_t>(pos));
    std::string frac_part = digits.substr(static_cast<std::size_t>(pos));
    int_part.erase(0, std::min(int_part.find_first_not_of('0'), int_part.size()));
    if (int_part.empty()) int_part = "0";
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
    return frac_part.empty() ? int_part : int_part + "." + frac_part;
}

// Transactions --------------------------------------------------------------

Parsed<TransactionDatabase> parse_transactions(std::string_view text) {
    Parsed<TransactionDatabase> out;
    for (const auto& line : split_lines(text)) {
        auto body = trim(line.text);
        if (body.empty() || body.front() == '#') continue;
        std::vector<Item> items;
        std::set<std::string_view> seen;
        for (const auto& tok : tokenize(line.text)) {
            if (!seen.insert(tok.text).second) {
                out.warnings.push_back("line " + std::to_string(line.number) + ": duplicate item '" +
                                       std::string(tok.text) + "' collapsed");
                continue;
            }
            items.push_back(make_item(tok.text, line.number, tok.column));
        }
        out.value.add(Itemset(std::move(items)));
    }
    return out;
}

std::string write_transactions(const TransactionDatabase& db) {
    std::string out;
    for (const auto& t : db.transactions()) {
        out += to_string(t.items);
        out += '\n';
    }
    return out;
}

// Taxonomies ----------------------------------------------------------------

namespace {

struct PendingTaxonomy {
    std::string name;
    std::vector<TaxonomyEdge> edges;
    bool started = false;
};

Taxonomy build_named(PendingTaxonomy&& pending) {
    try {
        return build_taxonomy(std::move(pending.edges), pending.name);
    } catch (const Error& e) {
        throw Error(e.code(), "taxonomy '" + pending.name + "': " + e.what());
    }
}

} // namespace

TaxonomySet parse_taxonomies(std::string_view text) {
    std::vector<Taxonomy> taxonomies;
    PendingTaxonomy current;
    for (const auto& line : split_lines(text)) {
        auto body = trim(line.text);
        if (body.empty() || body.front() == '#') continue;
        if (body.front() == '=') {
            if (current.started) taxonomies.push_back(build_named(std::move(current)));
            current = PendingTaxonomy{std::string(trim(body.substr(1))), {}, true};
            continue;
        }
        auto tab = line.text.find('\t');
        if (tab == std::string_view::npos || line.text.find('\t', tab + 1) != std::string_view::npos)
            throw Error(ErrorCode::Parse, "expected exactly two tab-separated tokens (child<TAB>parent)", line.number);
        auto child = trim(line.text.substr(0, tab));
        auto parent = trim(line.text.substr(tab + 1));
        current.edges.push_back(TaxonomyEdge{make_item(child, line.number, 1), make_item(parent, line.number, tab + 2)});
        current.started = true;
    }
    if (current.started) taxonomies.push_back(build_named(std::move(current)));
    return TaxonomySet(std::move(taxonomies));
}

std::string write_taxonomies(const TaxonomySet& taxes) {
    std::string out;
    for (const auto& tax : taxes) {
        out += "= " + tax.name() + "\n";
        for (const auto& e : tax.edges()) out += e.child.name() + "\t" + e.parent.name() + "\n";
    }
    return out;
}

// Borgelt rules -------------------------------------------------------------

namespace {

double percentage(std::string_view token, std::size_t line, const char* what) {
    auto t = trim(token);
    if (!is_plain_decimal(t))
        throw Error(ErrorCode::Parse, std::string("malformed ") + what + " percentage '" + std::string(t) + "'", line);
    auto value = parse_plain_double(shift_decimal(t, -2));
    if (!value || *value > 1.0)
        throw Error(ErrorCode::Parse, std::string(what) + " percentage out of range '" + std::string(t) + "'", line);
    return *value;
}

} // namespace

Parsed<RuleSet> import_borgelt_rules(std::string_view text) {
    Parsed<RuleSet> out;
    for (const auto& line : split_lines(text)) {
        auto body = trim(line.text);
        if (body.empty() || body.front() == '#') continue;

        std::optional<double> support, confidence;
        auto rest = body;
        if (rest.back() == ')') {
            auto open = rest.rfind('(');
            if (open == std::string_view::npos || (open > 0 && !is_blank(rest[open - 1])))
                throw Error(ErrorCode::Parse, "unbalanced measure parentheses", line.number);
            auto inner = rest.substr(open + 1, rest.size() - open - 2);
            auto comma = inner.find(',');
            if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos)
                throw Error(ErrorCode::Parse, "expected '(support, confidence)'", line.number);
            support = percentage(inner.substr(0, comma), line.number, "support");
            confidence = percentage(inner.substr(comma + 1), line.number, "confidence");
            rest = trim(rest.substr(0, open));
        } else {
            out.warnings.push_back("line " + std::to_string(line.number) + ": rule has no measures");
        }

        std::vector<Item> rhs, lhs;
        bool arrow = false;
        const std::size_t offset = static_cast<std::size_t>(rest.data() - line.text.data());
        for (const auto& tok : tokenize(rest)) {
            if (tok.text == "<-") {
                if (arrow) throw Error(ErrorCode::Parse, "more than one '<-'", line.number, tok.column + offset);
                arrow = true;
                continue;
            }
            (arrow ? lhs : rhs).push_back(make_item(tok.text, line.number, tok.column + offset));
        }
        if (!arrow) throw Error(ErrorCode::Parse, "missing '<-' between consequent and antecedent", line.number);
        if (rhs.empty() || lhs.empty())
            throw Error(ErrorCode::Parse, "consequent and antecedent must be non-empty", line.number);

        try {
            AssociationRule rule(Itemset(std::move(lhs)), Itemset(std::move(rhs)), support, confidence);
            if (!out.value.add(rule))
                out.warnings.push_back("line " + std::to_string(line.number) + ": duplicate rule " +
                                       to_string(rule.key()) + " collapsed");
        } catch (const Error& e) {
            throw Error(ErrorCode::Parse, e.what(), line.number);
        }
    }
    return out;
}

std::string export_borgelt_rules(const RuleSet& rules) {
    std::string out;
    for (const auto& [key, rule] : rules) {
        out += to_string(rule.rhs) + " <- " + to_string(rule.lhs);
        if (rule.support && rule.confidence)
            out += " (" + shift_decimal(fixed_repr(*rule.support), 2) + ", " +
                   shift_decimal(fixed_repr(*rule.confidence), 2) + ")";
        out += '\n';
    }
    return out;
}

// Structured documents ------------------------------------------------------

namespace {

Json itemset_json(const Itemset& set) {
    Json arr = Json::array();
    for (const auto& item : set) arr.push_back(item.name());
    return arr;
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json header_json(const DocumentHeader& header, DocumentKind kind) {
    Json doc = Json::object();
    doc["format_version"] = header.format_version;
    doc["kind"] = std::string(to_string(kind));
    if (!header.created_at.empty()) doc["created_at"] = header.created_at;
    return doc;
}

Json params_json(const std::optional<MiningParams>& params) {
    if (!params) return nullptr;
    Json p = Json::object();
    p["min_support"] = params->min_support;
    p["min_confidence"] = params->min_confidence;
    p["max_items"] = params->max_items;
    return p;
}

Json rule_json(const AssociationRule& rule) {
    Json r = Json::object();
    r["lhs"] = itemset_json(rule.lhs);
    r["rhs"] = itemset_json(rule.rhs);
    r["support"] = optional_json(rule.support);
    r["confidence"] = optional_json(rule.confidence);
    return r;
}

Json taxonomies_json(const TaxonomySet& taxes) {
    Json arr = Json::array();
    for (const auto& tax : taxes) {
        Json t = Json::object();
        t["name"] = tax.name();
        Json edges = Json::array();
        for (const auto& e : tax.edges()) edges.push_back(Json::array({e.child.name(), e.parent.name()}));
        t["edges"] = std::move(edges);
        arr.push_back(std::move(t));
    }
    return arr;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

// Reading helpers: every structural problem becomes a Parse error.

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::Parse, message); }

const Json& field(const Json& obj, const char* name) {
    if (!obj.is_object()) fail(std::string("expected an object holding '") + name + "'");
    auto it = obj.find(name);
    if (it == obj.end()) fail(std::string("missing field '") + name + "'");
    return *it;
}

const Json& array_field(const Json& obj, const char* name) {
    const auto& v = field(obj, name);
    if (!v.is_array()) fail(std::string("field '") + name + "' must be an array");
    return v;
}

std::string string_of(const Json& v, const char* what) {
    if (!v.is_string()) fail(std::string(what) + " must be a string");
    return v.get<std::string>();
}

Item item_of(const Json& v) {
    auto name = string_of(v, "item");
    if (!Item::is_valid_name(name)) fail("invalid item token '" + name + "'");
    return Item(std::move(name));
}

Itemset itemset_of(const Json& v, const char* what) {
    if (!v.is_array()) fail(std::string(what) + " must be an array of items");
    std::vector<Item> items;
    for (const auto& e : v) items.push_back(item_of(e));
    return Itemset(std::move(items));
}

std::size_t count_of(const Json& v, const char* what) {
    if (!v.is_number_unsigned()) fail(std::string(what) + " must be a non-negative integer");
    return v.get<std::size_t>();
}

double number_of(const Json& v, const char* what) {
    if (!v.is_number()) fail(std::string(what) + " must be a number");
    return v.get<double>();
}

std::optional<double> optional_number(const Json& v, const char* what) {
    if (v.is_null()) return std::nullopt;
    return number_of(v, what);
}

bool bool_of(const Json& v, const char* what) {
    if (!v.is_boolean()) fail(std::string(what) + " must be a boolean");
    return v.get<bool>();
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(ErrorCode::Parse, "malformed JSON document", line, column);
    }
}

DocumentHeader header_of(const Json& doc) {
    DocumentHeader h;
    h.format_version = string_of(field(doc, "format_version"), "format_version");
    if (h.format_version != format_version) fail("unsupported format_version '" + h.format_version + "'");
    auto kind = string_of(field(doc, "kind"), "kind");
    auto parsed = parse_kind(kind);
    if (!parsed) fail("unknown document kind '" + kind + "'");
    h.kind = *parsed;
    if (auto it = doc.find("created_at"); it != doc.end()) h.created_at = string_of(*it, "created_at");
    return h;
}

Json open_document(std::string_view text, DocumentKind expected) {
    auto doc = parse_json(text);
    auto header = header_of(doc);
    if (header.kind != expected)
        fail("expected a '" + std::string(to_string(expected)) + "' document, got '" +
             std::string(to_string(header.kind)) + "'");
    return doc;
}

std::optional<MiningParams> params_of(const Json& v) {
    if (v.is_null()) return std::nullopt;
    MiningParams p;
    p.min_support = number_of(field(v, "min_support"), "min_support");
    p.min_confidence = number_of(field(v, "min_confidence"), "min_confidence");
    p.max_items = count_of(field(v, "max_items"), "max_items");
    p.validate();
    return p;
}

AssociationRule rule_of(const Json& v) {
    return AssociationRule(itemset_of(field(v, "lhs"), "lhs"), itemset_of(field(v, "rhs"), "rhs"),
                           optional_number(field(v, "support"), "support"),
                           optional_number(field(v, "confidence"), "confidence"));
}

TaxonomySet taxonomies_of(const Json& arr) {
    if (!arr.is_array()) fail("taxonomies must be an array");
    std::vector<Taxonomy> taxonomies;
    for (const auto& t : arr) {
        PendingTaxonomy pending;
        pending.name = string_of(field(t, "name"), "taxonomy name");
        for (const auto& e : array_field(t, "edges")) {
            if (!e.is_array() || e.size() != 2) fail("taxonomy edge must be a [child, parent] pair");
            pending.edges.push_back(TaxonomyEdge{item_of(e[0]), item_of(e[1])});
        }
        taxonomies.push_back(build_named(std::move(pending)));
    }
    return TaxonomySet(std::move(taxonomies));
}

// Runs a reader, turning library validation errors other than taxonomy
// structure errors into Parse errors.
template <typename F>
auto guarded(F&& read) -> decltype(read()) {
    try {
        return read();
    } catch (const Error& e) {
        switch (e.code()) {
        case ErrorCode::Parse:
        case ErrorCode::Cycle:
        case ErrorCode::DuplicateParent:
        case ErrorCode::Disjointness: throw;
        default: throw Error(ErrorCode::Parse, e.what());
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

} // namespace

std::string write_transactions_document(const TransactionDatabase& db, const DocumentHeader& header) {
    Json doc = header_json(header, DocumentKind::Transactions);
    Json arr = Json::array();
    for (const auto& t : db.transactions()) arr.push_back(itemset_json(t.items));
    doc["transactions"] = std::move(arr);
    return dump(doc);
}

std::string write_taxonomy_document(const TaxonomySet& taxes, const DocumentHeader& header) {
    Json doc = header_json(header, DocumentKind::Taxonomy);
    doc["taxonomies"] = taxonomies_json(taxes);
    return dump(doc);
}

std::string write_ruleset(const RuleSet& rules, const DocumentHeader& header) {
    Json doc = header_json(header, DocumentKind::RuleSet);
    doc["mining_params"] = params_json(rules.mining_params());
    Json arr = Json::array();
    for (const auto& [key, rule] : rules) arr.push_back(rule_json(rule));
    doc["rules"] = std::move(arr);
    return dump(doc);
}

std::string write_generalized(const GeneralizedRuleSet& set, const DocumentHeader& header) {
    Json doc = header_json(header, DocumentKind::GeneralizedRuleSet);
    doc["side"] = std::string(to_string(set.side));
    Json options = Json::object();
    options["max_level"] = set.options.max_level ? Json(*set.options.max_level) : Json(nullptr);
    options["merge_only"] = set.options.merge_only;
    doc["options"] = std::move(options);
    doc["mining_params"] = params_json(set.mining_params);
    doc["n_transactions"] = set.n_transactions ? Json(*set.n_transactions) : Json(nullptr);
    doc["taxonomies"] = taxonomies_json(set.taxonomies);
    doc["warnings"] = set.warnings;

    Json rules = Json::array();
    for (const auto& g : set.rules) {
        Json r = Json::object();
        r["id"] = rule_id(g.key());
        r["lhs"] = itemset_json(g.lhs);
        r["rhs"] = itemset_json(g.rhs);
        r["generalized_items"] = itemset_json(g.generalized_items);
        Json sources = Json::array();
        for (const auto& s : g.sources) sources.push_back(rule_json(s));
        r["sources"] = std::move(sources);
        if (g.table) {
            Json t = Json::object();
            t["n_lr"] = g.table->n_lr;
            t["n_lnr"] = g.table->n_lnr;
            t["n_nlr"] = g.table->n_nlr;
            t["n_nlnr"] = g.table->n_nlnr;
            t["n"] = g.table->n;
            r["table"] = std::move(t);
        } else {
            r["table"] = nullptr;
        }
        auto mv = measures_of(g);
        Json m = Json::object();
        for (auto measure : all_measures) m[std::string(measure_name(measure))] = optional_json(mv.get(measure));
        r["measures"] = std::move(m);
        rules.push_back(std::move(r));
    }
    doc["rules"] = std::move(rules);
    return dump(doc);
}

DocumentHeader parse_header(std::string_view text) {
    return guarded([&] { return header_of(parse_json(text)); });
}

TransactionDatabase parse_transactions_document(std::string_view text) {
    return guarded([&] {
        auto doc = open_document(text, DocumentKind::Transactions);
        TransactionDatabase db;
        for (const auto& t : array_field(doc, "transactions")) db.add(itemset_of(t, "transaction"));
        return db;
    });
}

TaxonomySet parse_taxonomy_document(std::string_view text) {
    return guarded([&] {
        auto doc = open_document(text, DocumentKind::Taxonomy);
        return taxonomies_of(field(doc, "taxonomies"));
    });
}

RuleSet parse_ruleset(std::string_view text) {
    return guarded([&] {
        auto doc = open_document(text, DocumentKind::RuleSet);
        RuleSet rules;
        rules.set_mining_params(params_of(field(doc, "mining_params")));
        for (const auto& r : array_field(doc, "rules"))
            if (!rules.add(rule_of(r))) fail("duplicate rule in rule set");
        return rules;
    });
}

GeneralizedRuleSet parse_generalized(std::string_view text) {
    return guarded([&] {
        auto doc = open_document(text, DocumentKind::GeneralizedRuleSet);
        GeneralizedRuleSet set;
        auto side = parse_side(string_of(field(doc, "side"), "side"));
        if (!side) fail("side must be 'lhs' or 'rhs'");
        set.side = *side;
        const auto& options = field(doc, "options");
        if (const auto& level = field(options, "max_level"); !level.is_null())
            set.options.max_level = count_of(level, "max_level");
        set.options.merge_only = bool_of(field(options, "merge_only"), "merge_only");
        set.options.validate();
        set.mining_params = params_of(field(doc, "mining_params"));
        if (const auto& n = field(doc, "n_transactions"); !n.is_null())
            set.n_transactions = count_of(n, "n_transactions");
        set.taxonomies = taxonomies_of(field(doc, "taxonomies"));
        for (const auto& w : array_field(doc, "warnings")) set.warnings.push_back(string_of(w, "warning"));

        std::set<RuleKey> seen_sources;
        for (const auto& r : array_field(doc, "rules")) {
            GeneralizedRule g;
            auto key = canonicalize_rule(itemset_of(field(r, "lhs"), "lhs"), itemset_of(field(r, "rhs"), "rhs"));
            g.lhs = std::move(key.lhs);
            g.rhs = std::move(key.rhs);
            g.side = set.side;
            g.generalized_items = itemset_of(field(r, "generalized_items"), "generalized_items");
            if (!rule_side(g, g.side).includes(g.generalized_items))
                fail("generalized_items must lie on the generalized side");
            for (const auto& s : array_field(r, "sources")) {
                auto src = rule_of(s);
                if (rule_side(src, other(set.side)) != rule_side(g, other(set.side)))
                    fail("source rule " + to_string(src.key()) + " does not share the fixed side");
                if (!seen_sources.insert(src.key()).second) fail("source rule listed twice");
                g.sources.push_back(std::move(src));
            }
            if (g.sources.empty()) fail("generalized rule without sources");
            std::sort(g.sources.begin(), g.sources.end(),
                      [](const AssociationRule& a, const AssociationRule& b) { return a.key() < b.key(); });
            if (const auto& t = field(r, "table"); !t.is_null()) {
                ContingencyTable ct;
                ct.n_lr = count_of(field(t, "n_lr"), "n_lr");
                ct.n_lnr = count_of(field(t, "n_lnr"), "n_lnr");
                ct.n_nlr = count_of(field(t, "n_nlr"), "n_nlr");
                ct.n_nlnr = count_of(field(t, "n_nlnr"), "n_nlnr");
                ct.n = count_of(field(t, "n"), "n");
                if (ct.n_lr + ct.n_lnr + ct.n_nlr + ct.n_nlnr != ct.n || ct.n == 0)
                    fail("contingency cells must be positive-total and sum to n");
                g.table = ct;
            }
            set.rules.push_back(std::move(g));
        }
        std::sort(set.rules.begin(), set.rules.end(),
                  [](const GeneralizedRule& a, const GeneralizedRule& b) { return a.key() < b.key(); });
        for (std::size_t i = 1; i < set.rules.size(); ++i)
            if (set.rules[i - 1].key() == set.rules[i].key()) fail("duplicate generalized rule");
        return set;
    });
}

bool looks_structured(std::string_view text) {
    auto body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    return !body.empty() && body.front() == '{' && Json::accept(text.begin(), text.end());
}

Parsed<TransactionDatabase> load_transactions(std::string_view text) {
    if (looks_structured(text)) return {parse_transactions_document(text), {}};
    return parse_transactions(text);
}

TaxonomySet load_taxonomies(std::string_view text) {
    if (looks_structured(text)) return parse_taxonomy_document(text);
    return parse_taxonomies(text);
}

Parsed<RuleSet> load_ruleset(std::string_view text) {
    if (looks_structured(text)) return {parse_ruleset(text), {}};
    return import_borgelt_rules(text);
}

std::vector<std::string> validate(DocumentKind kind, std::string_view text) {
    switch (kind) {
    case DocumentKind::Transactions: return load_transactions(text).warnings;
    case DocumentKind::Taxonomy: load_taxonomies(text); return {};
    case DocumentKind::RuleSet: return load_ruleset(text).warnings;
    case DocumentKind::GeneralizedRuleSet: parse_generalized(text); return {};
    }
    return {};
}

} // namespace gar::formats
