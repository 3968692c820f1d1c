#ifndef GAR_FORMATS_HPP
#define GAR_FORMATS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gar/core.hpp"
#include "gar/gart.hpp"
#include "gar/taxonomy.hpp"

namespace gar::formats {

inline constexpr std::string_view format_version = "1";

enum class DocumentKind { Transactions, Taxonomy, RuleSet, GeneralizedRuleSet };

std::string_view to_string(DocumentKind kind) noexcept;
/// "transactions", "taxonomy", "ruleset", "generalized-ruleset".
std::optional<DocumentKind> parse_kind(std::string_view token);

struct DocumentHeader {
    std::string format_version{gar::formats::format_version};
    DocumentKind kind = DocumentKind::Transactions;
    /// Omitted from the document when empty.
    std::string created_at;

    friend bool operator==(const DocumentHeader&, const DocumentHeader&) = default;
};

template <typename T>
struct Parsed {
    T value;
    std::vector<std::string> warnings;
};

// Plain-text formats ------------------------------------------------------

/// One basket per line, items separated by spaces/tabs, '#' comments.
Parsed<TransactionDatabase> parse_transactions(std::string_view text);
std::string write_transactions(const TransactionDatabase& db);

/// `child<TAB>parent` edges, '#' comments, `= name` headers between trees.
TaxonomySet parse_taxonomies(std::string_view text);
std::string write_taxonomies(const TaxonomySet& taxes);

/// `rhs-items <- lhs-items (support%, confidence%)` per line.
Parsed<RuleSet> import_borgelt_rules(std::string_view text);
std::string export_borgelt_rules(const RuleSet& rules);

// Structured (JSON) documents ------------------------------------------------

std::string write_transactions_document(const TransactionDatabase& db, const DocumentHeader& header = {});
std::string write_taxonomy_document(const TaxonomySet& taxes, const DocumentHeader& header = {});
std::string write_ruleset(const RuleSet& rules, const DocumentHeader& header = {});
std::string write_generalized(const GeneralizedRuleSet& set, const DocumentHeader& header = {});

/// Reads and checks the header of a structured document.
DocumentHeader parse_header(std::string_view text);
TransactionDatabase parse_transactions_document(std::string_view text);
TaxonomySet parse_taxonomy_document(std::string_view text);
RuleSet parse_ruleset(std::string_view text);
GeneralizedRuleSet parse_generalized(std::string_view text);

/// True when the text is a JSON object (a structured document).
bool looks_structured(std::string_view text);

// Loaders accepting either the structured document or the plain-text form.
Parsed<TransactionDatabase> load_transactions(std::string_view text);
TaxonomySet load_taxonomies(std::string_view text);
Parsed<RuleSet> load_ruleset(std::string_view text);

/// Validates `text` as an artifact of `kind`; returns warnings.
std::vector<std::string> validate(DocumentKind kind, std::string_view text);

/// Decimal string shifted by `places` (positive = multiply by 10^places).
/// Input must be plain fixed notation: digits with an optional point.
std::string shift_decimal(std::string_view digits, int places);

} // namespace gar::formats

#endif
