#include "gar/error.hpp"

namespace gar {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidItem: return "invalid-item";
    case ErrorCode::InvalidRule: return "invalid-rule";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::DuplicateParent: return "duplicate-parent";
    case ErrorCode::Cycle: return "cycle";
    case ErrorCode::Disjointness: return "disjointness";
    case ErrorCode::EmptyDatabase: return "empty-database";
    case ErrorCode::ClosureViolation: return "closure-violation";
    case ErrorCode::EmptyTable: return "empty-table";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Query: return "query";
    case ErrorCode::NotAvailable: return "not-available";
    case ErrorCode::NotFound: return "not-found";
    }
    return "unknown";
}

namespace {

std::string decorate(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
}

} // namespace

Error::Error(ErrorCode code, const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(decorate(message, line, column)), code_(code), line_(line), column_(column) {}

} // namespace gar
