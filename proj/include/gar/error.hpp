#ifndef GAR_ERROR_HPP
#define GAR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gar {

enum class ErrorCode {
    InvalidItem,
    InvalidRule,
    InvalidArgument,
    DuplicateParent,
    Cycle,
    Disjointness,
    EmptyDatabase,
    ClosureViolation,
    EmptyTable,
    Parse,
    Query,
    NotAvailable,
    NotFound,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. Parse errors carry a 1-based line
/// (and column when known); zero means "not applicable".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::size_t line = 0, std::size_t column = 0);

    ErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    ErrorCode code_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace gar

#endif
