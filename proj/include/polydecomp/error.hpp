#ifndef POLYDECOMP_ERROR_HPP
#define POLYDECOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polydecomp {

/// Stable error categories. The CLI prints `name(code)` verbatim, so the
/// spelling of these names is part of the command-line contract.
enum class ErrorCode {
    DomainMismatch,
    VariableMismatch,
    NotInvertible,
    NotMonic,
    NotMonicInMainVar,
    DegreeNotDivisible,
    InvalidD,
    NotAField,
    TooLarge,
    SyntaxError,
    UnknownVariable,
    DivisionByZeroLiteral,
    InvalidArgument,
};

constexpr std::string_view name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotMonicInMainVar: return "NotMonicInMainVar";
    case ErrorCode::DegreeNotDivisible: return "DegreeNotDivisible";
    case ErrorCode::InvalidD: return "InvalidD";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DivisionByZeroLiteral: return "DivisionByZeroLiteral";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures carry the byte offset into the input text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(ErrorCode::SyntaxError,
                what + " at position " + std::to_string(position)),
          position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace polydecomp

#endif // POLYDECOMP_ERROR_HPP
