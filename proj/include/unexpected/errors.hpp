#pragma once

#include <stdexcept>
#include <string>

namespace unexpected {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define UNEXPECTED_DEFINE_ERROR(Name)          \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    };

UNEXPECTED_DEFINE_ERROR(NoSuchRoot)
UNEXPECTED_DEFINE_ERROR(NotSquare)
UNEXPECTED_DEFINE_ERROR(DimensionMismatch)
UNEXPECTED_DEFINE_ERROR(BudgetExceeded)
UNEXPECTED_DEFINE_ERROR(ZeroPolynomial)
UNEXPECTED_DEFINE_ERROR(EmptySystem)
UNEXPECTED_DEFINE_ERROR(SizeMismatch)
UNEXPECTED_DEFINE_ERROR(DuplicateLine)
UNEXPECTED_DEFINE_ERROR(FieldLacksUnity)
UNEXPECTED_DEFINE_ERROR(ValidationFailed)
UNEXPECTED_DEFINE_ERROR(InvalidArgument)

#undef UNEXPECTED_DEFINE_ERROR

/// The kernel of an interpolation system is more than one-dimensional.
class NotUnique : public Error {
public:
    explicit NotUnique(long long dim)
        : Error("linear system has dimension " + std::to_string(dim) + ", expected 1"), dim_(dim) {}
    long long dim() const noexcept { return dim_; }

private:
    long long dim_;
};

/// Malformed configuration or certificate document.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace unexpected
