#pragma once

#include <stdexcept>
#include <string>

namespace colibri {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (non-finite
/// angle, alpha outside (0, 1], empty image, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Unknown category name.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Boundary width requested for two categories that are not ring neighbours.
class AdjacencyError : public Error {
public:
    using Error::Error;
};

/// Boundary positions are not in ascending circular order.
class OrderingError : public Error {
public:
    using Error::Error;
};

/// Boundary specs that cannot be realised by convex membership functions.
/// Carries the offending category name.
class InconsistentSpecError : public Error {
public:
    InconsistentSpecError(std::string category, const std::string& what)
        : Error(what), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

/// Malformed JSON text; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed JSON that does not follow the partition schema.
class SchemaError : public Error {
public:
    SchemaError(std::string field, const std::string& what)
        : Error(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ImageError : public Error {
public:
    enum class Kind { missing_file, malformed_header, malformed_payload, unsupported_format };

    ImageError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

}  // namespace colibri
