#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace numerals {

/// Base of every error raised by the library. `kind()` is the stable name
/// surfaced by the CLI ("ParseError", "DivisionByZero", ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual std::string_view kind() const noexcept = 0;
};

class ParseError : public Error {
public:
    using Error::Error;
    std::string_view kind() const noexcept override { return "ParseError"; }
};

class RangeError : public Error {
public:
    using Error::Error;
    std::string_view kind() const noexcept override { return "RangeError"; }
};

/// Raised by convert() when a gap-positional numeral has several readings.
/// The readings are kept as decimal strings so callers can report them.
class AmbiguityError : public Error {
public:
    AmbiguityError(const std::string& what, std::vector<std::string> readings)
        : Error(what), readings_(std::move(readings)) {}
    std::string_view kind() const noexcept override { return "AmbiguityError"; }
    const std::vector<std::string>& readings() const noexcept { return readings_; }

private:
    std::vector<std::string> readings_;
};

/// Errors raised while evaluating arithmetic. eval_expression() attaches the
/// pre-order index of the failing node and, when the tree came from text,
/// the character offset of its operator.
class EvaluationError : public Error {
public:
    using Error::Error;

    std::optional<std::size_t> node_index() const noexcept { return node_; }
    std::optional<std::size_t> offset() const noexcept { return offset_; }
    void set_position(std::size_t node, std::optional<std::size_t> offset) {
        if (!node_) {
            node_ = node;
            offset_ = offset;
        }
    }

private:
    std::optional<std::size_t> node_;
    std::optional<std::size_t> offset_;
};

class DivisionByZero : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
    std::string_view kind() const noexcept override { return "DivisionByZero"; }
};

/// The selected historical rule set says nothing about this operation.
class UndefinedBySource : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
    std::string_view kind() const noexcept override { return "UndefinedBySource"; }
};

class DomainError : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
    std::string_view kind() const noexcept override { return "DomainError"; }
};

class InexactQuotient : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
    std::string_view kind() const noexcept override { return "InexactQuotient"; }
};

}  // namespace numerals
