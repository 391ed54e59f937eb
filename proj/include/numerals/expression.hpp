#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "numerals/rules.hpp"
#include "numerals/value.hpp"

namespace numerals {

class Expression {
public:
    struct Literal {
        Value value;
    };
    struct Unary {
        UnaryOp op;
        std::unique_ptr<Expression> operand;
    };
    struct Binary {
        BinaryOp op;
        std::unique_ptr<Expression> lhs;
        std::unique_ptr<Expression> rhs;
    };
    using Node = std::variant<Literal, Unary, Binary>;

    static Expression literal(Value v, std::optional<std::size_t> offset = {});
    static Expression unary(UnaryOp op, Expression operand, std::optional<std::size_t> offset = {});
    static Expression binary(BinaryOp op, Expression lhs, Expression rhs, std::optional<std::size_t> offset = {});

    const Node& node() const noexcept { return node_; }
    /// Character offset in the source text, when parsed.
    std::optional<std::size_t> offset() const noexcept { return offset_; }

    /// Fully parenthesised form, e.g. "((5 * 0) / 0)".
    std::string to_string() const;

private:
    Expression(Node node, std::optional<std::size_t> offset) : node_(std::move(node)), offset_(offset) {}

    Node node_;
    std::optional<std::size_t> offset_;
};

/// Infix grammar:
///   expr    := term (("+" | "-" | "−") term)*
///   term    := unary (("*" | "/" | "×" | "÷") unary)*
///   unary   := ("-" | "−") unary | postfix
///   postfix := primary ("^2" | "^3" | "²" | "³")*
///   primary := decimal | "khahara" | "∞" | "(" expr ")"
///            | ("sqrt" | "cbrt" | "√" | "∛") primary
/// Decimals are exact ("0.001", ".1"). Throws ParseError with the offset.
Expression parse_expression(std::string_view text);

/// Depth-first, left operand first; traces are concatenated in firing order.
/// An EvaluationError from any step carries the pre-order index (and source
/// offset) of the node where it happened.
Evaluation eval_expression(const Expression& e, RuleSet rules);

}  // namespace numerals
