#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "numerals/integer.hpp"
#include "numerals/value.hpp"

namespace numerals {

enum class BinaryOp { Add, Sub, Mul, Div };
enum class UnaryOp { Square, Sqrt, Cube, Cbrt, Negate };

std::string_view symbol(BinaryOp op);
std::string_view symbol(UnaryOp op);

/// One fired rule. `rule_id` always names an entry of catalog::rules().
struct TraceEntry {
    std::string rule_id;
    std::string description;
    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

using RuleTrace = std::vector<TraceEntry>;

struct Evaluation {
    Value value;
    RuleTrace trace;
};

/// One arithmetic step under the chosen rule set. Failures are reported as
/// DivisionByZero, UndefinedBySource or DomainError, and the message starts
/// with the governing rule id in brackets.
///
/// Brahmagupta628: a/0 stays Unresolved(a), 0/0 = 0, a*0 = 0.
/// Bhaskara1150: a*0 = ZeroProduct(a), (a*0)/0 = a, a/0 = Khahara, and
///   Khahara absorbs added or subtracted finite quantities.
/// Modern: exact rationals only; any division by zero fails.
Evaluation eval_binary(BinaryOp op, const Value& lhs, const Value& rhs, RuleSet rules);

/// Square and cube are exact. Roots need an exact rational square / cube
/// (DomainError otherwise). Zero maps to zero under every rule set.
Evaluation eval_unary(UnaryOp op, const Value& v, RuleSet rules);

/// Zero obtained as a - a. Throws UndefinedBySource unless `a` is Finite.
Evaluation zero_from(const Value& a);

/// A signed integer in the fortune/debt vocabulary.
class SignedQuantity {
public:
    enum class Kind { Fortune, Debt, Zero };

    static SignedQuantity zero() { return SignedQuantity(Kind::Zero, 0); }
    /// Throws RangeError unless magnitude > 0.
    static SignedQuantity fortune(Integer magnitude);
    static SignedQuantity debt(Integer magnitude);
    static SignedQuantity from_integer(const Integer& n);

    Kind kind() const noexcept { return kind_; }
    /// 0 for Zero, otherwise strictly positive.
    const Integer& magnitude() const noexcept { return magnitude_; }
    Integer to_integer() const;
    std::string to_string() const;

    friend bool operator==(const SignedQuantity&, const SignedQuantity&) = default;

private:
    SignedQuantity(Kind kind, Integer magnitude) : kind_(kind), magnitude_(std::move(magnitude)) {}

    Kind kind_;
    Integer magnitude_;
};

struct SignedEvaluation {
    SignedQuantity value;
    RuleTrace trace;
};

/// Fortune/debt sign calculus. The trace names the governing rule (FD-1 ..
/// FD-11), or an EX-* id for sign patterns no rule covers.
/// Throws DivisionByZero for a zero divisor, InexactQuotient when the
/// magnitudes do not divide exactly.
SignedEvaluation signed_op(BinaryOp op, const SignedQuantity& a, const SignedQuantity& b);

}  // namespace numerals
