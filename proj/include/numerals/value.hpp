#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "numerals/rational.hpp"

namespace numerals {

/// An ordinary exact quantity.
struct Finite {
    Rational value;
    friend bool operator==(const Finite&, const Finite&) = default;
};

/// A quantity with zero denominator, unchanged by adding or subtracting a
/// finite quantity.
struct Khahara {
    friend bool operator==(const Khahara&, const Khahara&) = default;
};

/// `numerator / 0` kept as written, with no value committed to.
struct Unresolved {
    Rational numerator;
    friend bool operator==(const Unresolved&, const Unresolved&) = default;
};

/// `factor * 0`, which equals zero but remembers its factor so that a later
/// division by zero can cancel it.
struct ZeroProduct {
    Rational factor;
    friend bool operator==(const ZeroProduct&, const ZeroProduct&) = default;
};

using Value = std::variant<Finite, Khahara, Unresolved, ZeroProduct>;

inline Value finite(Rational r) { return Finite{std::move(r)}; }

inline bool is_finite(const Value& v) { return std::holds_alternative<Finite>(v); }
inline bool is_finite_zero(const Value& v) {
    const auto* f = std::get_if<Finite>(&v);
    return f && f->value.is_zero();
}

/// ZeroProduct(0) becomes Finite(0); everything else is returned unchanged
/// (rationals are always stored reduced).
Value normalize(const Value& v);

/// Display form: "5", "1/3", "khahara (∞)", "5/0 (unresolved)", and "0" for
/// any zero product.
std::string display(const Value& v);

/// Unambiguous form used in traces and tests, e.g. "ZeroProduct(5)".
std::string describe(const Value& v);

enum class RuleSet { Brahmagupta628, Bhaskara1150, Modern };

std::string_view to_string(RuleSet rules);
/// Accepts "brahmagupta", "bhaskara", "modern" and the full enumerator names.
RuleSet parse_rule_set(std::string_view name);

}  // namespace numerals
