#pragma once

#include <string>
#include <string_view>

#include "numerals/integer.hpp"

namespace numerals::roman {

enum class ParseMode {
    /// Only the standard subtractive form produced by render(n, Canonical).
    Strict,
    /// Any string obeying the add/subtract rule where each subtraction is a
    /// single smaller letter before a larger one ("MMMM", "IIII", "VX").
    Permissive,
};

enum class Style {
    /// Standard subtractive form, 1..3999.
    Canonical,
    /// Greedy purely additive form; thousands are written as repeated M.
    Repetition,
};

inline constexpr std::int64_t kCanonicalMax = 3999;

/// Throws ParseError for empty input, letters outside IVXLCDM, or a string
/// the chosen mode rejects.
Integer parse(std::string_view text, ParseMode mode = ParseMode::Permissive);

/// Throws RangeError for n <= 0, and for n > 3999 in canonical style.
std::string render(const Integer& n, Style style = Style::Canonical);

}  // namespace numerals::roman
