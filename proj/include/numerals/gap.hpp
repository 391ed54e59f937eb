#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numerals/integer.hpp"

namespace numerals::gap {

/// One written position: a non-zero digit, or a vacant space.
struct Slot {
    std::optional<Integer> digit;  // empty for a gap

    static Slot gap() { return {}; }
    static Slot of(Integer d) { return {std::move(d)}; }
    bool is_gap() const noexcept { return !digit.has_value(); }
    friend bool operator==(const Slot&, const Slot&) = default;
};

/// Positional numeral with no zero digit. Invariants: non-empty, every digit
/// in [1, base-1], first and last slot are digits, no two adjacent gaps.
struct GapNumeral {
    Integer base = 60;
    std::vector<Slot> slots;

    /// "3 _ 1 2"
    std::string to_text() const;
    /// Digit values with gaps dropped.
    std::vector<Integer> digits() const;
    std::size_t gap_count() const;

    friend bool operator==(const GapNumeral&, const GapNumeral&) = default;
};

struct InterpretationBounds {
    Integer max_gap_width = 1;  // zero places one gap may stand for, >= 1
    Integer max_trailing = 1;   // trailing zero places that may be missing, >= 0
};

/// Throws ParseError for an empty numeral, a zero or out-of-range digit, a
/// leading/trailing gap, or adjacent gaps. Throws RangeError for base < 2.
GapNumeral parse(std::string_view tokens, const Integer& base = 60);

/// Every integer the numeral could denote under `bounds`, ascending and
/// distinct. Throws RangeError if the bounds are invalid or would yield more
/// than kMaxInterpretations readings.
std::vector<Integer> interpretations(const GapNumeral& numeral, const InterpretationBounds& bounds = {});

inline constexpr std::size_t kMaxInterpretations = 1'000'000;

struct Rendered {
    GapNumeral numeral;
    /// Trailing zero places that could not be written.
    Integer lost_scale;
};

/// Canonical lossy encoding: each run of medial zeros becomes one gap and
/// trailing zeros are dropped. Throws RangeError for n <= 0.
Rendered render(const Integer& n, const Integer& base = 60);

/// Width of each run of medial zero digits in `n` written in `base`.
std::vector<Integer> medial_zero_runs(const Integer& n, const Integer& base);

struct DigitParts {
    Integer tens;
    Integer units;
};

/// Splits a base-60 digit into its tens and units strokes.
/// Throws RangeError outside [1, 59].
DigitParts decompose_digit(const Integer& d);

}  // namespace numerals::gap
