#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "numerals/integer.hpp"
#include "numerals/system.hpp"

namespace numerals::greek {

/// One entry of the alphabetic value table (data/greek_ionian.json).
struct Letter {
    std::string name;   // ASCII alias, e.g. "alpha", ",beta", "myriad"
    std::int64_t value;
    std::string glyph;  // rendered form
    std::vector<std::string> variants;  // other accepted input forms
    bool attested;      // value is pinned by the historical source
};

inline constexpr std::int64_t kMyriad = 10000;

/// The value table, ascending by value. Loaded once; immutable afterwards.
const std::vector<Letter>& letters();

/// Sums the letter values of either Unicode Greek text ("ρια") or the ASCII
/// alias form ("rho+iota+alpha"). Order does not matter.
/// Throws ParseError for unknown letters, RangeError for sums above 10000.
Integer parse(std::string_view text);

/// Greedy decomposition into strictly decreasing letter values.
/// Script::Ascii emits the alias form. Throws RangeError outside [1, 10000].
std::string render(const Integer& n, Script script = Script::Native);

}  // namespace numerals::greek
