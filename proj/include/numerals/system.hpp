#pragma once

#include <string>
#include <string_view>

#include "numerals/integer.hpp"

namespace numerals {

/// Which script a codec with two written forms should emit.
enum class Script {
    /// Greek letters, Devanagari syllables.
    Native,
    /// ASCII alias ("rho+iota+alpha") or transliteration ("ga.u+Na.a").
    Ascii,
};

struct NumeralSystem {
    enum class Kind { Roman, Greek, GapPositional, Aryabhata, Brahmi, HinduArabic };

    Kind kind = Kind::HinduArabic;
    /// Only meaningful for GapPositional; always >= 2.
    Integer base = 60;

    static NumeralSystem roman() { return {Kind::Roman}; }
    static NumeralSystem greek() { return {Kind::Greek}; }
    /// Throws RangeError for base < 2.
    static NumeralSystem gap_positional(Integer base = 60);
    static NumeralSystem aryabhata() { return {Kind::Aryabhata}; }
    static NumeralSystem brahmi() { return {Kind::Brahmi}; }
    static NumeralSystem hindu_arabic() { return {Kind::HinduArabic}; }

    friend bool operator==(const NumeralSystem&, const NumeralSystem&) = default;
};

/// "roman", "greek", "gap:60", "aryabhata", "brahmi", "decimal".
std::string name(const NumeralSystem& system);

/// Inverse of name(); also accepts "gap" / "babylonian" (taking
/// `default_base`) and "hindu-arabic". Throws ParseError otherwise.
NumeralSystem parse_system(std::string_view text, const Integer& default_base = 60);

}  // namespace numerals
