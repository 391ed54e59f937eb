#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "numerals/integer.hpp"
#include "numerals/system.hpp"

namespace numerals::aryabhata {

struct Consonant {
    std::string translit;    // "ga", "Na", ...
    std::string devanagari;  // "ग"
    std::int64_t value;      // 1..25 (varga) or 30..100 (avarga)
    bool varga;
};

struct Vowel {
    std::string translit;  // "a", "u", "au", ...
    std::string letter;    // independent form, "उ"
    std::string sign;      // dependent form after a consonant; empty for "a"
    unsigned place_exponent;  // the vowel multiplies by 10^place_exponent
};

/// Value tables from data/aryabhata.json, in table order.
const std::vector<Consonant>& consonants();
const std::vector<Vowel>& vowels();

struct Syllable {
    std::size_t consonant;  // index into consonants()
    std::size_t vowel;      // index into vowels()
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct Numeral {
    std::vector<Syllable> syllables;

    Integer value() const;
    /// "ga.u+Na.a"
    std::string transliteration() const;
    /// "गुण"
    std::string devanagari() const;

    friend bool operator==(const Numeral&, const Numeral&) = default;
};

/// Accepts Devanagari or the "+"-joined "consonant.vowel" transliteration.
/// Throws ParseError for unknown letters or malformed syllables.
Numeral parse_numeral(std::string_view text);

/// Sum over syllables of consonant value x 10^(vowel place).
Integer parse(std::string_view text);

/// Canonical numeral for 1 <= n < 10^18, most significant place first.
/// Throws RangeError otherwise.
Numeral render(const Integer& n);

std::string render_text(const Integer& n, Script script = Script::Ascii);

}  // namespace numerals::aryabhata

namespace numerals::brahmi {

/// Token names: B1..B9 and B10, B20, ..., B90.
bool is_token(std::string_view token);

/// Additive sum of whitespace-separated tokens.
/// Throws ParseError for unknown tokens, RangeError for sums above 99.
Integer parse(std::string_view tokens);

/// Tens token (if any) then units token (if any). Throws RangeError outside
/// [1, 99].
std::vector<std::string> render(const Integer& n);

/// render() joined with single spaces.
std::string render_text(const Integer& n);

}  // namespace numerals::brahmi
