#include "numerals/system.hpp"

#include "numerals/errors.hpp"

namespace numerals {

NumeralSystem NumeralSystem::gap_positional(Integer base) {
    if (base < Integer(2))
        throw RangeError("positional base must be at least 2 (got " + base.to_string() + ")");
    return {Kind::GapPositional, std::move(base)};
}

std::string name(const NumeralSystem& system) {
    using K = NumeralSystem::Kind;
    switch (system.kind) {
    case K::Roman: return "roman";
    case K::Greek: return "greek";
    case K::GapPositional: return "gap:" + system.base.to_string();
    case K::Aryabhata: return "aryabhata";
    case K::Brahmi: return "brahmi";
    case K::HinduArabic: return "decimal";
    }
    return "?";
}

NumeralSystem parse_system(std::string_view text, const Integer& default_base) {
    if (text == "roman")
        return NumeralSystem::roman();
    if (text == "greek")
        return NumeralSystem::greek();
    if (text == "aryabhata")
        return NumeralSystem::aryabhata();
    if (text == "brahmi")
        return NumeralSystem::brahmi();
    if (text == "decimal" || text == "hindu-arabic")
        return NumeralSystem::hindu_arabic();
    if (text == "gap" || text == "babylonian")
        return NumeralSystem::gap_positional(default_base);
    if (text.starts_with("gap:"))
        return NumeralSystem::gap_positional(Integer::from_decimal(text.substr(4)));
    throw ParseError("unknown numeral system '" + std::string(text) + "'");
}

}  // namespace numerals
