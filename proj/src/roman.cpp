#include "numerals/roman.hpp"

#include <array>
#include <utility>
#include <vector>

#include "numerals/errors.hpp"

namespace numerals::roman {

namespace {

int letter_value(char c) {
    switch (c) {
    case 'I': return 1;
    case 'V': return 5;
    case 'X': return 10;
    case 'L': return 50;
    case 'C': return 100;
    case 'D': return 500;
    case 'M': return 1000;
    default: return 0;
    }
}

constexpr std::array<std::pair<int, std::string_view>, 13> kSubtractive{{
    {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"},
    {50, "L"}, {40, "XL"}, {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"},
}};

constexpr std::array<std::pair<int, char>, 6> kAdditiveBelowThousand{{
    {500, 'D'}, {100, 'C'}, {50, 'L'}, {10, 'X'}, {5, 'V'}, {1, 'I'},
}};

}  // namespace

Integer parse(std::string_view text, ParseMode mode) {
    if (text.empty())
        throw ParseError("empty Roman numeral");

    std::vector<int> values;
    values.reserve(text.size());
    for (char c : text) {
        int v = letter_value(c);
        if (v == 0)
            throw ParseError("'" + std::string(1, c) + "' is not a Roman numeral letter");
        values.push_back(v);
    }

    Integer total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        bool subtracts = i + 1 < values.size() && values[i] < values[i + 1];
        if (subtracts) {
            // One smaller letter only: reject "IIX" and chains such as "IXC".
            if (i > 0 && values[i - 1] <= values[i])
                throw ParseError("more than one letter subtracted in '" + std::string(text) + "'");
            if (i + 2 < values.size() && values[i + 1] < values[i + 2])
                throw ParseError("chained subtraction in '" + std::string(text) + "'");
            total -= values[i];
        } else {
            total += values[i];
        }
    }

    if (mode == ParseMode::Strict) {
        if (total > Integer(kCanonicalMax) || render(total, Style::Canonical) != text)
            throw ParseError("'" + std::string(text) + "' is not in canonical form");
    }
    return total;
}

std::string render(const Integer& n, Style style) {
    if (!n.is_positive())
        throw RangeError("Roman numerals have no zero or negative values (got " + n.to_string() + ")");

    if (style == Style::Canonical) {
        if (n > Integer(kCanonicalMax))
            throw RangeError("canonical Roman form stops at 3999 (got " + n.to_string() +
                             "); use repetition style");
        auto rest = *n.to_int64();
        std::string out;
        for (auto [value, letters] : kSubtractive) {
            while (rest >= value) {
                out += letters;
                rest -= value;
            }
        }
        return out;
    }

    DivMod split = floor_divmod(n, 1000);
    auto thousands = split.quotient.to_int64();
    if (!thousands)
        throw RangeError("too many thousands to write out as repeated M");
    std::string out(static_cast<std::size_t>(*thousands), 'M');
    auto rest = *split.remainder.to_int64();
    for (auto [value, letter] : kAdditiveBelowThousand) {
        while (rest >= value) {
            out += letter;
            rest -= value;
        }
    }
    return out;
}

}  // namespace numerals::roman
