#include "numerals/gap.hpp"

#include <algorithm>
#include <sstream>

#include "numerals/errors.hpp"

namespace numerals::gap {

namespace {

std::vector<Integer> base_digits(Integer n, const Integer& base) {
    std::vector<Integer> out;
    while (n.is_positive()) {
        auto [q, r] = floor_divmod(n, base);
        out.push_back(std::move(r));
        n = std::move(q);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

void check_base(const Integer& base) {
    if (base < Integer(2))
        throw RangeError("positional base must be at least 2 (got " + base.to_string() + ")");
}

}  // namespace

std::string GapNumeral::to_text() const {
    std::string out;
    for (const auto& s : slots) {
        if (!out.empty())
            out += ' ';
        out += s.is_gap() ? "_" : s.digit->to_string();
    }
    return out;
}

std::vector<Integer> GapNumeral::digits() const {
    std::vector<Integer> out;
    for (const auto& s : slots)
        if (!s.is_gap())
            out.push_back(*s.digit);
    return out;
}

std::size_t GapNumeral::gap_count() const {
    return static_cast<std::size_t>(std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.is_gap(); }));
}

GapNumeral parse(std::string_view tokens, const Integer& base) {
    check_base(base);
    GapNumeral out{base, {}};
    std::istringstream in{std::string(tokens)};
    std::string tok;
    while (in >> tok) {
        if (tok == "_") {
            if (out.slots.empty())
                throw ParseError("a vacant place cannot lead a numeral");
            if (out.slots.back().is_gap())
                throw ParseError("adjacent vacant places; one gap already stands for a run of empty places");
            out.slots.push_back(Slot::gap());
            continue;
        }
        Integer d = Integer::from_decimal(tok);
        if (d.is_zero())
            throw ParseError("there is no zero digit; mark an empty place with '_'");
        if (d.is_negative() || d >= base)
            throw ParseError("digit " + tok + " is outside 1.." + (base - 1).to_string());
        out.slots.push_back(Slot::of(std::move(d)));
    }
    if (out.slots.empty())
        throw ParseError("empty numeral");
    if (out.slots.back().is_gap())
        throw ParseError("a vacant place cannot end a numeral");
    return out;
}

std::vector<Integer> interpretations(const GapNumeral& numeral, const InterpretationBounds& bounds) {
    if (bounds.max_gap_width < Integer(1) || bounds.max_trailing.is_negative())
        throw RangeError("interpretation bounds need max_gap_width >= 1 and max_trailing >= 0");

    Integer count = Integer::pow(bounds.max_gap_width, static_cast<unsigned>(numeral.gap_count())) *
                    (bounds.max_trailing + 1);
    if (count > Integer(static_cast<std::int64_t>(kMaxInterpretations)))
        throw RangeError("interpretation bounds allow " + count.to_string() + " readings; limit is " +
                         std::to_string(kMaxInterpretations));

    const auto widths = *bounds.max_gap_width.to_int64();
    const auto trailing = *bounds.max_trailing.to_int64();
    const Integer& base = numeral.base;

    std::vector<Integer> out;
    auto walk = [&](auto&& self, std::size_t i, const Integer& acc) -> void {
        if (i == numeral.slots.size()) {
            Integer v = acc;
            for (std::int64_t t = 0; t <= trailing; ++t) {
                out.push_back(v);
                v *= base;
            }
            return;
        }
        const Slot& s = numeral.slots[i];
        if (!s.is_gap()) {
            self(self, i + 1, acc * base + *s.digit);
            return;
        }
        Integer v = acc;
        for (std::int64_t w = 1; w <= widths; ++w) {
            v *= base;
            self(self, i + 1, v);
        }
    };
    walk(walk, 0, Integer(0));

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rendered render(const Integer& n, const Integer& base) {
    check_base(base);
    if (!n.is_positive())
        throw RangeError("a numeral without zero cannot write " + n.to_string());

    auto digits = base_digits(n, base);
    Integer lost = 0;
    while (digits.back().is_zero()) {
        digits.pop_back();
        lost += 1;
    }

    GapNumeral numeral{base, {}};
    for (auto& d : digits) {
        if (!d.is_zero())
            numeral.slots.push_back(Slot::of(std::move(d)));
        else if (!numeral.slots.back().is_gap())
            numeral.slots.push_back(Slot::gap());
    }
    return {std::move(numeral), std::move(lost)};
}

std::vector<Integer> medial_zero_runs(const Integer& n, const Integer& base) {
    check_base(base);
    auto digits = base_digits(n, base);
    while (!digits.empty() && digits.back().is_zero())
        digits.pop_back();
    std::vector<Integer> runs;
    Integer run = 0;
    for (const auto& d : digits) {
        if (d.is_zero()) {
            run += 1;
        } else if (run.is_positive()) {
            runs.push_back(run);
            run = 0;
        }
    }
    return runs;
}

DigitParts decompose_digit(const Integer& d) {
    if (d < Integer(1) || d > Integer(59))
        throw RangeError("a sexagesimal digit lies in 1..59 (got " + d.to_string() + ")");
    return {d / 10, d % 10};
}

}  // namespace numerals::gap
