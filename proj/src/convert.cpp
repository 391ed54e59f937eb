#include "numerals/convert.hpp"

#include "numerals/errors.hpp"
#include "numerals/greek.hpp"
#include "numerals/indic.hpp"
#include "numerals/roman.hpp"

namespace numerals {

Integer decode(std::string_view text, const NumeralSystem& system, const ConvertOptions& options) {
    using K = NumeralSystem::Kind;
    switch (system.kind) {
    case K::Roman:
        return roman::parse(text, options.strict_roman ? roman::ParseMode::Strict : roman::ParseMode::Permissive);
    case K::Greek:
        return greek::parse(text);
    case K::Aryabhata:
        return aryabhata::parse(text);
    case K::Brahmi:
        return brahmi::parse(text);
    case K::HinduArabic:
        return Integer::from_decimal(text);
    case K::GapPositional: {
        auto numeral = gap::parse(text, system.base);
        auto readings = gap::interpretations(numeral, options.gap_bounds);
        if (readings.size() != 1) {
            std::vector<std::string> shown;
            for (const auto& r : readings)
                shown.push_back(r.to_string());
            throw AmbiguityError("'" + std::string(text) + "' has " + std::to_string(readings.size()) +
                                     " readings in base " + system.base.to_string() + "; use interpret",
                                 std::move(shown));
        }
        return readings.front();
    }
    }
    throw ParseError("unsupported numeral system");
}

std::string encode(const Integer& n, const NumeralSystem& system, const ConvertOptions& options) {
    using K = NumeralSystem::Kind;
    switch (system.kind) {
    case K::Roman:
        return roman::render(n, n > Integer(roman::kCanonicalMax) ? roman::Style::Repetition : roman::Style::Canonical);
    case K::Greek:
        return greek::render(n, options.script.value_or(Script::Native));
    case K::Aryabhata:
        return aryabhata::render_text(n, options.script.value_or(Script::Ascii));
    case K::Brahmi:
        return brahmi::render_text(n);
    case K::HinduArabic:
        return n.to_string();
    case K::GapPositional: {
        auto rendered = gap::render(n, system.base);
        if (rendered.lost_scale.is_positive())
            throw RangeError(n.to_string() + " ends in " + rendered.lost_scale.to_string() +
                             " empty place(s), which this notation cannot write");
        for (const auto& run : gap::medial_zero_runs(n, system.base))
            if (run > options.gap_bounds.max_gap_width)
                throw RangeError(n.to_string() + " has a run of " + run.to_string() +
                                 " empty places; a gap stands for at most " +
                                 options.gap_bounds.max_gap_width.to_string());
        return rendered.numeral.to_text();
    }
    }
    throw RangeError("unsupported numeral system");
}

std::string convert(std::string_view text, const NumeralSystem& from, const NumeralSystem& to,
                    const ConvertOptions& options) {
    return encode(decode(text, from, options), to, options);
}

}  // namespace numerals
