#include "numerals/greek.hpp"

#include <algorithm>

#include "json.hpp"
#include "numerals/data/greek_ionian.hpp"
#include "numerals/errors.hpp"
#include "utf8.hpp"

namespace numerals::greek {

namespace {

std::vector<Letter> load() {
    auto doc = nlohmann::json::parse(data::kGreekIonianJson);
    std::vector<Letter> out;
    for (const auto& e : doc.at("letters")) {
        out.push_back(Letter{
            e.at("name").get<std::string>(),
            e.at("value").get<std::int64_t>(),
            e.at("glyph").get<std::string>(),
            e.value("variants", std::vector<std::string>{}),
            e.value("attested", false),
        });
    }
    std::sort(out.begin(), out.end(), [](const Letter& a, const Letter& b) { return a.value < b.value; });
    return out;
}

const Letter* find_alias(std::string_view name) {
    for (const auto& l : letters())
        if (l.name == name)
            return &l;
    return nullptr;
}

// Longest glyph or variant that prefixes `text`; the thousands forms are two
// code points and must win over their bare unit letter.
std::pair<const Letter*, std::size_t> match_glyph(std::string_view text) {
    const Letter* best = nullptr;
    std::size_t best_len = 0;
    auto consider = [&](const Letter& l, const std::string& form) {
        if (form.size() > best_len && text.substr(0, form.size()) == form) {
            best = &l;
            best_len = form.size();
        }
    };
    for (const auto& l : letters()) {
        consider(l, l.glyph);
        for (const auto& v : l.variants)
            consider(l, v);
    }
    return {best, best_len};
}

}  // namespace

const std::vector<Letter>& letters() {
    static const std::vector<Letter> table = load();
    return table;
}

Integer parse(std::string_view text) {
    if (text.empty())
        throw ParseError("empty Greek numeral");

    std::int64_t total = 0;
    auto add = [&](const Letter& l) {
        total += l.value;
        if (total > kMyriad)
            throw RangeError("Greek numeral '" + std::string(text) + "' exceeds the myriad (10000)");
    };

    if (utf8::is_ascii(text)) {
        std::string_view rest = text;
        while (true) {
            auto plus = rest.find('+');
            std::string_view name = rest.substr(0, plus);
            const Letter* l = find_alias(name);
            if (!l)
                throw ParseError("unknown Greek letter name '" + std::string(name) + "'");
            add(*l);
            if (plus == std::string_view::npos)
                break;
            rest.remove_prefix(plus + 1);
        }
        return total;
    }

    std::string_view rest = text;
    while (!rest.empty()) {
        auto [l, len] = match_glyph(rest);
        if (!l)
            throw ParseError("'" + std::string(utf8::first_char(rest)) + "' is not a Greek numeral letter");
        add(*l);
        rest.remove_prefix(len);
    }
    return total;
}

std::string render(const Integer& n, Script script) {
    if (!n.is_positive() || n > Integer(kMyriad))
        throw RangeError("Greek numerals cover 1..10000 (got " + n.to_string() + ")");
    auto rest = *n.to_int64();
    std::string out;
    const auto& table = letters();
    for (auto it = table.rbegin(); it != table.rend() && rest > 0; ++it) {
        if (it->value > rest)
            continue;
        if (script == Script::Ascii && !out.empty())
            out += '+';
        out += script == Script::Ascii ? it->name : it->glyph;
        rest -= it->value;
    }
    return out;
}

}  // namespace numerals::greek
