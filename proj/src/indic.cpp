#include "numerals/indic.hpp"

#include <sstream>

#include "json.hpp"
#include "numerals/data/aryabhata.hpp"
#include "numerals/errors.hpp"
#include "utf8.hpp"

namespace numerals::aryabhata {

namespace {

struct Tables {
    std::vector<Consonant> consonants;
    std::vector<Vowel> vowels;
};

Tables load() {
    auto doc = nlohmann::json::parse(data::kAryabhataJson);
    Tables t;
    for (const auto& c : doc.at("consonants"))
        t.consonants.push_back(Consonant{
            c.at("translit").get<std::string>(),
            c.at("devanagari").get<std::string>(),
            c.at("value").get<std::int64_t>(),
            c.at("class").get<std::string>() == "varga",
        });
    for (const auto& v : doc.at("vowels"))
        t.vowels.push_back(Vowel{
            v.at("translit").get<std::string>(),
            v.at("letter").get<std::string>(),
            v.at("sign").get<std::string>(),
            v.at("place_exponent").get<unsigned>(),
        });
    return t;
}

const Tables& tables() {
    static const Tables t = load();
    return t;
}

const Integer& place_value(std::size_t vowel) {
    static const std::vector<Integer> places = [] {
        std::vector<Integer> out;
        for (const auto& v : tables().vowels)
            out.push_back(Integer::pow(10, v.place_exponent));
        return out;
    }();
    return places.at(vowel);
}

std::size_t consonant_with_value(std::int64_t value) {
    const auto& cs = tables().consonants;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i].value == value)
            return i;
    throw RangeError("no consonant has value " + std::to_string(value));
}

Syllable parse_transliterated(std::string_view syllable) {
    auto dot = syllable.find('.');
    if (dot == std::string_view::npos)
        throw ParseError("syllable '" + std::string(syllable) + "' must be written consonant.vowel");
    std::string_view c = syllable.substr(0, dot);
    std::string_view v = syllable.substr(dot + 1);
    Syllable out{consonants().size(), vowels().size()};
    for (std::size_t i = 0; i < consonants().size(); ++i)
        if (consonants()[i].translit == c)
            out.consonant = i;
    for (std::size_t i = 0; i < vowels().size(); ++i)
        if (vowels()[i].translit == v)
            out.vowel = i;
    if (out.consonant == consonants().size())
        throw ParseError("unknown consonant '" + std::string(c) + "'");
    if (out.vowel == vowels().size())
        throw ParseError("unknown vowel '" + std::string(v) + "'");
    return out;
}

Numeral parse_devanagari(std::string_view text) {
    Numeral out;
    std::string_view rest = text;
    while (!rest.empty()) {
        std::size_t c = consonants().size();
        for (std::size_t i = 0; i < consonants().size(); ++i)
            if (rest.starts_with(consonants()[i].devanagari))
                c = i;
        if (c == consonants().size())
            throw ParseError("'" + std::string(utf8::first_char(rest)) + "' does not begin a numeral syllable");
        rest.remove_prefix(consonants()[c].devanagari.size());

        std::size_t v = 0;  // inherent a
        for (std::size_t i = 0; i < vowels().size(); ++i) {
            const auto& sign = vowels()[i].sign;
            if (!sign.empty() && rest.starts_with(sign))
                v = i;
        }
        rest.remove_prefix(vowels()[v].sign.size());
        out.syllables.push_back({c, v});
    }
    return out;
}

}  // namespace

const std::vector<Consonant>& consonants() { return tables().consonants; }
const std::vector<Vowel>& vowels() { return tables().vowels; }

Integer Numeral::value() const {
    Integer total = 0;
    for (const auto& s : syllables)
        total += Integer(consonants().at(s.consonant).value) * place_value(s.vowel);
    return total;
}

std::string Numeral::transliteration() const {
    std::string out;
    for (const auto& s : syllables) {
        if (!out.empty())
            out += '+';
        out += consonants().at(s.consonant).translit;
        out += '.';
        out += vowels().at(s.vowel).translit;
    }
    return out;
}

std::string Numeral::devanagari() const {
    std::string out;
    for (const auto& s : syllables) {
        out += consonants().at(s.consonant).devanagari;
        out += vowels().at(s.vowel).sign;
    }
    return out;
}

Numeral parse_numeral(std::string_view text) {
    if (text.empty())
        throw ParseError("empty Aryabhata numeral");
    if (!utf8::is_ascii(text))
        return parse_devanagari(text);

    Numeral out;
    std::string_view rest = text;
    while (true) {
        auto plus = rest.find('+');
        out.syllables.push_back(parse_transliterated(rest.substr(0, plus)));
        if (plus == std::string_view::npos)
            break;
        rest.remove_prefix(plus + 1);
    }
    return out;
}

Integer parse(std::string_view text) { return parse_numeral(text).value(); }

Numeral render(const Integer& n) {
    static const Integer limit = Integer::pow(10, 18);
    if (!n.is_positive() || n >= limit)
        throw RangeError("Aryabhata numerals cover 1..10^18-1 (got " + n.to_string() + ")");

    // Base-100 digit pairs, one per vowel place.
    std::vector<std::int64_t> pairs;
    for (Integer rest = n; rest.is_positive();) {
        auto [q, r] = floor_divmod(rest, 100);
        pairs.push_back(*r.to_int64());
        rest = std::move(q);
    }

    Numeral out;
    for (std::size_t place = pairs.size(); place-- > 0;) {
        std::int64_t p = pairs[place];
        if (p == 0)
            continue;
        auto emit = [&](std::int64_t value) { out.syllables.push_back({consonant_with_value(value), place}); };
        if (p <= 25) {
            emit(p);
        } else if (p >= 30) {
            emit(p / 10 * 10);
            if (p % 10 != 0)
                emit(p % 10);
        } else {
            emit(25);
            emit(p - 25);
        }
    }
    return out;
}

std::string render_text(const Integer& n, Script script) {
    Numeral numeral = render(n);
    return script == Script::Native ? numeral.devanagari() : numeral.transliteration();
}

}  // namespace numerals::aryabhata

namespace numerals::brahmi {

namespace {

// 0 when `token` is not a Brahmi token name.
std::int64_t token_value(std::string_view token) {
    if (token.size() < 2 || token.size() > 3 || token.front() != 'B')
        return 0;
    std::string_view digits = token.substr(1);
    if (digits.front() < '1' || digits.front() > '9')
        return 0;
    if (digits.size() == 1)
        return digits.front() - '0';
    if (digits.back() != '0')
        return 0;
    return (digits.front() - '0') * 10;
}

}  // namespace

bool is_token(std::string_view token) { return token_value(token) != 0; }

Integer parse(std::string_view tokens) {
    std::istringstream in{std::string(tokens)};
    std::string tok;
    std::int64_t total = 0;
    bool any = false;
    while (in >> tok) {
        std::int64_t v = token_value(tok);
        if (v == 0)
            throw ParseError("unknown Brahmi token '" + tok + "'");
        total += v;
        any = true;
    }
    if (!any)
        throw ParseError("empty Brahmi numeral");
    if (total > 99)
        throw RangeError("Brahmi numerals here cover 1..99 (sum is " + std::to_string(total) + ")");
    return total;
}

std::vector<std::string> render(const Integer& n) {
    if (n < Integer(1) || n > Integer(99))
        throw RangeError("Brahmi numerals here cover 1..99 (got " + n.to_string() + ")");
    auto v = *n.to_int64();
    std::vector<std::string> out;
    if (v >= 10)
        out.push_back("B" + std::to_string(v / 10 * 10));
    if (v % 10 != 0)
        out.push_back("B" + std::to_string(v % 10));
    return out;
}

std::string render_text(const Integer& n) {
    std::string out;
    for (const auto& t : render(n)) {
        if (!out.empty())
            out += ' ';
        out += t;
    }
    return out;
}

}  // namespace numerals::brahmi
