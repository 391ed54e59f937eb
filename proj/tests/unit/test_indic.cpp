#include <doctest.h>

#include "numerals/errors.hpp"
#include "numerals/indic.hpp"
#include "oracles.hpp"

using namespace numerals;

TEST_CASE("aryabhata examples") {
    CHECK(aryabhata::parse("ग") == Integer(3));
    CHECK(aryabhata::parse("गु") == Integer(30000));
    CHECK(aryabhata::parse("गुण") == Integer(30015));
    CHECK(aryabhata::parse("ga.a") == Integer(3));
    CHECK(aryabhata::parse("ga.u+Na.a") == Integer(30015));
    CHECK(aryabhata::render_text(30015) == "ga.u+Na.a");
    CHECK(aryabhata::render_text(30015, Script::Native) == "गुण");
    CHECK(aryabhata::render_text(47) == "ra.a+cha.a");
    CHECK(aryabhata::render_text(Integer::pow(10, 16)) == "ka.au");
    CHECK(aryabhata::render_text(Integer::pow(10, 16), Script::Native) == "कौ");
    CHECK(aryabhata::render_text(100) == "ka.i");
    CHECK(aryabhata::parse("ha.a") == Integer(100));
    CHECK(aryabhata::render_text(27) == "ma.a+kha.a");
}

TEST_CASE("aryabhata rejects malformed input") {
    CHECK_THROWS_AS(aryabhata::parse(""), ParseError);
    CHECK_THROWS_AS(aryabhata::parse("ga"), ParseError);
    CHECK_THROWS_AS(aryabhata::parse("qa.a"), ParseError);
    CHECK_THROWS_AS(aryabhata::parse("ga.x"), ParseError);
    CHECK_THROWS_AS(aryabhata::parse("उ"), ParseError);
    CHECK_THROWS_AS(aryabhata::render_text(0), RangeError);
    CHECK_THROWS_AS(aryabhata::render_text(Integer::pow(10, 18)), RangeError);
}

TEST_CASE("aryabhata tables agree with the oracle tables") {
    const auto& cons = aryabhata::consonants();
    REQUIRE(cons.size() == 33);
    int varga = 0;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        CHECK(cons[i].translit == oracle::aryabhata_consonants()[i].first);
        CHECK(cons[i].value == oracle::aryabhata_consonants()[i].second);
        varga += cons[i].varga;
    }
    CHECK(varga == 25);
    const auto& vowels = aryabhata::vowels();
    REQUIRE(vowels.size() == 9);
    for (std::size_t i = 0; i < vowels.size(); ++i) {
        CHECK(vowels[i].place_exponent == 2 * i);
        CHECK(oracle::aryabhata_vowel_exponents().at(vowels[i].translit) == static_cast<int>(2 * i));
    }
}

TEST_CASE("aryabhata round trip") {
    for (std::int64_t n = 1; n <= 1000000; ++n) {
        auto text = aryabhata::render_text(n);
        REQUIRE(aryabhata::parse(text) == Integer(n));
        if (n % 97 == 0) {
            REQUIRE(oracle::aryabhata_value(text) == std::to_string(n));
            REQUIRE(aryabhata::parse(aryabhata::render_text(n, Script::Native)) == Integer(n));
        }
    }
    for (unsigned k = 0; k <= 8; ++k) {
        Integer p = Integer::pow(10, 2 * k);
        auto text = aryabhata::render_text(p);
        CHECK(text == "ka." + aryabhata::vowels()[k].translit);
        CHECK(aryabhata::parse(text) == p);
    }
    for (int i = 0; i < 500; ++i) {
        auto n = Integer(oracle::uniform(1, 999999999)) * Integer(oracle::uniform(1, 999999999));
        CHECK(aryabhata::parse(aryabhata::render_text(n)) == n);
    }
}

TEST_CASE("brahmi") {
    CHECK(brahmi::parse("B3") == Integer(3));
    CHECK(brahmi::parse("B10") == Integer(10));
    CHECK(brahmi::parse("B20 B3") == Integer(23));
    CHECK(brahmi::parse("B3 B20") == Integer(23));
    CHECK(brahmi::render(23) == std::vector<std::string>{"B20", "B3"});
    CHECK(brahmi::render(10) == std::vector<std::string>{"B10"});
    CHECK(brahmi::render_text(99) == "B90 B9");
    CHECK_THROWS_AS(brahmi::render(100), RangeError);
    CHECK_THROWS_AS(brahmi::render(0), RangeError);
    CHECK_THROWS_AS(brahmi::parse("B90 B20"), RangeError);
    CHECK_THROWS_AS(brahmi::parse("B11"), ParseError);
    CHECK_THROWS_AS(brahmi::parse(""), ParseError);
    CHECK(brahmi::is_token("B40"));
    CHECK_FALSE(brahmi::is_token("B0"));
    for (int n = 1; n <= 99; ++n)
        REQUIRE(brahmi::parse(brahmi::render_text(n)) == Integer(n));
}
