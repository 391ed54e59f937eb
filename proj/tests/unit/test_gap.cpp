#include <doctest.h>

#include "numerals/errors.hpp"
#include "numerals/gap.hpp"
#include "oracles.hpp"

using namespace numerals;

namespace {

std::vector<std::string> as_strings(const std::vector<Integer>& v) {
    std::vector<std::string> out;
    for (const auto& n : v)
        out.push_back(n.to_string());
    return out;
}

oracle::Tokens random_tokens(std::int64_t base, int length) {
    oracle::Tokens t;
    for (int i = 0; i < length; ++i) {
        bool gap = i > 0 && i + 1 < length && t.back() != 0 && oracle::uniform(0, 2) == 0;
        t.push_back(gap ? 0 : oracle::uniform(1, base - 1));
    }
    return t;
}

}  // namespace

TEST_CASE("gap numeral parsing") {
    auto plain = gap::parse("3 1 2", 10);
    CHECK(plain.slots == std::vector<gap::Slot>{gap::Slot::of(3), gap::Slot::of(1), gap::Slot::of(2)});
    auto gapped = gap::parse("3 _ 1 2", 10);
    CHECK(gapped.slots ==
          std::vector<gap::Slot>{gap::Slot::of(3), gap::Slot::gap(), gap::Slot::of(1), gap::Slot::of(2)});
    CHECK(gapped.gap_count() == 1);
    CHECK(gapped.to_text() == "3 _ 1 2");
    CHECK_THROWS_AS(gap::parse("_ 3", 10), ParseError);
    CHECK_THROWS_AS(gap::parse("3 _", 10), ParseError);
    CHECK_THROWS_AS(gap::parse("3 _ _ 1", 10), ParseError);
    CHECK_THROWS_AS(gap::parse("3 0 1", 10), ParseError);
    CHECK_THROWS_AS(gap::parse("3 10", 10), ParseError);
    CHECK_THROWS_AS(gap::parse("", 10), ParseError);
    CHECK_THROWS_AS(gap::parse("3 x", 10), ParseError);
    CHECK_THROWS_AS(gap::parse("3", 1), RangeError);
    CHECK(gap::parse("59 1").digits() == std::vector<Integer>{59, 1});
}

TEST_CASE("interpretations of the classic example") {
    CHECK(as_strings(gap::interpretations(gap::parse("3 1 2", 10), {1, 1})) ==
          std::vector<std::string>{"312", "3120"});
    CHECK(as_strings(gap::interpretations(gap::parse("3 _ 1 2", 10))) ==
          std::vector<std::string>{"3012", "30120"});
    CHECK(as_strings(gap::interpretations(gap::parse("3 _ 1 2", 10), {1, 0})) == std::vector<std::string>{"3012"});
    CHECK(as_strings(gap::interpretations(gap::parse("5", 60), {1, 0})) == std::vector<std::string>{"5"});
    CHECK(as_strings(gap::interpretations(gap::parse("1 _ 1", 10), {3, 0})) ==
          std::vector<std::string>{"101", "1001", "10001"});
    CHECK_THROWS_AS(gap::interpretations(gap::parse("1", 10), {0, 0}), RangeError);
    CHECK_THROWS_AS(gap::interpretations(gap::parse("1", 10), {1, -1}), RangeError);
    CHECK_THROWS_AS(gap::interpretations(gap::parse("1 _ 1 _ 1 _ 1", 10), {1000, 1000}), RangeError);
}

TEST_CASE("interpretations match the odometer oracle") {
    for (std::int64_t base : {10, 60}) {
        for (int i = 0; i < 250; ++i) {
            auto tokens = random_tokens(base, static_cast<int>(oracle::uniform(1, 6)));
            int W = static_cast<int>(oracle::uniform(1, 3));
            int T = static_cast<int>(oracle::uniform(0, 3));
            auto got = gap::interpretations(gap::parse(oracle::tokens_text(tokens), base), {W, T});
            auto expected = oracle::readings(tokens, base, W, T);
            auto got_strings = as_strings(got);
            REQUIRE(std::set<std::string>(got_strings.begin(), got_strings.end()) == expected);
            REQUIRE(got.size() == expected.size());
            for (std::size_t k = 1; k < got.size(); ++k)
                REQUIRE(got[k - 1] < got[k]);
        }
    }
}

TEST_CASE("interpretations are sound and complete by scanning") {
    // For each n, the numeral written for n must list n among its readings,
    // and every n that reads as that numeral must be listed.
    for (std::int64_t base : {10, 60}) {
        const gap::InterpretationBounds bounds{2, 2};
        for (std::int64_t n = 1; n <= 100000; n += (base == 10 ? 1 : 7)) {
            auto rendered = gap::render(n, base);
            if (rendered.lost_scale > Integer(2))
                continue;
            bool fits = true;
            for (const auto& run : gap::medial_zero_runs(n, base))
                fits = fits && run <= Integer(2);
            if (!fits)
                continue;
            auto readings = gap::interpretations(rendered.numeral, bounds);
            REQUIRE(std::find(readings.begin(), readings.end(), Integer(n)) != readings.end());
        }
        for (int i = 0; i < 40; ++i) {
            auto tokens = random_tokens(base, static_cast<int>(oracle::uniform(1, 3)));
            auto readings = gap::interpretations(gap::parse(oracle::tokens_text(tokens), base), bounds);
            std::set<std::int64_t> listed;
            for (const auto& r : readings)
                if (auto v = r.to_int64(); v && *v <= 100000)
                    listed.insert(*v);
            std::set<std::int64_t> scanned;
            for (std::int64_t n = 1; n <= 100000; ++n)
                if (oracle::reads_as(n, tokens, base, 2, 2))
                    scanned.insert(n);
            REQUIRE(listed == scanned);
        }
    }
}

TEST_CASE("rendering") {
    auto r = gap::render(3012, 10);
    CHECK(r.numeral.to_text() == "3 _ 1 2");
    CHECK(r.lost_scale == Integer(0));
    r = gap::render(300, 10);
    CHECK(r.numeral.to_text() == "3");
    CHECK(r.lost_scale == Integer(2));
    r = gap::render(3661, 60);
    CHECK(r.numeral.to_text() == "1 1 1");
    r = gap::render(30001, 10);
    CHECK(r.numeral.to_text() == "3 _ 1");
    CHECK(gap::medial_zero_runs(30001, 10) == std::vector<Integer>{3});
    CHECK_THROWS_AS(gap::render(0, 10), RangeError);
}

TEST_CASE("sexagesimal digits split into tens and units") {
    CHECK(gap::decompose_digit(59).tens == Integer(5));
    CHECK(gap::decompose_digit(59).units == Integer(9));
    CHECK(gap::decompose_digit(10).tens == Integer(1));
    CHECK(gap::decompose_digit(10).units == Integer(0));
    CHECK_THROWS_AS(gap::decompose_digit(60), RangeError);
    CHECK_THROWS_AS(gap::decompose_digit(0), RangeError);
}
