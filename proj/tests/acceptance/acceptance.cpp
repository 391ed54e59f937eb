// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "numerals/numerals.hpp"
#include "oracles.hpp"

using namespace numerals;

namespace {

using Clock = std::chrono::steady_clock;

// Collects failures inside one criterion; the first few are reported.
struct Check {
    std::vector<std::string> failures;
    std::size_t count = 0;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok)
            failures.push_back(what);
    }

    template <typename F>
    void no_throw(F&& f, const std::string& what) {
        try {
            f();
        } catch (const std::exception& e) {
            expect(false, what + " threw: " + e.what());
        }
    }

    template <typename E, typename F>
    void throws(F&& f, const std::string& what) {
        try {
            f();
        } catch (const E&) {
            expect(true, what);
            return;
        } catch (const std::exception& e) {
            expect(false, what + " threw the wrong error: " + e.what());
            return;
        }
        expect(false, what + " did not throw");
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational random_rational() {
    std::int64_t num = oracle::uniform(-10000, 10000);
    if (num == 0)
        num = 17;
    return Rational(num, oracle::uniform(1, 997));
}

// ---- criteria -----------------------------------------------------------

void roman_fidelity(Check& c) {
    auto start = Clock::now();
    c.expect(roman::parse("III") == Integer(3), "III = 3");
    c.expect(roman::parse("IX") == Integer(9), "IX = 9");
    c.expect(roman::parse("XI") == Integer(11), "XI = 11");
    c.expect(roman::parse("MMXVI") == Integer(2016), "MMXVI = 2016");
    c.expect(roman::render(3) == "III" && roman::render(9) == "IX" && roman::render(11) == "XI" &&
                 roman::render(2016) == "MMXVI",
             "render 3, 9, 11, 2016");
    c.expect(roman::render(100000, roman::Style::Repetition) == std::string(100, 'M'), "100000 is 100 M");
    c.expect(seconds_since(start) < 1.0, "runtime under 1 s");
}

void roman_round_trip(Check& c) {
    std::size_t failures = 0;
    for (int n = 1; n <= 3999; ++n) {
        auto text = roman::render(n);
        if (text != oracle::roman(n) || roman::parse(text, roman::ParseMode::Strict) != Integer(n))
            ++failures;
    }
    for (int i = 0; i < 10000; ++i) {
        std::int64_t n = oracle::uniform(1, 1000000);
        if (roman::parse(roman::render(n, roman::Style::Repetition)) != Integer(n))
            ++failures;
    }
    c.expect(failures == 0, std::to_string(failures) + " round-trip failures");
}

void greek_fidelity(Check& c) {
    const char* names[] = {"alpha", "beta", "gamma", "delta", "epsilon", "stigma", "zeta", "eta", "theta", "iota"};
    for (int i = 0; i < 10; ++i)
        c.expect(greek::parse(names[i]) == Integer(i + 1), std::string(names[i]) + " = " + std::to_string(i + 1));
    c.expect(greek::parse("α") == Integer(1) && greek::parse("ι") == Integer(10), "α = 1, ι = 10");
    c.expect(greek::parse("ρ") == Integer(100), "ρ = 100");
    c.expect(greek::parse("ϕ") == Integer(500), "ϕ = 500");
    c.expect(greek::parse("μ") == Integer(10000), "μ = 10000");
    c.throws<RangeError>([] { greek::render(10001); }, "render 10001");
    std::size_t failures = 0;
    for (int n = 1; n <= 10000; ++n)
        if (greek::parse(greek::render(n)) != Integer(n))
            ++failures;
    c.expect(failures == 0, std::to_string(failures) + " round-trip failures");
}

void babylonian_ambiguity(Check& c) {
    auto plain = gap::interpretations(gap::parse("3 1 2", 10), {1, 0});
    auto gapped = gap::interpretations(gap::parse("3 _ 1 2", 10), {1, 0});
    c.expect(plain == std::vector<Integer>{312}, "3 1 2 reads 312");
    c.expect(gapped == std::vector<Integer>{3012}, "3 _ 1 2 reads 3012");
    c.expect(gap::parse("3 _ 1 2", 10).digits() == gap::parse("3 1 2", 10).digits(), "same digit sequence");

    std::size_t mismatches = 0;
    for (int i = 0; i < 500; ++i) {
        std::int64_t base = i % 2 == 0 ? 10 : 60;
        oracle::Tokens tokens;
        int length = static_cast<int>(oracle::uniform(1, 6));
        for (int k = 0; k < length; ++k) {
            bool gap = k > 0 && k + 1 < length && tokens.back() != 0 && oracle::uniform(0, 2) == 0;
            tokens.push_back(gap ? 0 : oracle::uniform(1, base - 1));
        }
        int W = static_cast<int>(oracle::uniform(1, 3));
        int T = static_cast<int>(oracle::uniform(0, 3));
        auto got = gap::interpretations(gap::parse(oracle::tokens_text(tokens), base), {W, T});
        auto expected = oracle::readings(tokens, base, W, T);
        std::set<std::string> got_set;
        for (const auto& g : got)
            got_set.insert(g.to_string());
        if (got.size() != expected.size() || got_set != expected)
            ++mismatches;
    }
    c.expect(mismatches == 0, std::to_string(mismatches) + " of 500 numerals disagree with the oracle");
}

void aryabhata_fidelity(Check& c) {
    c.expect(aryabhata::parse("ग") == Integer(3), "ग = 3");
    c.expect(aryabhata::parse("गु") == Integer(30000), "गु = 30000");
    c.expect(aryabhata::parse("गुण") == Integer(30015), "गुण = 30015");
    const auto& cons = aryabhata::consonants();
    c.expect(cons.size() == 33, "33 consonants");
    for (std::size_t i = 0; i < cons.size() && i < oracle::aryabhata_consonants().size(); ++i)
        c.expect(cons[i].value == oracle::aryabhata_consonants()[i].second, "value of " + cons[i].translit);
    const auto& vowels = aryabhata::vowels();
    c.expect(vowels.size() == 9, "9 vowels");
    for (std::size_t i = 0; i < vowels.size(); ++i)
        c.expect(vowels[i].place_exponent == 2 * i, "place of " + vowels[i].translit);
    std::size_t failures = 0;
    for (std::int64_t n = 1; n <= 1000000; ++n)
        if (aryabhata::parse(aryabhata::render_text(n)) != Integer(n))
            ++failures;
    for (unsigned k = 0; k <= 8; ++k) {
        Integer p = Integer::pow(10, 2 * k);
        if (aryabhata::parse(aryabhata::render_text(p)) != p ||
            aryabhata::parse(aryabhata::render_text(p, Script::Native)) != p)
            ++failures;
    }
    c.expect(failures == 0, std::to_string(failures) + " round-trip failures");
}

void brahmagupta_rules(Check& c) {
    const auto B = RuleSet::Brahmagupta628;
    for (int i = 0; i < 100; ++i) {
        Rational a = random_rational();
        const std::string s = a.to_string();
        c.no_throw(
            [&] {
                c.expect(eval_binary(BinaryOp::Add, Finite{a}, Finite{0}, B).value == Value(Finite{a}), s + " + 0");
                c.expect(eval_binary(BinaryOp::Sub, Finite{a}, Finite{0}, B).value == Value(Finite{a}), s + " - 0");
                c.expect(eval_binary(BinaryOp::Mul, Finite{a}, Finite{0}, B).value == Value(Finite{0}), s + " * 0");
                c.expect(eval_binary(BinaryOp::Div, Finite{a}, Finite{0}, B).value == Value(Unresolved{a}),
                         s + " / 0");
                c.expect(zero_from(Finite{a}).value == Value(Finite{0}), "zero from " + s);
            },
            "rules for " + s);
    }
    c.expect(eval_binary(BinaryOp::Div, Finite{0}, Finite{0}, B).value == Value(Finite{0}), "0 / 0 = 0");
    c.expect(zero_from(Finite{0}).value == Value(Finite{0}), "zero from 0");
}

void fortune_debt(Check& c) {
    using K = SignedQuantity::Kind;
    auto sample = [](K k, std::int64_t m) {
        return k == K::Fortune ? SignedQuantity::fortune(m)
             : k == K::Debt    ? SignedQuantity::debt(m)
                               : SignedQuantity::zero();
    };
    const std::pair<std::pair<K, K>, const char*> sub_cases[] = {
        {{K::Debt, K::Zero}, "FD-1"}, {{K::Fortune, K::Zero}, "FD-2"}, {{K::Zero, K::Zero}, "FD-3"},
        {{K::Zero, K::Debt}, "FD-4"}, {{K::Zero, K::Fortune}, "FD-5"},
    };
    const std::pair<std::pair<K, K>, const char*> mul_cases[] = {
        {{K::Zero, K::Debt}, "FD-6"},      {{K::Zero, K::Fortune}, "FD-6"},  {{K::Debt, K::Zero}, "FD-6"},
        {{K::Fortune, K::Zero}, "FD-6"},   {{K::Zero, K::Zero}, "FD-7"},     {{K::Fortune, K::Fortune}, "FD-8"},
        {{K::Debt, K::Debt}, "FD-9"},      {{K::Debt, K::Fortune}, "FD-10"}, {{K::Fortune, K::Debt}, "FD-11"},
    };
    std::set<std::string> fired;
    for (auto [kinds, id] : sub_cases) {
        auto r = signed_op(BinaryOp::Sub, sample(kinds.first, 4), sample(kinds.second, 3));
        c.expect(r.trace.size() == 1 && r.trace[0].rule_id == id, std::string("subtraction fires ") + id);
        fired.insert(r.trace.at(0).rule_id);
    }
    for (auto [kinds, id] : mul_cases) {
        auto r = signed_op(BinaryOp::Mul, sample(kinds.first, 4), sample(kinds.second, 2));
        c.expect(r.trace.size() == 1 && r.trace[0].rule_id == id, std::string("product fires ") + id);
        fired.insert(r.trace.at(0).rule_id);
        if (kinds.first != K::Zero && kinds.second != K::Zero) {
            auto q = signed_op(BinaryOp::Div, sample(kinds.first, 4), sample(kinds.second, 2));
            c.expect(q.trace.size() == 1 && q.trace[0].rule_id == id, std::string("quotient fires ") + id);
        }
    }
    for (int k = 1; k <= 11; ++k)
        c.expect(fired.count("FD-" + std::to_string(k)) == 1, "FD-" + std::to_string(k) + " fired");

    std::size_t failures = 0;
    for (int x = -100; x <= 100; ++x) {
        for (int y = -100; y <= 100; ++y) {
            auto a = SignedQuantity::from_integer(x);
            auto b = SignedQuantity::from_integer(y);
            failures += signed_op(BinaryOp::Add, a, b).value.to_integer() != Integer(x + y);
            failures += signed_op(BinaryOp::Sub, a, b).value.to_integer() != Integer(x - y);
            failures += signed_op(BinaryOp::Mul, a, b).value.to_integer() != Integer(x * y);
            if (y != 0 && x % y == 0)
                failures += signed_op(BinaryOp::Div, a, b).value.to_integer() != Integer(x / y);
        }
    }
    c.expect(failures == 0, std::to_string(failures) + " disagreements with integer arithmetic");
}

void bhaskara_rules(Check& c) {
    const auto H = RuleSet::Bhaskara1150;
    c.expect(eval_unary(UnaryOp::Square, Finite{0}, H).value == Value(Finite{0}), "0^2 = 0");
    c.expect(eval_unary(UnaryOp::Sqrt, Finite{0}, H).value == Value(Finite{0}), "sqrt 0 = 0");
    c.expect(eval_unary(UnaryOp::Cube, Finite{0}, H).value == Value(Finite{0}), "0^3 = 0");
    c.expect(eval_unary(UnaryOp::Cbrt, Finite{0}, H).value == Value(Finite{0}), "cbrt 0 = 0");
    for (int i = 0; i < 100; ++i) {
        Rational a = random_rational();
        const std::string s = a.to_string();
        c.no_throw(
            [&] {
                c.expect(eval_binary(BinaryOp::Div, Finite{a}, Finite{0}, H).value == Value(Khahara{}), s + " / 0");
                auto product = eval_binary(BinaryOp::Mul, Finite{a}, Finite{0}, H);
                c.expect(display(product.value) == "0", s + " * 0 displays 0");
                c.expect(eval_binary(BinaryOp::Div, product.value, Finite{0}, H).value == Value(Finite{a}),
                         "(" + s + " * 0) / 0");
                c.expect(eval_binary(BinaryOp::Add, Khahara{}, Finite{a}, H).value == Value(Khahara{}),
                         "khahara + " + s);
                c.expect(eval_binary(BinaryOp::Sub, Khahara{}, Finite{a}, H).value == Value(Khahara{}),
                         "khahara - " + s);
            },
            "rules for " + s);
    }
}

void limit_tables(Check& c) {
    auto rows = pedagogy::printed_reciprocal_table();
    c.expect(rows.size() == 4, "four printed rows");
    if (rows.size() == 4) {
        c.expect(!rows[0].erratum() && rows[0].exact == Rational(10), "1/.1 = 10");
        c.expect(!rows[1].erratum() && rows[1].exact == Rational(1000), "1/.001 = 1000");
        c.expect(rows[2].erratum() && rows[2].exact == Rational(100000), "1/.00001 corrected to 100000");
        c.expect(rows[3].erratum() && rows[3].exact == Rational(Integer::pow(10, 10)),
                 "1/.0000000001 corrected to 10000000000");
    }
    for (const auto& r : pedagogy::quotient_rows(pedagogy::printed_shrinking_terms(), 0))
        c.expect(r.output == Value(Finite{0}), "0 / " + r.denominator.to_string() + " = 0");
    for (const auto& r : pedagogy::self_quotient_rows(pedagogy::printed_shrinking_terms()))
        c.expect(r.output == Value(Finite{1}), "x / x = 1 at " + r.denominator.to_string());

    int flagged = 0;
    for (const auto& e : catalog::errata())
        flagged += e.id.rfind("LIMIT", 0) == 0;
    c.expect(flagged == 2, "two table errata listed");

    std::ostringstream out, err;
    int code = cli::run({"demo", "limits"}, out, err);
    c.expect(code == 0, "demo limits exits 0");
    c.expect(out.str().find("printed 10000, exact 100000") != std::string::npos, "errata output flags 1/.00001");
    c.expect(out.str().find("printed 1000000000, exact 10000000000") != std::string::npos,
             "errata output flags 1/.0000000001");
}

void pedagogy_checks(Check& c) {
    c.expect(pedagogy::fibonacci(15) ==
                 std::vector<Integer>{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377},
             "first 15 Fibonacci numbers");
    bool odd = false;
    for (std::int64_t r = 1; r <= 10000; ++r)
        odd = odd || !(pedagogy::hilbert_infinite(r) % Integer(2)).is_zero();
    c.expect(!odd, "no odd room in the image of n -> 2n");
    c.expect(pedagogy::divisors_of_sixty() == std::vector<Integer>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60},
             "divisors of 60");
}

void cross_system(Check& c) {
    const auto dec = NumeralSystem::hindu_arabic();
    const ConvertOptions exact{.gap_bounds = {1, 0}};
    const std::vector<NumeralSystem> systems{NumeralSystem::roman(),     NumeralSystem::greek(),
                                             NumeralSystem::gap_positional(10),
                                             NumeralSystem::gap_positional(60),
                                             NumeralSystem::aryabhata(), NumeralSystem::brahmi()};
    std::size_t failures = 0, checked = 0;
    for (int i = 0; i < 10000; ++i) {
        auto n = std::to_string(oracle::uniform(1, 100000));
        for (const auto& s : systems) {
            std::string text;
            try {
                text = encode(Integer::from_decimal(n), s, exact);
            } catch (const RangeError&) {
                continue;
            }
            ++checked;
            try {
                if (decode(text, s, exact).to_string() != n)
                    ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    c.expect(checked > 10000, "enough representable cases");
    c.expect(failures == 0, std::to_string(failures) + " of " + std::to_string(checked) + " conversions differ");
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Roman fidelity", roman_fidelity},
        {2, "Roman round trip", roman_round_trip},
        {3, "Greek fidelity", greek_fidelity},
        {4, "Babylonian ambiguity", babylonian_ambiguity},
        {5, "Aryabhata fidelity", aryabhata_fidelity},
        {6, "Brahmagupta rules", brahmagupta_rules},
        {7, "Fortune/debt rules", fortune_debt},
        {8, "Bhaskara rules", bhaskara_rules},
        {9, "Limit tables", limit_tables},
        {10, "Pedagogy", pedagogy_checks},
        {11, "Cross-system consistency", cross_system},
    };

    auto suite_start = Clock::now();
    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        auto start = Clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("unexpected error: ") + e.what());
        }
        if (criterion.number == 11)
            check.expect(seconds_since(suite_start) < 60.0, "acceptance suite under 60 s");
        bool ok = check.failures.empty();
        failed += !ok;
        std::printf("%s  %2d  %-26s %7zu checks  %6.2f s\n", ok ? "PASS" : "FAIL", criterion.number,
                    criterion.name, check.count, seconds_since(start));
        for (std::size_t i = 0; i < check.failures.size() && i < 5; ++i)
            std::printf("          - %s\n", check.failures[i].c_str());
    }
    std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                seconds_since(suite_start));
    return failed == 0 ? 0 : 1;
}
