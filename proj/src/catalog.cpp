#include "numerals/catalog.hpp"

#include <array>

namespace numerals::catalog {

namespace {

using S = Source;

constexpr std::array kRules{
    Rule{"BG-0", S::Brahmagupta628, "zero is a number minus itself: a - a = 0"},
    Rule{"BG-i", S::Brahmagupta628, "a + 0 = a"},
    Rule{"BG-ii", S::Brahmagupta628, "a - 0 = a"},
    Rule{"BG-iii", S::Brahmagupta628, "a * 0 = 0"},
    Rule{"BG-iv", S::Brahmagupta628, "a / 0 = a/0, left unresolved"},
    Rule{"BG-v", S::Brahmagupta628, "0 / 0 = 0"},

    Rule{"FD-1", S::FortuneDebt, "debt - zero = debt"},
    Rule{"FD-2", S::FortuneDebt, "fortune - zero = fortune"},
    Rule{"FD-3", S::FortuneDebt, "zero - zero = zero"},
    Rule{"FD-4", S::FortuneDebt, "zero - debt = fortune"},
    Rule{"FD-5", S::FortuneDebt, "zero - fortune = debt"},
    Rule{"FD-6", S::FortuneDebt, "zero * debt = zero * fortune = zero"},
    Rule{"FD-7", S::FortuneDebt, "zero * zero = zero"},
    Rule{"FD-8", S::FortuneDebt, "fortune * fortune and fortune / fortune are fortunes"},
    Rule{"FD-9", S::FortuneDebt, "debt * debt and debt / debt are fortunes"},
    Rule{"FD-10", S::FortuneDebt, "debt * fortune and debt / fortune are debts"},
    Rule{"FD-11", S::FortuneDebt, "fortune * debt and fortune / debt are debts"},

    Rule{"BH-i", S::Bhaskara1150, "a + 0 = a - 0 = a"},
    Rule{"BH-ii", S::Bhaskara1150, "0^2 = 0"},
    Rule{"BH-iii", S::Bhaskara1150, "sqrt(0) = 0"},
    Rule{"BH-iv", S::Bhaskara1150, "0^3 = 0"},
    Rule{"BH-v", S::Bhaskara1150, "cbrt(0) = 0"},
    Rule{"BH-vi", S::Bhaskara1150, "a / 0 = khahara for a != 0"},
    Rule{"BH-vii", S::Bhaskara1150, "a * 0 = 0, with the factor a kept pending"},
    Rule{"BH-viii", S::Bhaskara1150, "(a * 0) / 0 = a"},
    Rule{"BH-khahara", S::Bhaskara1150, "khahara + a = khahara - a = khahara"},

    Rule{"IN-collapse", S::Interpretation, "a pending zero product is taken as plain 0 outside * and /"},
    Rule{"IN-propagate", S::Interpretation, "(a * 0) * b = (a*b) * 0 and (a * 0) / b = (a/b) * 0 for b != 0"},
    Rule{"IN-undefined", S::Interpretation, "the selected rule set does not define this operation"},

    Rule{"MOD-div0", S::Modern, "division by zero is undefined"},
    Rule{"MOD-nonfinite", S::Modern, "only finite rationals are numbers"},
    Rule{"MOD-domain", S::Modern, "roots are taken only of exact squares / cubes; no square root of a negative"},

    Rule{"EX-literal", S::Exact, "a literal evaluates to itself"},
    Rule{"EX-add", S::Exact, "exact rational sum"},
    Rule{"EX-sub", S::Exact, "exact rational difference"},
    Rule{"EX-mul", S::Exact, "exact rational product"},
    Rule{"EX-div", S::Exact, "exact rational quotient"},
    Rule{"EX-neg", S::Exact, "negation"},
    Rule{"EX-pow", S::Exact, "exact square or cube"},
    Rule{"EX-root", S::Exact, "exact square or cube root"},
};

constexpr std::array kErrata{
    Erratum{"BH-i", "a ± 0 = 0", "a ± 0 = a",
            "the printed form contradicts BH-vii/BH-viii and BG-i/BG-ii; implemented as a ± 0 = a"},
    Erratum{"LIMIT-3", "1/.00001 = 10000", "1/.00001 = 100000", "exact rational division"},
    Erratum{"LIMIT-4", "1/.0000000001 = 1000000000", "1/.0000000001 = 10000000000", "exact rational division"},
};

}  // namespace

std::string_view to_string(Source source) {
    switch (source) {
    case S::Brahmagupta628: return "Brahmagupta628";
    case S::FortuneDebt: return "FortuneDebt";
    case S::Bhaskara1150: return "Bhaskara1150";
    case S::Interpretation: return "Interpretation";
    case S::Modern: return "Modern";
    case S::Exact: return "Exact";
    }
    return "?";
}

std::span<const Rule> rules() { return kRules; }

const Rule* find(std::string_view id) {
    for (const auto& r : kRules)
        if (r.id == id)
            return &r;
    return nullptr;
}

std::span<const Erratum> errata() { return kErrata; }

}  // namespace numerals::catalog
