#include "numerals/value.hpp"

#include "numerals/errors.hpp"

namespace numerals {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string grouped(const Rational& r) {
    return r.is_integer() ? r.to_string() : "(" + r.to_string() + ")";
}

}  // namespace

Value normalize(const Value& v) {
    if (const auto* zp = std::get_if<ZeroProduct>(&v); zp && zp->factor.is_zero())
        return Finite{Rational{}};
    return v;
}

std::string display(const Value& v) {
    return std::visit(overloaded{
                          [](const Finite& f) { return f.value.to_string(); },
                          [](const Khahara&) { return std::string("khahara (∞)"); },
                          [](const Unresolved& u) { return grouped(u.numerator) + "/0 (unresolved)"; },
                          [](const ZeroProduct&) { return std::string("0"); },
                      },
                      v);
}

std::string describe(const Value& v) {
    return std::visit(overloaded{
                          [](const Finite& f) { return "Finite(" + f.value.to_string() + ")"; },
                          [](const Khahara&) { return std::string("Khahara"); },
                          [](const Unresolved& u) { return "Unresolved(" + u.numerator.to_string() + ")"; },
                          [](const ZeroProduct& z) { return "ZeroProduct(" + z.factor.to_string() + ")"; },
                      },
                      v);
}

std::string_view to_string(RuleSet rules) {
    switch (rules) {
    case RuleSet::Brahmagupta628: return "Brahmagupta628";
    case RuleSet::Bhaskara1150: return "Bhaskara1150";
    case RuleSet::Modern: return "Modern";
    }
    return "?";
}

RuleSet parse_rule_set(std::string_view name) {
    if (name == "brahmagupta" || name == "Brahmagupta628")
        return RuleSet::Brahmagupta628;
    if (name == "bhaskara" || name == "Bhaskara1150")
        return RuleSet::Bhaskara1150;
    if (name == "modern" || name == "Modern")
        return RuleSet::Modern;
    throw ParseError("unknown rule set '" + std::string(name) + "'");
}

}  // namespace numerals
