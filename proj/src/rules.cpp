#include "numerals/rules.hpp"

#include "numerals/errors.hpp"

namespace numerals {

namespace {

template <class E>
[[noreturn]] void fail(std::string_view rule, const std::string& message) {
    throw E("[" + std::string(rule) + "] " + message);
}

std::string show(const Rational& r) { return r.is_integer() ? r.to_string() : "(" + r.to_string() + ")"; }

std::string show(BinaryOp op, const Value& a, const Value& b) {
    return describe(a) + " " + std::string(symbol(op)) + " " + describe(b);
}

// FD-8 .. FD-11 for a product or quotient of two non-zero quantities.
std::string_view sign_rule(int lhs_sign, int rhs_sign) {
    if (lhs_sign > 0)
        return rhs_sign > 0 ? "FD-8" : "FD-11";
    return rhs_sign > 0 ? "FD-10" : "FD-9";
}

Rational exact(BinaryOp op, const Rational& a, const Rational& b) {
    switch (op) {
    case BinaryOp::Add: return a + b;
    case BinaryOp::Sub: return a - b;
    case BinaryOp::Mul: return a * b;
    case BinaryOp::Div: return a / b;
    }
    return {};
}

std::string_view exact_rule(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: return "EX-add";
    case BinaryOp::Sub: return "EX-sub";
    case BinaryOp::Mul: return "EX-mul";
    case BinaryOp::Div: return "EX-div";
    }
    return "EX-add";
}

class Stepper {
public:
    void note(std::string_view rule, std::string description) {
        trace_.push_back({std::string(rule), std::move(description)});
    }
    Evaluation done(Value v) { return {normalize(v), std::move(trace_)}; }

private:
    RuleTrace trace_;
};

Evaluation modern_binary(BinaryOp op, const Value& lhs, const Value& rhs) {
    const auto* a = std::get_if<Finite>(&lhs);
    const auto* b = std::get_if<Finite>(&rhs);
    if (!a || !b)
        fail<DomainError>("MOD-nonfinite", show(op, lhs, rhs) + ": only finite rationals are numbers");
    if (op == BinaryOp::Div && b->value.is_zero())
        fail<DivisionByZero>("MOD-div0", show(op, lhs, rhs) + " is undefined");
    Stepper s;
    Rational r = exact(op, a->value, b->value);
    s.note(exact_rule(op), show(a->value) + " " + std::string(symbol(op)) + " " + show(b->value) + " = " + r.to_string());
    return s.done(Finite{r});
}

Evaluation brahmagupta_binary(BinaryOp op, const Value& lhs, const Value& rhs) {
    if (std::holds_alternative<Unresolved>(lhs) || std::holds_alternative<Unresolved>(rhs))
        fail<UndefinedBySource>("BG-iv", show(op, lhs, rhs) + ": a/0 was left unresolved and no rule continues from it");
    const auto* fa = std::get_if<Finite>(&lhs);
    const auto* fb = std::get_if<Finite>(&rhs);
    if (!fa || !fb)
        fail<UndefinedBySource>("IN-undefined", show(op, lhs, rhs) + " has no counterpart in Brahmagupta628");

    const Rational& a = fa->value;
    const Rational& b = fb->value;
    Stepper s;
    switch (op) {
    case BinaryOp::Add:
        if (b.is_zero()) {
            s.note("BG-i", show(a) + " + 0 = " + a.to_string());
            return s.done(Finite{a});
        }
        if (a.is_zero()) {
            s.note("BG-i", "0 + " + show(b) + " = " + b.to_string());
            return s.done(Finite{b});
        }
        break;
    case BinaryOp::Sub:
        if (b.is_zero()) {
            s.note("BG-ii", show(a) + " - 0 = " + a.to_string());
            s.note(a.sign() < 0 ? "FD-1" : a.sign() > 0 ? "FD-2" : "FD-3",
                   a.sign() < 0 ? "a debt minus zero stays a debt"
                   : a.sign() > 0 ? "a fortune minus zero stays a fortune"
                                  : "zero minus zero is zero");
            return s.done(Finite{a});
        }
        if (a.is_zero()) {
            bool debt = b.sign() < 0;
            s.note(debt ? "FD-4" : "FD-5", "0 - " + show(b) + " = " + (-b).to_string() +
                                               (debt ? ", a fortune" : ", a debt"));
            return s.done(Finite{-b});
        }
        break;
    case BinaryOp::Mul:
        if (a.is_zero() || b.is_zero()) {
            s.note("BG-iii", show(a) + " * " + show(b) + " = 0");
            s.note(a.is_zero() && b.is_zero() ? "FD-7" : "FD-6", "a product with zero is zero");
            return s.done(Finite{Rational{}});
        }
        s.note(sign_rule(a.sign(), b.sign()), show(a) + " * " + show(b) + " = " + (a * b).to_string());
        return s.done(Finite{a * b});
    case BinaryOp::Div:
        if (b.is_zero()) {
            if (a.is_zero()) {
                s.note("BG-v", "0 / 0 = 0");
                return s.done(Finite{Rational{}});
            }
            s.note("BG-iv", show(a) + " / 0 retained unresolved");
            return s.done(Unresolved{a});
        }
        if (!a.is_zero()) {
            s.note(sign_rule(a.sign(), b.sign()), show(a) + " / " + show(b) + " = " + (a / b).to_string());
            return s.done(Finite{a / b});
        }
        break;
    }
    Rational r = exact(op, a, b);
    s.note(exact_rule(op), show(a) + " " + std::string(symbol(op)) + " " + show(b) + " = " + r.to_string());
    return s.done(Finite{r});
}

Evaluation bhaskara_binary(BinaryOp op, const Value& lhs, const Value& rhs) {
    if (std::holds_alternative<Unresolved>(lhs) || std::holds_alternative<Unresolved>(rhs))
        fail<UndefinedBySource>("IN-undefined", show(op, lhs, rhs) + ": unresolved a/0 does not arise under Bhaskara1150");

    const bool lk = std::holds_alternative<Khahara>(lhs);
    const bool rk = std::holds_alternative<Khahara>(rhs);
    Stepper s;

    if (op == BinaryOp::Add || op == BinaryOp::Sub) {
        if (lk && rk)
            fail<UndefinedBySource>("IN-undefined", show(op, lhs, rhs) + ": khahara combined with khahara is not defined");
        if (rk && op == BinaryOp::Sub)
            fail<UndefinedBySource>("IN-undefined", show(op, lhs, rhs) + ": subtracting khahara is not defined");
        if (lk || rk) {
            s.note("BH-khahara", std::string(lk ? "khahara " : "something ") + std::string(symbol(op)) +
                                     (lk ? " something" : " khahara") + " is unchanged khahara");
            return s.done(Khahara{});
        }
        auto collapse = [&](const Value& v) -> Rational {
            if (std::holds_alternative<ZeroProduct>(v)) {
                s.note("IN-collapse", describe(v) + " taken as 0 under " + std::string(symbol(op)));
                return Rational{};
            }
            return std::get<Finite>(v).value;
        };
        Rational a = collapse(lhs);
        Rational b = collapse(rhs);
        if (b.is_zero()) {
            s.note("BH-i", show(a) + " " + std::string(symbol(op)) + " 0 = " + a.to_string());
            return s.done(Finite{a});
        }
        if (a.is_zero() && op == BinaryOp::Add) {
            s.note("BH-i", "0 + " + show(b) + " = " + b.to_string());
            return s.done(Finite{b});
        }
        Rational r = exact(op, a, b);
        s.note(exact_rule(op), show(a) + " " + std::string(symbol(op)) + " " + show(b) + " = " + r.to_string());
        return s.done(Finite{r});
    }

    if (lk || rk)
        fail<UndefinedBySource>("IN-undefined", show(op, lhs, rhs) + ": only addition and subtraction act on khahara");

    if (op == BinaryOp::Mul) {
        const auto* lz = std::get_if<ZeroProduct>(&lhs);
        const auto* rz = std::get_if<ZeroProduct>(&rhs);
        if (lz && rz) {
            s.note("IN-collapse", describe(rhs) + " taken as 0 as a multiplier");
            s.note("IN-propagate", describe(lhs) + " * 0 leaves no factor");
            return s.done(Finite{Rational{}});
        }
        if (lz || rz) {
            const Rational& factor = lz ? lz->factor : rz->factor;
            const Rational& other = std::get<Finite>(lz ? rhs : lhs).value;
            Rational f = factor * other;
            s.note("IN-propagate", show(op, lhs, rhs) + " = ZeroProduct(" + f.to_string() + ")");
            return s.done(ZeroProduct{f});
        }
        const Rational& a = std::get<Finite>(lhs).value;
        const Rational& b = std::get<Finite>(rhs).value;
        if (a.is_zero() || b.is_zero()) {
            const Rational& factor = b.is_zero() ? a : b;
            s.note("BH-vii", show(factor) + " * 0 = 0, factor " + factor.to_string() + " kept");
            return s.done(ZeroProduct{factor});
        }
        s.note("EX-mul", show(a) + " * " + show(b) + " = " + (a * b).to_string());
        return s.done(Finite{a * b});
    }

    // Division.
    if (std::holds_alternative<ZeroProduct>(rhs))
        fail<UndefinedBySource>("IN-undefined", show(op, lhs, rhs) + ": dividing by a pending zero product is not defined");
    const Rational& b = std::get<Finite>(rhs).value;
    if (const auto* zp = std::get_if<ZeroProduct>(&lhs)) {
        if (b.is_zero()) {
            s.note("BH-viii", "(" + zp->factor.to_string() + " * 0) / 0 = " + zp->factor.to_string());
            return s.done(Finite{zp->factor});
        }
        Rational f = zp->factor / b;
        s.note("IN-propagate", show(op, lhs, rhs) + " = ZeroProduct(" + f.to_string() + ")");
        return s.done(ZeroProduct{f});
    }
    const Rational& a = std::get<Finite>(lhs).value;
    if (b.is_zero()) {
        if (a.is_zero())
            fail<UndefinedBySource>("BH-vi", "0 / 0 with no pending factor is not defined under Bhaskara1150");
        s.note("BH-vi", show(a) + " / 0 = khahara");
        return s.done(Khahara{});
    }
    s.note("EX-div", show(a) + " / " + show(b) + " = " + (a / b).to_string());
    return s.done(Finite{a / b});
}

std::string_view zero_power_rule(UnaryOp op) {
    switch (op) {
    case UnaryOp::Square: return "BH-ii";
    case UnaryOp::Sqrt: return "BH-iii";
    case UnaryOp::Cube: return "BH-iv";
    case UnaryOp::Cbrt: return "BH-v";
    case UnaryOp::Negate: return "EX-neg";
    }
    return "EX-neg";
}

Rational rational_root(const Rational& a, unsigned k, UnaryOp op, RuleSet rules) {
    auto num = exact_root(a.numerator(), k);
    auto den = exact_root(a.denominator(), k);
    if (!num || !den) {
        std::string rule = rules == RuleSet::Modern ? "MOD-domain" : "IN-undefined";
        fail<DomainError>(rule, std::string(symbol(op)) + "(" + a.to_string() + ") is not an exact rational");
    }
    return Rational(*num, *den);
}

}  // namespace

std::string_view symbol(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    }
    return "?";
}

std::string_view symbol(UnaryOp op) {
    switch (op) {
    case UnaryOp::Square: return "^2";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Cube: return "^3";
    case UnaryOp::Cbrt: return "cbrt";
    case UnaryOp::Negate: return "neg";
    }
    return "?";
}

Evaluation eval_binary(BinaryOp op, const Value& lhs, const Value& rhs, RuleSet rules) {
    switch (rules) {
    case RuleSet::Modern: return modern_binary(op, lhs, rhs);
    case RuleSet::Brahmagupta628: return brahmagupta_binary(op, lhs, rhs);
    case RuleSet::Bhaskara1150: return bhaskara_binary(op, lhs, rhs);
    }
    fail<UndefinedBySource>("IN-undefined", "unknown rule set");
}

Evaluation eval_unary(UnaryOp op, const Value& v, RuleSet rules) {
    Stepper s;
    Rational a;
    if (const auto* f = std::get_if<Finite>(&v)) {
        a = f->value;
    } else if (rules == RuleSet::Modern) {
        fail<DomainError>("MOD-nonfinite", std::string(symbol(op)) + " " + describe(v) + ": only finite rationals are numbers");
    } else if (rules == RuleSet::Bhaskara1150 && std::holds_alternative<ZeroProduct>(v)) {
        s.note("IN-collapse", describe(v) + " taken as 0 under " + std::string(symbol(op)));
    } else {
        fail<UndefinedBySource>("IN-undefined", std::string(symbol(op)) + " " + describe(v) + " is not defined by " +
                                                    std::string(to_string(rules)));
    }

    if (a.is_zero() && rules == RuleSet::Bhaskara1150 && op != UnaryOp::Negate) {
        s.note(zero_power_rule(op), std::string(symbol(op)) + " 0 = 0");
        return s.done(Finite{Rational{}});
    }

    Rational r;
    switch (op) {
    case UnaryOp::Negate:
        r = -a;
        s.note("EX-neg", "-(" + a.to_string() + ") = " + r.to_string());
        break;
    case UnaryOp::Square:
        r = a * a;
        s.note("EX-pow", show(a) + "^2 = " + r.to_string());
        break;
    case UnaryOp::Cube:
        r = a * a * a;
        s.note("EX-pow", show(a) + "^3 = " + r.to_string());
        break;
    case UnaryOp::Sqrt:
        if (a.sign() < 0) {
            std::string rule = rules == RuleSet::Modern ? "MOD-domain" : "IN-undefined";
            fail<DomainError>(rule, "sqrt(" + a.to_string() + "): no square root of a negative quantity");
        }
        r = rational_root(a, 2, op, rules);
        s.note("EX-root", "sqrt(" + a.to_string() + ") = " + r.to_string());
        break;
    case UnaryOp::Cbrt:
        r = rational_root(a, 3, op, rules);
        s.note("EX-root", "cbrt(" + a.to_string() + ") = " + r.to_string());
        break;
    }
    return s.done(Finite{r});
}

Evaluation zero_from(const Value& a) {
    const auto* f = std::get_if<Finite>(&a);
    if (!f)
        fail<UndefinedBySource>("BG-0", "zero is defined from a finite quantity, not " + describe(a));
    Stepper s;
    Rational r = f->value - f->value;
    s.note("BG-0", show(f->value) + " - " + show(f->value) + " = " + r.to_string());
    return s.done(Finite{r});
}

SignedQuantity SignedQuantity::fortune(Integer magnitude) {
    if (!magnitude.is_positive())
        throw RangeError("a fortune has a positive magnitude");
    return SignedQuantity(Kind::Fortune, std::move(magnitude));
}

SignedQuantity SignedQuantity::debt(Integer magnitude) {
    if (!magnitude.is_positive())
        throw RangeError("a debt has a positive magnitude");
    return SignedQuantity(Kind::Debt, std::move(magnitude));
}

SignedQuantity SignedQuantity::from_integer(const Integer& n) {
    if (n.is_zero())
        return zero();
    return n.is_positive() ? fortune(n) : debt(-n);
}

Integer SignedQuantity::to_integer() const {
    switch (kind_) {
    case Kind::Fortune: return magnitude_;
    case Kind::Debt: return -magnitude_;
    case Kind::Zero: return 0;
    }
    return 0;
}

std::string SignedQuantity::to_string() const {
    switch (kind_) {
    case Kind::Fortune: return "fortune " + magnitude_.to_string();
    case Kind::Debt: return "debt " + magnitude_.to_string();
    case Kind::Zero: return "zero";
    }
    return "?";
}

SignedEvaluation signed_op(BinaryOp op, const SignedQuantity& a, const SignedQuantity& b) {
    using K = SignedQuantity::Kind;
    const Integer x = a.to_integer();
    const Integer y = b.to_integer();
    const std::string shown = a.to_string() + " " + std::string(symbol(op)) + " " + b.to_string();
    RuleTrace trace;
    auto result = [&](std::string_view rule, const Integer& n) {
        SignedQuantity q = SignedQuantity::from_integer(n);
        trace.push_back({std::string(rule), shown + " = " + q.to_string()});
        return SignedEvaluation{q, std::move(trace)};
    };

    switch (op) {
    case BinaryOp::Add:
        return result("EX-add", x + y);
    case BinaryOp::Sub:
        if (b.kind() == K::Zero) {
            switch (a.kind()) {
            case K::Debt: return result("FD-1", x);
            case K::Fortune: return result("FD-2", x);
            case K::Zero: return result("FD-3", x);
            }
        }
        if (a.kind() == K::Zero)
            return result(b.kind() == K::Debt ? "FD-4" : "FD-5", -y);
        return result("EX-sub", x - y);
    case BinaryOp::Mul:
        if (a.kind() == K::Zero && b.kind() == K::Zero)
            return result("FD-7", 0);
        if (a.kind() == K::Zero || b.kind() == K::Zero)
            return result("FD-6", 0);
        return result(sign_rule(x.sign(), y.sign()), x * y);
    case BinaryOp::Div:
        if (b.kind() == K::Zero)
            fail<DivisionByZero>("MOD-div0", shown + ": a fortune/debt quotient needs a non-zero divisor");
        if (a.kind() == K::Zero)
            return result("EX-div", 0);
        if (!(x % y).is_zero())
            throw InexactQuotient(shown + " does not divide exactly");
        return result(sign_rule(x.sign(), y.sign()), x / y);
    }
    throw UndefinedBySource("unknown operation");
}

}  // namespace numerals
