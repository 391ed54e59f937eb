#include "numerals/expression.hpp"

#include <cctype>

#include "numerals/errors.hpp"

namespace numerals {

Expression Expression::literal(Value v, std::optional<std::size_t> offset) {
    return Expression(Literal{std::move(v)}, offset);
}

Expression Expression::unary(UnaryOp op, Expression operand, std::optional<std::size_t> offset) {
    return Expression(Unary{op, std::make_unique<Expression>(std::move(operand))}, offset);
}

Expression Expression::binary(BinaryOp op, Expression lhs, Expression rhs, std::optional<std::size_t> offset) {
    return Expression(
        Binary{op, std::make_unique<Expression>(std::move(lhs)), std::make_unique<Expression>(std::move(rhs))}, offset);
}

std::string Expression::to_string() const {
    if (const auto* l = std::get_if<Literal>(&node_))
        return display(l->value);
    if (const auto* u = std::get_if<Unary>(&node_)) {
        switch (u->op) {
        case UnaryOp::Square: return u->operand->to_string() + "^2";
        case UnaryOp::Cube: return u->operand->to_string() + "^3";
        case UnaryOp::Negate: return "-" + u->operand->to_string();
        default: return std::string(symbol(u->op)) + "(" + u->operand->to_string() + ")";
        }
    }
    const auto& b = std::get<Binary>(node_);
    return "(" + b.lhs->to_string() + " " + std::string(symbol(b.op)) + " " + b.rhs->to_string() + ")";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse() {
        Expression e = expr();
        skip_space();
        if (pos_ != text_.size())
            error("unexpected '" + std::string(text_.substr(pos_, 1)) + "'");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        throw ParseError("expression offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    // Consumes `token` if it is next (after whitespace).
    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_).starts_with(token)) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    Expression expr() {
        Expression lhs = term();
        while (true) {
            skip_space();
            std::size_t at = pos_;
            if (accept("+"))
                lhs = Expression::binary(BinaryOp::Add, std::move(lhs), term(), at);
            else if (accept("-") || accept("−"))
                lhs = Expression::binary(BinaryOp::Sub, std::move(lhs), term(), at);
            else
                return lhs;
        }
    }

    Expression term() {
        Expression lhs = unary();
        while (true) {
            skip_space();
            std::size_t at = pos_;
            if (accept("*") || accept("×"))
                lhs = Expression::binary(BinaryOp::Mul, std::move(lhs), unary(), at);
            else if (accept("/") || accept("÷"))
                lhs = Expression::binary(BinaryOp::Div, std::move(lhs), unary(), at);
            else
                return lhs;
        }
    }

    Expression unary() {
        skip_space();
        std::size_t at = pos_;
        if (accept("-") || accept("−"))
            return Expression::unary(UnaryOp::Negate, unary(), at);
        return postfix();
    }

    Expression postfix() {
        Expression e = primary();
        while (true) {
            skip_space();
            std::size_t at = pos_;
            if (accept("^2") || accept("²"))
                e = Expression::unary(UnaryOp::Square, std::move(e), at);
            else if (accept("^3") || accept("³"))
                e = Expression::unary(UnaryOp::Cube, std::move(e), at);
            else if (accept("^"))
                error("only ^2 and ^3 are supported");
            else
                return e;
        }
    }

    Expression primary() {
        skip_space();
        std::size_t at = pos_;
        if (accept("(")) {
            Expression e = expr();
            if (!accept(")"))
                error("expected ')'");
            return e;
        }
        if (accept("sqrt") || accept("√"))
            return Expression::unary(UnaryOp::Sqrt, primary(), at);
        if (accept("cbrt") || accept("∛"))
            return Expression::unary(UnaryOp::Cbrt, primary(), at);
        if (accept("khahara") || accept("∞"))
            return Expression::literal(Khahara{}, at);

        std::size_t end = pos_;
        while (end < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.'))
            ++end;
        if (end == pos_)
            error(pos_ == text_.size() ? "unexpected end of expression" : "expected a number");
        std::string_view literal = text_.substr(pos_, end - pos_);
        pos_ = end;
        try {
            return Expression::literal(Finite{Rational::parse(literal)}, at);
        } catch (const ParseError&) {
            pos_ = at;
            error("malformed number '" + std::string(literal) + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class Evaluator {
public:
    explicit Evaluator(RuleSet rules) : rules_(rules) {}

    Value eval(const Expression& e) {
        const std::size_t index = next_index_++;
        try {
            return std::visit([&](const auto& n) { return step(n); }, e.node());
        } catch (EvaluationError& err) {
            err.set_position(index, e.offset());
            throw;
        }
    }

    RuleTrace trace;

private:
    Value step(const Expression::Literal& l) { return normalize(l.value); }

    Value step(const Expression::Unary& u) {
        Value v = eval(*u.operand);
        return absorb(eval_unary(u.op, v, rules_));
    }

    Value step(const Expression::Binary& b) {
        Value lhs = eval(*b.lhs);
        Value rhs = eval(*b.rhs);
        return absorb(eval_binary(b.op, lhs, rhs, rules_));
    }

    Value absorb(Evaluation r) {
        trace.insert(trace.end(), std::make_move_iterator(r.trace.begin()), std::make_move_iterator(r.trace.end()));
        return std::move(r.value);
    }

    RuleSet rules_;
    std::size_t next_index_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

Evaluation eval_expression(const Expression& e, RuleSet rules) {
    Evaluator ev(rules);
    Value v = ev.eval(e);
    if (ev.trace.empty()) {
        // A bare literal fires no arithmetic rule.
        ev.trace.push_back({"EX-literal", "literal " + describe(v) + " taken as written"});
    }
    return {std::move(v), std::move(ev.trace)};
}

}  // namespace numerals
