#include "numerals/pedagogy.hpp"

#include "numerals/errors.hpp"

namespace numerals::pedagogy {

namespace {

void check_room(const Integer& room) {
    if (room < Integer(1))
        throw RangeError("rooms are numbered from 1 (got " + room.to_string() + ")");
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

void check_shrinking(std::span<const Rational> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_zero())
            throw RangeError("table denominators must be non-zero");
        if (i > 0 && !(abs(values[i]) < abs(values[i - 1])))
            throw RangeError("table denominators must shrink strictly in magnitude");
    }
}

Rational decimal(const char* text) { return Rational::parse(text); }

}  // namespace

std::vector<Integer> fibonacci(const Integer& count) {
    if (count < Integer(1))
        throw RangeError("fibonacci needs at least one term (got " + count.to_string() + ")");
    std::vector<Integer> out{0};
    Integer a = 0, b = 1;
    for (Integer i = 1; i < count; i += 1) {
        out.push_back(b);
        Integer next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return out;
}

Integer hilbert_single(const Integer& room) {
    check_room(room);
    return room + 1;
}

Integer hilbert_infinite(const Integer& room) {
    check_room(room);
    return room * 2;
}

std::vector<LimitTableRow> quotient_rows(std::span<const Rational> denominators, const Rational& numerator) {
    check_shrinking(denominators);
    std::vector<LimitTableRow> rows;
    for (const auto& d : denominators)
        rows.push_back({numerator, d, Finite{numerator / d}});
    return rows;
}

std::vector<LimitTableRow> self_quotient_rows(std::span<const Rational> terms) {
    check_shrinking(terms);
    std::vector<LimitTableRow> rows;
    for (const auto& t : terms)
        rows.push_back({t, t, Finite{t / t}});
    return rows;
}

LimitTable reciprocal_table(std::span<const Rational> denominators, const Rational& numerator, RuleSet rules) {
    LimitTable table;
    table.rows = quotient_rows(denominators, numerator);
    Evaluation limit = eval_binary(BinaryOp::Div, Finite{numerator}, Finite{Rational{}}, rules);
    table.limit = std::move(limit.value);
    table.limit_trace = std::move(limit.trace);
    return table;
}

LimitTable self_quotient_table(std::span<const Rational> terms, RuleSet rules) {
    LimitTable table;
    table.rows = self_quotient_rows(terms);
    Evaluation limit = eval_binary(BinaryOp::Div, Finite{Rational{}}, Finite{Rational{}}, rules);
    table.limit = std::move(limit.value);
    table.limit_trace = std::move(limit.trace);
    return table;
}

std::vector<Rational> printed_reciprocal_denominators() {
    return {decimal(".1"), decimal(".001"), decimal(".00001"), decimal(".0000000001")};
}

std::vector<Rational> printed_shrinking_terms() {
    return {decimal(".1"), decimal(".001"), decimal(".00001"), decimal(".000000001"), decimal(".00000000001")};
}

std::vector<PrintedRow> printed_reciprocal_table() {
    const auto denominators = printed_reciprocal_denominators();
    const Integer printed[] = {10, 1000, 10000, 1000000000};
    std::vector<PrintedRow> out;
    for (std::size_t i = 0; i < denominators.size(); ++i)
        out.push_back({1, denominators[i], printed[i], Rational(1) / denominators[i]});
    return out;
}

ClockTime decompose_time(const Integer& total_seconds) {
    if (total_seconds.is_negative())
        throw RangeError("time cannot be negative (got " + total_seconds.to_string() + ")");
    auto [minutes_total, seconds] = floor_divmod(total_seconds, 60);
    auto [hours, minutes] = floor_divmod(minutes_total, 60);
    return {hours, minutes, seconds};
}

Integer recompose_time(const ClockTime& t) { return (t.hours * 60 + t.minutes) * 60 + t.seconds; }

std::vector<Integer> divisors_of_sixty() {
    std::vector<Integer> out;
    for (std::int64_t d = 1; d <= 60; ++d)
        if (60 % d == 0)
            out.push_back(d);
    return out;
}

}  // namespace numerals::pedagogy
