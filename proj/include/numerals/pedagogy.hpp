#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "numerals/integer.hpp"
#include "numerals/rational.hpp"
#include "numerals/rules.hpp"
#include "numerals/value.hpp"

namespace numerals::pedagogy {

/// First `count` terms of 0, 1, 1, 2, 3, ... Throws RangeError for count < 1.
std::vector<Integer> fibonacci(const Integer& count);

/// Room a guest moves to when one newcomer arrives (room + 1).
Integer hilbert_single(const Integer& room);
/// Room a guest moves to when infinitely many arrive (2 * room).
Integer hilbert_infinite(const Integer& room);

struct LimitTableRow {
    Rational numerator;
    Rational denominator;
    Value output;
};

struct LimitTable {
    std::vector<LimitTableRow> rows;
    /// numerator / 0 under the chosen rule set.
    Value limit;
    RuleTrace limit_trace;
};

/// Exact numerator / d for each d. Denominators must be non-zero and
/// strictly decreasing in magnitude (RangeError otherwise).
std::vector<LimitTableRow> quotient_rows(std::span<const Rational> denominators, const Rational& numerator);
/// Exact t / t for each term, same preconditions.
std::vector<LimitTableRow> self_quotient_rows(std::span<const Rational> terms);

/// quotient_rows(), then the rule-set answer for numerator / 0. Evaluation
/// errors for that terminal entry propagate (DivisionByZero under Modern).
LimitTable reciprocal_table(std::span<const Rational> denominators, const Rational& numerator, RuleSet rules);

/// self_quotient_rows(), then the rule-set answer for 0 / 0.
LimitTable self_quotient_table(std::span<const Rational> terms, RuleSet rules);

/// A row of a historically printed division table next to its exact value.
struct PrintedRow {
    Rational numerator;
    Rational denominator;
    Rational printed;
    Rational exact;
    bool erratum() const { return printed != exact; }
};

/// The printed reciprocal table 1/.1, 1/.001, 1/.00001, 1/.0000000001, with
/// the values as printed (two of which are wrong).
std::vector<PrintedRow> printed_reciprocal_table();

/// Denominators used by the printed shrinking-quantity tables.
std::vector<Rational> printed_reciprocal_denominators();
std::vector<Rational> printed_shrinking_terms();

struct ClockTime {
    Integer hours;
    Integer minutes;  // 0..59
    Integer seconds;  // 0..59
    friend bool operator==(const ClockTime&, const ClockTime&) = default;
};

/// Throws RangeError for negative input.
ClockTime decompose_time(const Integer& total_seconds);
Integer recompose_time(const ClockTime& t);

/// Every divisor of 60, ascending.
std::vector<Integer> divisors_of_sixty();

}  // namespace numerals::pedagogy
