#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "numerals/integer.hpp"

namespace numerals {

/// Exact rational number, always in lowest terms with a positive
/// denominator. Zero is uniquely 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n) : num_(n), den_(1) {}        // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZero when `d` is zero.
    Rational(Integer n, Integer d);

    /// Accepts "7", "-3", "0.001", ".1", "1/3" and "-3/2".
    static Rational parse(std::string_view text);

    const Integer& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == Integer(1); }
    int sign() const noexcept { return num_.sign(); }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws DivisionByZero when `b` is zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    Integer num_;
    Integer den_;
};

/// Exact decimal text ("0.001", "-2.5", "7") when the denominator has no
/// prime factor other than 2 and 5.
std::optional<std::string> terminating_decimal(const Rational& r);

}  // namespace numerals
