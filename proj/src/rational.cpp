#include "numerals/rational.hpp"

#include <algorithm>

#include "numerals/errors.hpp"

namespace numerals {

Rational::Rational(Integer n, Integer d) {
    if (d.is_zero())
        throw DivisionByZero("rational with zero denominator");
    if (d.is_negative()) {
        n = -n;
        d = -d;
    }
    Integer g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { return ParseError("invalid rational literal '" + std::string(text) + "'"); };
    if (text.empty())
        throw fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer n = Integer::from_decimal(text.substr(0, slash));
        std::string_view ds = text.substr(slash + 1);
        if (ds.empty() || ds.front() == '-' || ds.front() == '+')
            throw fail();
        Integer d = Integer::from_decimal(ds);
        if (d.is_zero())
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(std::move(n), std::move(d));
    }

    std::string_view body = text;
    bool negative = false;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto dot = body.find('.');
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (whole.empty() && frac.empty())
        throw fail();
    if (dot != std::string_view::npos && frac.empty())
        throw fail();

    std::string digits(whole);
    digits += frac;
    for (char c : digits)
        if (c < '0' || c > '9')
            throw fail();
    Integer n = Integer::from_decimal(digits);
    Integer d = Integer::pow(10, static_cast<unsigned>(frac.size()));
    return Rational(negative ? -n : n, std::move(d));
}

std::string Rational::to_string() const {
    if (is_integer())
        return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw DivisionByZero("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<std::string> terminating_decimal(const Rational& r) {
    Integer den = r.denominator();
    unsigned twos = 0, fives = 0;
    while ((den % 2).is_zero()) {
        den = den / 2;
        ++twos;
    }
    while ((den % 5).is_zero()) {
        den = den / 5;
        ++fives;
    }
    if (den != Integer(1))
        return std::nullopt;
    unsigned places = std::max(twos, fives);
    if (places == 0)
        return r.numerator().to_string();

    Integer scaled = r.numerator().abs() * Integer::pow(10, places) / r.denominator();
    std::string digits = scaled.to_string();
    if (digits.size() <= places)
        digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    return (r.sign() < 0 ? "-" : "") + digits;
}

}  // namespace numerals
