#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace numerals {

/// Exact arbitrary-precision signed integer. Every numeral system converts
/// through this type.
class Integer {
public:
    using backend_type = boost::multiprecision::cpp_int;

    Integer() = default;
    Integer(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Integer(backend_type v) : v_(std::move(v)) {}

    /// Parses an optionally signed run of ASCII decimal digits.
    /// Throws ParseError on anything else (including the empty string).
    static Integer from_decimal(std::string_view text);

    static Integer pow(const Integer& base, unsigned exponent);

    std::string to_string() const { return v_.str(); }
    std::optional<std::int64_t> to_int64() const;

    const backend_type& backend() const noexcept { return v_; }

    int sign() const noexcept { return v_.sign(); }
    bool is_zero() const noexcept { return v_.is_zero(); }
    bool is_negative() const noexcept { return v_.sign() < 0; }
    bool is_positive() const noexcept { return v_.sign() > 0; }
    Integer abs() const { return Integer(backend_type(boost::multiprecision::abs(v_))); }

    Integer operator-() const { return Integer(backend_type(-v_)); }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(backend_type(a.v_ + b.v_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(backend_type(a.v_ - b.v_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(backend_type(a.v_ * b.v_)); }
    // Truncating division and remainder, as for built-in integers.
    friend Integer operator/(const Integer& a, const Integer& b);
    friend Integer operator%(const Integer& a, const Integer& b);

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& n) { return os << n.v_.str(); }

private:
    backend_type v_;
};

struct DivMod {
    Integer quotient;
    Integer remainder;
};

/// Floor division for a positive divisor: remainder lies in [0, divisor).
DivMod floor_divmod(const Integer& n, const Integer& divisor);

Integer gcd(const Integer& a, const Integer& b);

/// Exact integer k-th root (k = 2 or 3) if `n` is a perfect power.
/// Square roots of negatives have no result.
std::optional<Integer> exact_root(const Integer& n, unsigned k);

}  // namespace numerals
