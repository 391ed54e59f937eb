#include "numerals/integer.hpp"

#include <limits>

#include "numerals/errors.hpp"

namespace numerals {

namespace mp = boost::multiprecision;

Integer Integer::from_decimal(std::string_view text) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty())
        throw ParseError("expected decimal digits, got '" + std::string(text) + "'");
    backend_type v = 0;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw ParseError("invalid decimal digit '" + std::string(1, c) + "' in '" +
                             std::string(text) + "'");
        v = v * 10 + (c - '0');
    }
    return Integer(negative ? backend_type(-v) : v);
}

Integer Integer::pow(const Integer& base, unsigned exponent) {
    return Integer(backend_type(mp::pow(base.v_, exponent)));
}

std::optional<std::int64_t> Integer::to_int64() const {
    if (v_ < std::numeric_limits<std::int64_t>::min() || v_ > std::numeric_limits<std::int64_t>::max())
        return std::nullopt;
    return v_.convert_to<std::int64_t>();
}

Integer operator/(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw DivisionByZero("integer division by zero");
    return Integer(Integer::backend_type(a.v_ / b.v_));
}

Integer operator%(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw DivisionByZero("integer division by zero");
    return Integer(Integer::backend_type(a.v_ % b.v_));
}

DivMod floor_divmod(const Integer& n, const Integer& divisor) {
    Integer q = n / divisor;
    Integer r = n % divisor;
    if (!r.is_zero() && r.sign() != divisor.sign()) {
        r += divisor;
        q -= 1;
    }
    return {std::move(q), std::move(r)};
}

Integer gcd(const Integer& a, const Integer& b) {
    return Integer(Integer::backend_type(mp::gcd(a.backend(), b.backend())));
}

namespace {

// Largest r >= 0 with r^k <= m, for m >= 0, by bisection on the bit length.
Integer::backend_type floor_root(const Integer::backend_type& m, unsigned k) {
    using B = Integer::backend_type;
    if (m < 2)
        return m;
    std::size_t bits = mp::msb(m) + 1;
    B lo = 0;
    B hi = B(1) << (bits / k + 1);
    while (lo < hi) {
        B mid = (lo + hi + 1) >> 1;
        if (mp::pow(mid, k) <= m)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

std::optional<Integer> exact_root(const Integer& n, unsigned k) {
    if (n.is_negative() && k % 2 == 0)
        return std::nullopt;
    auto magnitude = n.abs().backend();
    auto r = floor_root(magnitude, k);
    if (mp::pow(r, k) != magnitude)
        return std::nullopt;
    Integer root(r);
    return n.is_negative() ? -root : root;
}

}  // namespace numerals
