#include "cotan/fraction.hpp"

#include "cotan/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cotan {

namespace {

wide_int abs_value(wide_int v) { return v < 0 ? -v : v; }

bool fits_64(wide_int v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

wide_int gcd(wide_int a, wide_int b) {
    a = abs_value(a);
    b = abs_value(b);
    // 128-bit division is an order of magnitude slower; most values are small.
    if (a <= std::numeric_limits<std::int64_t>::max() && b <= std::numeric_limits<std::int64_t>::max())
        return std::gcd(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
    while (b != 0) {
        wide_int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

wide_int checked_mul(wide_int a, wide_int b) {
    if (fits_64(a) && fits_64(b)) return a * b;
    wide_int out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("fraction: 128-bit multiplication overflow");
    return out;
}

wide_int checked_add(wide_int a, wide_int b) {
    wide_int out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("fraction: 128-bit addition overflow");
    return out;
}

// -INT128_MIN is not representable; every negation goes through here.
wide_int checked_neg(wide_int a) {
    wide_int out;
    if (__builtin_sub_overflow(wide_int{0}, a, &out)) throw OverflowError("fraction: 128-bit negation overflow");
    return out;
}

// Exact quotient; d divides v.
wide_int div_exact(wide_int v, wide_int d) {
    if (fits_64(v) && fits_64(d)) return static_cast<std::int64_t>(v) / static_cast<std::int64_t>(d);
    return v / d;
}

} // namespace

std::string to_string(wide_int v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    std::string digits;
    // Work on the negative side so INT128_MIN prints correctly.
    wide_int rest = negative ? v : -v;
    while (rest != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(rest % 10)));
        rest /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

wide_int floor_div(wide_int num, wide_int den) {
    if (den <= 0) throw DomainError("floor_div: denominator must be positive");
    if (fits_64(num) && fits_64(den)) {
        const auto n64 = static_cast<std::int64_t>(num), d64 = static_cast<std::int64_t>(den);
        std::int64_t q = n64 / d64;
        if (n64 % d64 != 0 && n64 < 0) --q;
        return q;
    }
    wide_int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

Fraction::Fraction(wide_int num, wide_int den) {
    if (den == 0) throw DomainError("fraction: zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    const wide_int g = gcd(num, den);
    if (g == 1) {
        num_ = num;
        den_ = den;
    } else {
        num_ = div_exact(num, g);
        den_ = div_exact(den, g);
    }
}

std::string Fraction::to_string() const {
    if (den_ == 1) return cotan::to_string(num_);
    return cotan::to_string(num_) + "/" + cotan::to_string(den_);
}

Fraction Fraction::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) -> wide_int {
        if (part.empty()) throw DomainError("fraction: empty integer in '" + std::string(text) + "'");
        bool negative = false;
        if (part.front() == '-' || part.front() == '+') {
            negative = part.front() == '-';
            part.remove_prefix(1);
        }
        if (part.empty()) throw DomainError("fraction: missing digits in '" + std::string(text) + "'");
        wide_int value = 0;
        for (char c : part) {
            if (c < '0' || c > '9') throw DomainError("fraction: invalid character in '" + std::string(text) + "'");
            value = checked_add(checked_mul(value, 10), c - '0');
        }
        return negative ? -value : value;
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Fraction(parse_int(text));
    return Fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Fraction Fraction::operator-() const {
    Fraction out;
    out.num_ = checked_neg(num_);
    out.den_ = den_;
    return out;
}

Fraction operator+(const Fraction& lhs, const Fraction& rhs) {
    const wide_int g = gcd(lhs.den_, rhs.den_);
    const wide_int lscale = div_exact(rhs.den_, g);
    const wide_int rscale = div_exact(lhs.den_, g);
    const wide_int num = checked_add(checked_mul(lhs.num_, lscale), checked_mul(rhs.num_, rscale));
    return Fraction(num, checked_mul(lhs.den_, lscale));
}

Fraction operator-(const Fraction& lhs, const Fraction& rhs) { return lhs + (-rhs); }

Fraction operator*(const Fraction& lhs, const Fraction& rhs) {
    // Cross-reduce first so the products stay as small as the result allows.
    const wide_int g1 = gcd(lhs.num_, rhs.den_);
    const wide_int g2 = gcd(rhs.num_, lhs.den_);
    return Fraction(checked_mul(div_exact(lhs.num_, g1), div_exact(rhs.num_, g2)),
                    checked_mul(div_exact(lhs.den_, g2), div_exact(rhs.den_, g1)));
}

Fraction operator/(const Fraction& lhs, const Fraction& rhs) {
    if (rhs.num_ == 0) throw DomainError("fraction: division by zero");
    return lhs * Fraction(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs) {
    return checked_mul(lhs.num_, rhs.den_) <=> checked_mul(rhs.num_, lhs.den_);
}

} // namespace cotan
