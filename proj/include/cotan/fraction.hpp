#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cotan {

using wide_int = __int128;

std::string to_string(wide_int v);

/// Floor division for any sign of numerator; den must be positive.
wide_int floor_div(wide_int num, wide_int den);

/// Exact rational num/den kept in lowest terms with den >= 1.
///
/// Arithmetic is checked: any intermediate that does not fit in 128 bits
/// throws OverflowError instead of wrapping.
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(wide_int num, wide_int den = 1);
    Fraction(std::int64_t num) : Fraction(wide_int{num}) {}
    Fraction(int num) : Fraction(wide_int{num}) {}

    wide_int num() const { return num_; }
    wide_int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    wide_int floor() const { return floor_div(num_, den_); }
    wide_int ceil() const { return -floor_div(-num_, den_); }

    Fraction abs() const { return num_ < 0 ? -*this : *this; }

    /// Canonical text form: "p/q", or "p" when q == 1.
    std::string to_string() const;

    /// Inverse of to_string; also accepts non-canonical "p/q" and reduces it.
    static Fraction parse(std::string_view text);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Fraction operator-() const;

    friend Fraction operator+(const Fraction& lhs, const Fraction& rhs);
    friend Fraction operator-(const Fraction& lhs, const Fraction& rhs);
    friend Fraction operator*(const Fraction& lhs, const Fraction& rhs);
    friend Fraction operator/(const Fraction& lhs, const Fraction& rhs);

    Fraction& operator+=(const Fraction& rhs) { return *this = *this + rhs; }
    Fraction& operator-=(const Fraction& rhs) { return *this = *this - rhs; }
    Fraction& operator*=(const Fraction& rhs) { return *this = *this * rhs; }
    Fraction& operator/=(const Fraction& rhs) { return *this = *this / rhs; }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs);

private:
    wide_int num_ = 0;
    wide_int den_ = 1;
};

} // namespace cotan
