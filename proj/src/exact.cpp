#include "cotan/exact.hpp"

#include "cotan/errors.hpp"

#include <string>

namespace cotan {

void require_modulus(std::int64_t b) {
    if (b < 2) throw DomainError("modulus b must be >= 2, got " + std::to_string(b));
}

void require_positive(std::int64_t v, const char* name) {
    if (v < 1) throw DomainError(std::string(name) + " must be >= 1, got " + std::to_string(v));
}

std::int64_t mul_mod(std::int64_t n, std::int64_t a, std::int64_t b) {
    std::int64_t product;
    if (!__builtin_mul_overflow(n, a, &product)) {
        const std::int64_t r = product % b;
        return r < 0 ? r + b : r;
    }
    const wide_int r = (wide_int{n} * a) % b;
    return static_cast<std::int64_t>(r < 0 ? r + b : r);
}

Fraction frac_part(std::int64_t n, std::int64_t a, std::int64_t b) {
    require_positive(n, "n");
    require_positive(a, "a");
    require_modulus(b);
    return Fraction(mul_mod(n, a, b), b);
}

Fraction frac_part(const Fraction& x) { return x - Fraction(x.floor()); }

BoundaryCount boundary_count(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k) {
    require_positive(n, "n");
    require_positive(a, "a");
    require_modulus(b);
    if (k < 0) throw DomainError("boundary count: k must be >= 0, got " + std::to_string(k));

    BoundaryCount out{n, k, a, b, 0};
    if (k == 0) return out;
    const wide_int start = wide_int{n} * a;
    const wide_int multiples = floor_div(start + k, b) - floor_div(start, b);
    out.value = static_cast<std::int64_t>(multiples * b);
    return out;
}

Fraction shifted_frac_part(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k) {
    const BoundaryCount e = boundary_count(n, a, b, k);
    return frac_part(n, a, b) + Fraction(k, b) - Fraction(e.value, b);
}

} // namespace cotan
