#pragma once

#include "cotan/fraction.hpp"

#include <cstdint>

namespace cotan {

/// b times the number of multiples of b in the half-open interval (na, na+k].
struct BoundaryCount {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t value = 0;
};

/// {na/b} = (na mod b)/b, in [0, 1). Throws DomainError unless n, a >= 1 and b >= 2.
Fraction frac_part(std::int64_t n, std::int64_t a, std::int64_t b);

/// Fractional part of an arbitrary rational, x - floor(x).
Fraction frac_part(const Fraction& x);

/// E(n,k) in closed form b * (floor((na+k)/b) - floor(na/b)); E(n,0) = 0.
BoundaryCount boundary_count(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k);

/// {(na+k)/b} assembled as x_n + k/b - E(n,k)/b rather than reduced directly.
Fraction shifted_frac_part(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t k);

// Shared argument checks, also used by the other modules.
void require_modulus(std::int64_t b);
void require_positive(std::int64_t v, const char* name);

/// na mod b without intermediate overflow.
std::int64_t mul_mod(std::int64_t n, std::int64_t a, std::int64_t b);

} // namespace cotan
