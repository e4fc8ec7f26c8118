#pragma once

#include <cstdint>
#include <vector>

namespace cotan {

/// Value distribution of S(1,a,b) over 1 <= a <= b-1 with gcd(a,b) = 1, next to
/// the closed-form totient counts of each value class.
struct SweepReport {
    std::int64_t b = 0;
    std::int64_t count_zero = 0;
    std::int64_t count_plus = 0;
    std::int64_t count_minus = 0;
    std::int64_t closed_zero = 0;  // phi(b, ceil((b+1)/3), floor((2b-1)/3))
    std::int64_t closed_plus = 0;  // phi(b, 1, floor((b-1)/3))
    std::int64_t closed_minus = 0; // phi(b, ceil((2b+1)/3), b-1)
    std::int64_t phi_b = 0;
    bool consistent = false;
};

/// Throws DomainError for b < 2 and PreconditionError for b = 3.
SweepReport sweep(std::int64_t b);

/// sweep() for every b in [b_lo, b_hi] except 3, ordered by b. `workers` > 1
/// partitions the b range across threads; the result does not depend on it.
std::vector<SweepReport> sweep_range(std::int64_t b_lo, std::int64_t b_hi, unsigned workers = 1);

} // namespace cotan
