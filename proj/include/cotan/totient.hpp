#pragma once

#include "cotan/errors.hpp"
#include "cotan/fraction.hpp"

#include <cstdint>
#include <vector>

namespace cotan {

/// Closed rational interval [lo, hi]; may contain no integer.
class RangeBound {
public:
    /// Throws DomainError when lo > hi.
    RangeBound(Fraction lo, Fraction hi);

    const Fraction& lo() const { return lo_; }
    const Fraction& hi() const { return hi_; }

    wide_int first_integer() const { return lo_.ceil(); }
    wide_int last_integer() const { return hi_.floor(); }
    bool has_integers() const { return first_integer() <= last_integer(); }

    /// [lo/d, hi/d]
    RangeBound scaled_down(std::int64_t d) const;

private:
    Fraction lo_;
    Fraction hi_;
};

struct SquarefreeDivisor {
    std::int64_t d = 1;
    int mu = 1;
};

struct ArithmeticProfile {
    std::int64_t n = 1;
    int mobius = 1;
    int omega = 0;
    std::int64_t euler_phi = 1;
    std::vector<SquarefreeDivisor> squarefree_divisors; // all d | n with mu(d) != 0, ascending
};

/// Smallest-prime-factor table for factoring every n <= limit in O(log n).
class SmallestPrimeFactorSieve {
public:
    explicit SmallestPrimeFactorSieve(std::int64_t limit);

    std::int64_t limit() const { return static_cast<std::int64_t>(spf_.size()) - 1; }
    std::int64_t smallest_factor(std::int64_t n) const;

private:
    std::vector<std::int32_t> spf_;
};

/// Distinct prime factors in ascending order, by trial division.
std::vector<std::int64_t> prime_factors(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n, const SmallestPrimeFactorSieve& sieve);

ArithmeticProfile arithmetic_profile(std::int64_t n);
ArithmeticProfile arithmetic_profile(std::int64_t n, const SmallestPrimeFactorSieve& sieve);

/// Every positive divisor of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// phi(n, lo, hi): integers k in [lo, hi] with gcd(n, k) = 1, by scanning k.
std::int64_t phi_range_direct(std::int64_t n, const RangeBound& bounds);

/// sum_{d|n} mu(d) (floor(hi/d) - ceil(lo/d) + 1).
std::int64_t phi_range_mobius(std::int64_t n, const RangeBound& bounds);
std::int64_t phi_range_mobius(const ArithmeticProfile& profile, const RangeBound& bounds);

/// The same sum without the +1. Differs from phi_range_mobius by [n = 1].
std::int64_t phi_range_mobius_printed(std::int64_t n, const RangeBound& bounds);

/// Legendre totient sum_{d|n} mu(d) floor(x/d) = #{1 <= k <= x : gcd(k,n) = 1}. Requires x >= 0.
std::int64_t legendre_phi(std::int64_t n, const Fraction& x);
std::int64_t legendre_phi(const ArithmeticProfile& profile, const Fraction& x);

/// phi(n,A,B) = phi(n,1,B) - phi(n,1,A) + delta_{n,A}, valid for n > 1.
struct PhiDecomposition {
    std::int64_t upper = 0; // legendre_phi(n, B)
    std::int64_t lower = 0; // legendre_phi(n, A)
    int delta = 0;          // [gcd(n, A) = 1]

    std::int64_t combination() const { return upper - lower + delta; }
};

PhiDecomposition phi_decomposition(std::int64_t n, std::int64_t A, std::int64_t B);

/// Main term (B-A)/n * phi(n) + delta_{n,A} against the exact count.
struct PhiApproximation {
    Fraction estimate;
    std::int64_t exact = 0;
    Fraction error; // exact - estimate
    std::int64_t bound = 0; // 2 * 2^omega(n)

    bool within_bound() const { return error.abs() <= Fraction(bound); }
};

PhiApproximation phi_approx(std::int64_t n, std::int64_t A, std::int64_t B);
PhiApproximation phi_approx(const ArithmeticProfile& profile, std::int64_t A, std::int64_t B);

/// sum_{d|n} phi(n/d, A/d, B/d); every k in [A,B] is counted once under d = gcd(k, n),
/// so the result is B - A + 1.
std::int64_t divisor_partition_identity(std::int64_t n, std::int64_t A, std::int64_t B);

/// sum_{d|n} phi(d, A/d, B/d), which is not B - A + 1 in general (n=2, A=1, B=2 gives 3).
std::int64_t divisor_partition_printed(std::int64_t n, std::int64_t A, std::int64_t B);

/// Sum of k in [A, B] coprime to n. Strict mode requires A + B = n, where the
/// range is closed under k -> n - k and the sum equals (n/2) phi(n, A, B).
wide_int coprime_sum(std::int64_t n, std::int64_t A, std::int64_t B, CheckMode mode = CheckMode::Strict);

} // namespace cotan
