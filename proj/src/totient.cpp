#include "cotan/totient.hpp"

#include "cotan/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cotan {

namespace {

void require_ordered(std::int64_t A, std::int64_t B, const char* who) {
    if (A < 1 || A > B)
        throw DomainError(std::string(who) + ": requires 1 <= A <= B, got A=" + std::to_string(A) +
                          " B=" + std::to_string(B));
}

ArithmeticProfile profile_from_primes(std::int64_t n, const std::vector<std::int64_t>& primes) {
    ArithmeticProfile p;
    p.n = n;
    p.omega = static_cast<int>(primes.size());

    std::int64_t phi = n;
    for (std::int64_t q : primes) phi = phi / q * (q - 1);
    p.euler_phi = phi;

    std::int64_t radical = 1;
    for (std::int64_t q : primes) radical *= q;
    p.mobius = radical == n ? (p.omega % 2 == 0 ? 1 : -1) : 0;

    p.squarefree_divisors.push_back({1, 1});
    for (std::int64_t q : primes) {
        const std::size_t count = p.squarefree_divisors.size();
        for (std::size_t i = 0; i < count; ++i) {
            const auto& base = p.squarefree_divisors[i];
            p.squarefree_divisors.push_back({base.d * q, -base.mu});
        }
    }
    std::sort(p.squarefree_divisors.begin(), p.squarefree_divisors.end(),
              [](const SquarefreeDivisor& l, const SquarefreeDivisor& r) { return l.d < r.d; });
    return p;
}

// Number of multiples of d in [lo, hi].
wide_int multiples_in(const RangeBound& bounds, std::int64_t d) {
    const Fraction& lo = bounds.lo();
    const Fraction& hi = bounds.hi();
    const wide_int upper = floor_div(hi.num(), hi.den() * d);
    const wide_int lower = -floor_div(-lo.num(), lo.den() * d);
    return upper - lower + 1;
}

} // namespace

RangeBound::RangeBound(Fraction lo, Fraction hi) : lo_(lo), hi_(hi) {
    if (lo_ > hi_) throw DomainError("range bound: lo " + lo_.to_string() + " exceeds hi " + hi_.to_string());
}

RangeBound RangeBound::scaled_down(std::int64_t d) const {
    require_positive(d, "d");
    return RangeBound(lo_ / Fraction(d), hi_ / Fraction(d));
}

SmallestPrimeFactorSieve::SmallestPrimeFactorSieve(std::int64_t limit) {
    if (limit < 1) limit = 1;
    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (std::int64_t j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::int32_t>(i);
    }
}

std::int64_t SmallestPrimeFactorSieve::smallest_factor(std::int64_t n) const {
    if (n < 2 || n > limit()) throw DomainError("sieve: " + std::to_string(n) + " outside [2, limit]");
    return spf_[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    require_positive(n, "n");
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        primes.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

std::vector<std::int64_t> prime_factors(std::int64_t n, const SmallestPrimeFactorSieve& sieve) {
    require_positive(n, "n");
    std::vector<std::int64_t> primes;
    while (n > 1) {
        const std::int64_t p = sieve.smallest_factor(n);
        primes.push_back(p);
        while (n % p == 0) n /= p;
    }
    return primes;
}

ArithmeticProfile arithmetic_profile(std::int64_t n) { return profile_from_primes(n, prime_factors(n)); }

ArithmeticProfile arithmetic_profile(std::int64_t n, const SmallestPrimeFactorSieve& sieve) {
    return profile_from_primes(n, prime_factors(n, sieve));
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n, "n");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t phi_range_direct(std::int64_t n, const RangeBound& bounds) {
    require_positive(n, "n");
    std::int64_t count = 0;
    const auto first = static_cast<std::int64_t>(bounds.first_integer());
    const auto last = static_cast<std::int64_t>(bounds.last_integer());
    for (std::int64_t k = first; k <= last; ++k)
        if (std::gcd(n, k) == 1) ++count;
    return count;
}

std::int64_t phi_range_mobius(const ArithmeticProfile& profile, const RangeBound& bounds) {
    wide_int total = 0;
    for (const auto& [d, mu] : profile.squarefree_divisors) total += mu * multiples_in(bounds, d);
    return static_cast<std::int64_t>(total);
}

std::int64_t phi_range_mobius(std::int64_t n, const RangeBound& bounds) {
    return phi_range_mobius(arithmetic_profile(n), bounds);
}

std::int64_t phi_range_mobius_printed(std::int64_t n, const RangeBound& bounds) {
    const ArithmeticProfile profile = arithmetic_profile(n);
    wide_int total = 0;
    for (const auto& [d, mu] : profile.squarefree_divisors) total += mu * (multiples_in(bounds, d) - 1);
    return static_cast<std::int64_t>(total);
}

std::int64_t legendre_phi(const ArithmeticProfile& profile, const Fraction& x) {
    if (x.sign() < 0) throw DomainError("legendre_phi: x must be >= 0, got " + x.to_string());
    wide_int total = 0;
    for (const auto& [d, mu] : profile.squarefree_divisors) total += mu * floor_div(x.num(), x.den() * d);
    return static_cast<std::int64_t>(total);
}

std::int64_t legendre_phi(std::int64_t n, const Fraction& x) { return legendre_phi(arithmetic_profile(n), x); }

PhiDecomposition phi_decomposition(std::int64_t n, std::int64_t A, std::int64_t B) {
    require_positive(n, "n");
    if (n == 1) throw PreconditionError("phi_decomposition: requires n > 1");
    require_ordered(A, B, "phi_decomposition");

    const ArithmeticProfile profile = arithmetic_profile(n);
    return PhiDecomposition{legendre_phi(profile, Fraction(B)), legendre_phi(profile, Fraction(A)),
                            std::gcd(n, A) == 1 ? 1 : 0};
}

PhiApproximation phi_approx(const ArithmeticProfile& profile, std::int64_t A, std::int64_t B) {
    if (profile.n == 1) throw PreconditionError("phi_approx: requires n > 1");
    require_ordered(A, B, "phi_approx");

    PhiApproximation out;
    const int delta = std::gcd(profile.n, A) == 1 ? 1 : 0;
    out.estimate = Fraction(wide_int{B - A} * profile.euler_phi, profile.n) + Fraction(delta);
    out.exact = phi_range_direct(profile.n, RangeBound(Fraction(A), Fraction(B)));
    out.error = Fraction(out.exact) - out.estimate;
    out.bound = std::int64_t{2} << profile.omega;
    return out;
}

PhiApproximation phi_approx(std::int64_t n, std::int64_t A, std::int64_t B) {
    require_positive(n, "n");
    return phi_approx(arithmetic_profile(n), A, B);
}

std::int64_t divisor_partition_identity(std::int64_t n, std::int64_t A, std::int64_t B) {
    require_positive(n, "n");
    require_ordered(A, B, "divisor_partition_identity");
    const RangeBound range{Fraction(A), Fraction(B)};
    std::int64_t total = 0;
    for (std::int64_t d : divisors(n)) total += phi_range_direct(n / d, range.scaled_down(d));
    return total;
}

std::int64_t divisor_partition_printed(std::int64_t n, std::int64_t A, std::int64_t B) {
    require_positive(n, "n");
    require_ordered(A, B, "divisor_partition_printed");
    const RangeBound range{Fraction(A), Fraction(B)};
    std::int64_t total = 0;
    for (std::int64_t d : divisors(n)) total += phi_range_direct(d, range.scaled_down(d));
    return total;
}

wide_int coprime_sum(std::int64_t n, std::int64_t A, std::int64_t B, CheckMode mode) {
    require_positive(n, "n");
    if (A > B) throw DomainError("coprime_sum: requires A <= B");
    if (mode == CheckMode::Strict && (A < 1 || A + B != n))
        throw PreconditionError("coprime_sum: requires 1 <= A and A + B = n, got n=" + std::to_string(n) +
                                " A=" + std::to_string(A) + " B=" + std::to_string(B));
    wide_int total = 0;
    for (std::int64_t k = A; k <= B; ++k)
        if (std::gcd(n, k) == 1) total += k;
    return total;
}

} // namespace cotan
