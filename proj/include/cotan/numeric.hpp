#pragma once

#include <cstdint>

namespace cotan {

/// Floating-point evaluation of a cotangent sum over m = 1 .. b-1.
struct NumericResult {
    double value = 0.0;
    std::int64_t term_count = 0;
    double abs_bound = 0.0; // sum of |term|, bounds every partial sum
};

/// Agreement tolerance between the float oracle and exact values: 1e-9 * b^2.
double tolerance(std::int64_t b);

/// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double term);
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// sum cot(pi m/b) sin^3(2 pi m n a/b)
NumericResult eval_float(std::int64_t n, std::int64_t a, std::int64_t b);

/// sum cot(pi m/b) cos^q(2 pi m n a/b); vanishes for every q >= 1.
NumericResult cot_cos_power_sum(std::int64_t q, std::int64_t n, std::int64_t a, std::int64_t b);

/// sum cot(pi m/b) sin^2(2 pi m n a/b); vanishes identically.
NumericResult cot_sin2_sum(std::int64_t n, std::int64_t a, std::int64_t b);

/// 1/2 - (1/2b) sum cot(pi m/b) sin(2 pi m n a/b), which equals {na/b} when b does not divide na.
/// Throws PreconditionError when b | na.
NumericResult rasz_frac_identity(std::int64_t n, std::int64_t a, std::int64_t b);

} // namespace cotan
