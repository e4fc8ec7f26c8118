#include "cotan/numeric.hpp"

#include "cotan/errors.hpp"
#include "cotan/exact.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cotan {

namespace {

// Sums cot(pi m/b) * f(angle_m) where angle_m = 2 pi ((m * na) mod b) / b.
template <typename TermFn>
NumericResult cot_weighted_sum(std::int64_t n, std::int64_t a, std::int64_t b, TermFn&& weight) {
    require_positive(n, "n");
    require_positive(a, "a");
    require_modulus(b);

    const std::int64_t step = mul_mod(n, a, b);
    const double bd = static_cast<double>(b);
    CompensatedSum sum;
    NumericResult out;
    out.term_count = b - 1;
    for (std::int64_t m = 1; m < b; ++m) {
        const double half = std::numbers::pi * static_cast<double>(m) / bd;
        const double cot = std::cos(half) / std::sin(half);
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(mul_mod(m, step, b)) / bd;
        const double term = cot * weight(angle);
        sum.add(term);
        out.abs_bound += std::fabs(term);
    }
    out.value = sum.value();
    return out;
}

} // namespace

double tolerance(std::int64_t b) {
    const double bd = static_cast<double>(b);
    return 1e-9 * bd * bd;
}

void CompensatedSum::add(double term) {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term))
        carry_ += (sum_ - t) + term;
    else
        carry_ += (term - t) + sum_;
    sum_ = t;
}

NumericResult eval_float(std::int64_t n, std::int64_t a, std::int64_t b) {
    return cot_weighted_sum(n, a, b, [](double t) {
        const double s = std::sin(t);
        return s * s * s;
    });
}

NumericResult cot_cos_power_sum(std::int64_t q, std::int64_t n, std::int64_t a, std::int64_t b) {
    if (q < 1) throw DomainError("cot_cos_power_sum: q must be >= 1, got " + std::to_string(q));
    const int power = static_cast<int>(q);
    return cot_weighted_sum(n, a, b, [power](double t) { return std::pow(std::cos(t), power); });
}

NumericResult cot_sin2_sum(std::int64_t n, std::int64_t a, std::int64_t b) {
    return cot_weighted_sum(n, a, b, [](double t) {
        const double s = std::sin(t);
        return s * s;
    });
}

NumericResult rasz_frac_identity(std::int64_t n, std::int64_t a, std::int64_t b) {
    require_positive(n, "n");
    require_positive(a, "a");
    require_modulus(b);
    if (mul_mod(n, a, b) == 0) throw PreconditionError("rasz_frac_identity: requires b not dividing na");

    NumericResult out = cot_weighted_sum(n, a, b, [](double t) { return std::sin(t); });
    const double scale = 1.0 / (2.0 * static_cast<double>(b));
    out.value = 0.5 - out.value * scale;
    out.abs_bound = 0.5 + out.abs_bound * scale;
    return out;
}

} // namespace cotan
