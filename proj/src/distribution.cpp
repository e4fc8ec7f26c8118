#include "cotan/distribution.hpp"

#include "cotan/cotsum.hpp"
#include "cotan/errors.hpp"
#include "cotan/exact.hpp"
#include "cotan/totient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cotan {

namespace {

std::int64_t closed_count(std::int64_t b, Fraction lo, Fraction hi) {
    // The closed-form ranges are empty (hi < lo) for small b.
    if (lo > hi) return 0;
    return phi_range_direct(b, RangeBound(lo, hi));
}

} // namespace

SweepReport sweep(std::int64_t b) {
    require_modulus(b);
    if (b == 3) throw PreconditionError("sweep: b = 3 is excluded");

    SweepReport r;
    r.b = b;
    for (std::int64_t a = 1; a < b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        ++r.phi_b;
        switch (classify(a, b, CheckMode::Strict).tag) {
        case CotSumTag::Zero: ++r.count_zero; break;
        case CotSumTag::PlusHalfB: ++r.count_plus; break;
        case CotSumTag::MinusHalfB: ++r.count_minus; break;
        case CotSumTag::Other: break;
        }
    }

    r.closed_zero = closed_count(b, Fraction(Fraction(b + 1, 3).ceil()), Fraction(Fraction(2 * b - 1, 3).floor()));
    r.closed_plus = closed_count(b, Fraction(1), Fraction(Fraction(b - 1, 3).floor()));
    r.closed_minus = closed_count(b, Fraction(Fraction(2 * b + 1, 3).ceil()), Fraction(Fraction(3 * b - 1, 3).floor()));
    r.consistent = r.count_zero == r.closed_zero && r.count_plus == r.closed_plus && r.count_minus == r.closed_minus;
    return r;
}

std::vector<SweepReport> sweep_range(std::int64_t b_lo, std::int64_t b_hi, unsigned workers) {
    require_modulus(b_lo);
    if (b_hi < b_lo) throw DomainError("sweep_range: empty range");

    std::vector<std::int64_t> moduli;
    for (std::int64_t b = b_lo; b <= b_hi; ++b)
        if (b != 3) moduli.push_back(b);

    std::vector<SweepReport> reports(moduli.size());
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(moduli.size(), 1)));
    if (workers == 1) {
        for (std::size_t i = 0; i < moduli.size(); ++i) reports[i] = sweep(moduli[i]);
        return reports;
    }

    // Strided assignment; each slot is written by exactly one thread.
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < moduli.size(); i += workers) reports[i] = sweep(moduli[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return reports;
}

} // namespace cotan
