#include "cotan/verify.hpp"

#include "cotan/cotsum.hpp"
#include "cotan/distribution.hpp"
#include "cotan/errors.hpp"
#include "cotan/exact.hpp"
#include "cotan/numeric.hpp"
#include "cotan/totient.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace cotan {

namespace {

// Fixed caps where an invariant is stated over a bounded family.
constexpr std::int64_t kLemmaMaxB = 50;
constexpr std::int64_t kFloatMaxB = 300;
constexpr std::int64_t kExhaustiveRangeMaxN = 200;
constexpr int kRationalRangesPerN = 200;
constexpr int kDecompositionPairsPerN = 100;
constexpr int kApproxRangesPerN = 100;
constexpr int kPartitionRangesPerN = 50;
constexpr int kVanishingSamplesPerB = 20;
constexpr std::int64_t kMaxPower = 5;

std::string describe(std::initializer_list<std::pair<const char*, std::string>> fields) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : fields) {
        if (!first) out << ' ';
        out << key << '=' << value;
        first = false;
    }
    return out.str();
}

std::string str(std::int64_t v) { return std::to_string(v); }

class Tally {
public:
    Tally(std::string module, std::string invariant) {
        outcome_.module = std::move(module);
        outcome_.invariant = std::move(invariant);
    }

    template <typename Describe>
    void expect(bool ok, Describe&& what) {
        ++outcome_.cases;
        if (ok) return;
        if (outcome_.failures++ == 0) outcome_.counterexample = what();
    }

    void fail(const std::string& what) {
        ++outcome_.cases;
        if (outcome_.failures++ == 0) outcome_.counterexample = what;
    }

    CheckOutcome finish() && { return std::move(outcome_); }

private:
    CheckOutcome outcome_;
};

// Independent stream per (suite, index) so partitioning never changes draws.
std::mt19937_64 stream(std::uint64_t seed, std::uint32_t suite, std::int64_t index) {
    const auto i = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), suite,
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    return std::mt19937_64(seq);
}

std::pair<std::int64_t, std::int64_t> ordered_pair(std::mt19937_64& rng, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> pick(1, hi);
    std::int64_t A = pick(rng), B = pick(rng);
    if (A > B) std::swap(A, B);
    return {A, B};
}

class Runner {
public:
    explicit Runner(const VerifyOptions& options) : opt_(options) { report_.options = options; }

    VerifyReport run() && {
        exact_suites();
        cotsum_suites();
        numeric_suites();
        totient_suites();
        distribution_suites();
        discrepancies();
        return std::move(report_);
    }

private:
    void guarded(const char* module, const char* invariant, const std::function<void(Tally&)>& body) {
        Tally tally(module, invariant);
        try {
            body(tally);
        } catch (const std::exception& e) {
            tally.fail(std::string("exception: ") + e.what());
        }
        report_.checks.push_back(std::move(tally).finish());
    }

    void exact_suites() {
        const std::int64_t lemma_b = std::min(opt_.max_b, kLemmaMaxB);
        guarded("exact", "shifted_frac_part_matches_direct", [&](Tally& t) {
            for (std::int64_t b = 2; b <= lemma_b; ++b)
                for (std::int64_t n = 1; n <= 3 * b; ++n)
                    for (std::int64_t a = 1; a <= 3 * b; ++a)
                        for (std::int64_t k = 0; k <= 2 * b; ++k)
                            t.expect(shifted_frac_part(n, a, b, k) == frac_part(1, n * a + k, b), [&] {
                                return describe({{"n", str(n)}, {"a", str(a)}, {"b", str(b)}, {"k", str(k)}});
                            });
        });
        guarded("exact", "fractional_part_shift_rules", [&](Tally& t) {
            for (std::int64_t b = 2; b <= lemma_b; ++b)
                for (std::int64_t a = 3; a <= 3 * b; ++a) {
                    const bool ok = a % b != 0 ? frac_part(1, a, b) == frac_part(1, a - 1, b) + Fraction(1, b)
                                               : frac_part(1, a - 2, b) == Fraction(1) - Fraction(2, b);
                    t.expect(ok, [&] { return describe({{"a", str(a)}, {"b", str(b)}}); });
                }
        });
        guarded("exact", "boundary_count_monotone_in_steps_of_b", [&](Tally& t) {
            for (std::int64_t b = 2; b <= lemma_b; ++b)
                for (std::int64_t a = 1; a <= 3 * b; ++a) {
                    std::int64_t previous = 0;
                    for (std::int64_t k = 0; k <= 2 * b; ++k) {
                        const std::int64_t v = boundary_count(1, a, b, k).value;
                        const bool ok = (v == previous || v == previous + b) && (k >= b || v <= b);
                        t.expect(ok, [&] { return describe({{"a", str(a)}, {"b", str(b)}, {"k", str(k)}}); });
                        previous = v;
                    }
                }
        });
        guarded("exact", "fraction_arithmetic_closure", [&](Tally& t) {
            auto rng = stream(opt_.seed, 1, 0);
            std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
            for (int i = 0; i < 20000; ++i) {
                const std::int64_t p = num(rng), q = den(rng), r = num(rng), s = den(rng);
                const Fraction x(p, q), y(r, s);
                const Fraction sum = x + y, diff = x - y, prod = x * y;
                auto canonical = [](const Fraction& f) {
                    return f.den() >= 1 &&
                           std::gcd(static_cast<std::int64_t>(f.num()), static_cast<std::int64_t>(f.den())) == 1;
                };
                const bool ok = canonical(sum) && canonical(diff) && canonical(prod) &&
                                sum == Fraction(wide_int{p} * s + wide_int{r} * q, wide_int{q} * s) &&
                                diff == Fraction(wide_int{p} * s - wide_int{r} * q, wide_int{q} * s) &&
                                prod == Fraction(wide_int{p} * r, wide_int{q} * s);
                t.expect(ok, [&] { return describe({{"x", x.to_string()}, {"y", y.to_string()}}); });
            }
        });
    }

    void cotsum_suites() {
        guarded("cotsum", "trichotomy_matches_congruence_predicates", [&](Tally& t) {
            for (std::int64_t b = 2; b <= opt_.max_b; ++b) {
                if (b == 3) continue;
                for (std::int64_t a = 1; a < b; ++a) {
                    if (std::gcd(a, b) != 1) continue;
                    const CotSumValue v = classify(a, b, CheckMode::Strict);
                    const bool z = predicate_zero(a, b), p = predicate_plus(a, b), m = predicate_minus(a, b);
                    const bool ok = v.tag != CotSumTag::Other && (z + p + m) == 1 &&
                                    z == (v.tag == CotSumTag::Zero) && p == (v.tag == CotSumTag::PlusHalfB) &&
                                    m == (v.tag == CotSumTag::MinusHalfB);
                    t.expect(ok, [&] { return describe({{"a", str(a)}, {"b", str(b)}, {"S", v.exact.to_string()}}); });
                }
            }
        });
        const std::int64_t float_b = std::min(opt_.max_b, kFloatMaxB);
        guarded("cotsum", "exact_matches_float_oracle", [&](Tally& t) {
            double worst = 0.0;
            for (std::int64_t b = 2; b <= float_b; ++b)
                for (std::int64_t n = 1; n <= 3; ++n)
                    for (std::int64_t a = 1; a <= 3 * b; ++a) {
                        const double diff = std::fabs(eval_exact(n, a, b).to_double() - eval_float(n, a, b).value);
                        worst = std::max(worst, diff / tolerance(b));
                        t.expect(diff <= tolerance(b),
                                 [&] { return describe({{"n", str(n)}, {"a", str(a)}, {"b", str(b)}}); });
                    }
            report_.empirical.oracle_max_diff_over_tol = worst;
        });
        guarded("cotsum", "periodic_in_a_mod_b", [&](Tally& t) {
            for (std::int64_t b = 2; b <= opt_.max_b; ++b)
                for (std::int64_t n = 1; n <= 3; ++n)
                    for (std::int64_t a = b + 1; a <= 3 * b; ++a) {
                        if (a % b == 0) continue;
                        t.expect(eval_exact(n, a, b) == eval_exact(n, a % b, b),
                                 [&] { return describe({{"n", str(n)}, {"a", str(a)}, {"b", str(b)}}); });
                    }
        });
        guarded("cotsum", "integral_for_even_b", [&](Tally& t) {
            for (std::int64_t b = 2; b <= opt_.max_b; b += 2)
                for (std::int64_t a = 1; a <= 3 * b; ++a) {
                    if (std::gcd(a, b) != 1) continue;
                    const Fraction s = eval_exact(1, a, b);
                    t.expect(s.is_integer() && (2 * s.num()) % b == 0,
                             [&] { return describe({{"a", str(a)}, {"b", str(b)}, {"S", s.to_string()}}); });
                }
        });
        guarded("cotsum", "master_equation", [&](Tally& t) {
            for (std::int64_t b = 2; b <= float_b; ++b) {
                if (b == 3) continue;
                for (std::int64_t a = 1; a <= 3 * b; ++a) {
                    if (std::gcd(a, b) != 1) continue;
                    const MasterWitness w = master_witness(a, b);
                    const bool ok = w.k >= 0 && w.k <= b - 2 && (3 * a + w.k + 1) % b == 0 &&
                                    w.nu == (a + w.k) / b && w.satisfies(a, b) && w.s == eval_exact(1, a, b);
                    t.expect(ok, [&] { return describe({{"a", str(a)}, {"b", str(b)}}); });
                }
            }
        });
        guarded("cotsum", "magnitude_below_b", [&](Tally& t) {
            for (std::int64_t b = 2; b <= opt_.max_b; ++b)
                for (std::int64_t a = 1; a <= 3 * b; ++a) {
                    if ((3 * a) % b == 0) continue;
                    t.expect(eval_exact(1, a, b).abs() < Fraction(b),
                             [&] { return describe({{"a", str(a)}, {"b", str(b)}}); });
                }
        });
    }

    void numeric_suites() {
        const std::int64_t float_b = std::min(opt_.max_b, kFloatMaxB);
        guarded("numeric", "cot_cos_power_sum_vanishes", [&](Tally& t) {
            for (std::int64_t b = 2; b <= float_b; ++b)
                for (std::int64_t q = 1; q <= kMaxPower; ++q) {
                    auto rng = stream(opt_.seed, 2, b * 16 + q);
                    std::uniform_int_distribution<std::int64_t> pick(1, 4 * b);
                    for (int i = 0; i < kVanishingSamplesPerB; ++i) {
                        const std::int64_t n = pick(rng), a = pick(rng);
                        t.expect(std::fabs(cot_cos_power_sum(q, n, a, b).value) <= tolerance(b), [&] {
                            return describe({{"q", str(q)}, {"n", str(n)}, {"a", str(a)}, {"b", str(b)}});
                        });
                    }
                }
        });
        guarded("numeric", "cot_sin2_sum_vanishes", [&](Tally& t) {
            for (std::int64_t b = 2; b <= float_b; ++b) {
                auto rng = stream(opt_.seed, 3, b);
                std::uniform_int_distribution<std::int64_t> pick(1, 4 * b);
                for (int i = 0; i < kVanishingSamplesPerB; ++i) {
                    const std::int64_t n = pick(rng), a = pick(rng);
                    t.expect(std::fabs(cot_sin2_sum(n, a, b).value) <= tolerance(b),
                             [&] { return describe({{"n", str(n)}, {"a", str(a)}, {"b", str(b)}}); });
                }
            }
        });
        guarded("numeric", "cot_sin_sum_gives_fractional_part", [&](Tally& t) {
            for (std::int64_t b = 2; b <= float_b; ++b)
                for (std::int64_t n = 1; n <= 2; ++n)
                    for (std::int64_t a = 1; a < b; ++a) {
                        if ((n * a) % b == 0) continue;
                        const double diff = std::fabs(rasz_frac_identity(n, a, b).value - frac_part(n, a, b).to_double());
                        t.expect(diff <= tolerance(b),
                                 [&] { return describe({{"n", str(n)}, {"a", str(a)}, {"b", str(b)}}); });
                    }
        });
    }

    void totient_suites() {
        const std::int64_t max_n = std::max<std::int64_t>(opt_.max_n, 2);
        const SmallestPrimeFactorSieve sieve(max_n);

        guarded("totient", "mobius_profile_identities", [&](Tally& t) {
            for (std::int64_t n = 1; n <= max_n; ++n) {
                const ArithmeticProfile p = arithmetic_profile(n, sieve);
                int mu_sum = 0;
                std::int64_t mu_sq = 0;
                for (const auto& [d, mu] : p.squarefree_divisors) {
                    mu_sum += mu;
                    mu_sq += mu * mu;
                }
                const bool ok = mu_sum == (n == 1 ? 1 : 0) && mu_sq == (std::int64_t{1} << p.omega) &&
                                legendre_phi(p, Fraction(n)) == p.euler_phi;
                t.expect(ok, [&] { return describe({{"n", str(n)}}); });
            }
        });
        guarded("totient", "direct_equals_mobius_rational_ranges", [&](Tally& t) {
            for (std::int64_t n = 1; n <= max_n; ++n) {
                const ArithmeticProfile p = arithmetic_profile(n, sieve);
                auto rng = stream(opt_.seed, 4, n);
                std::uniform_int_distribution<std::int64_t> den(1, 12);
                for (int i = 0; i < kRationalRangesPerN; ++i) {
                    const std::int64_t q1 = den(rng), q2 = den(rng);
                    std::uniform_int_distribution<std::int64_t> num1(0, 3 * n * q1), num2(0, 3 * n * q2);
                    Fraction lo(num1(rng), q1), hi(num2(rng), q2);
                    if (lo > hi) std::swap(lo, hi);
                    const RangeBound r(lo, hi);
                    t.expect(phi_range_direct(n, r) == phi_range_mobius(p, r), [&] {
                        return describe({{"n", str(n)}, {"lo", lo.to_string()}, {"hi", hi.to_string()}});
                    });
                }
            }
        });
        guarded("totient", "direct_equals_mobius_all_integer_ranges", [&](Tally& t) {
            const std::int64_t cap = std::min(max_n, kExhaustiveRangeMaxN);
            for (std::int64_t n = 1; n <= cap; ++n) {
                const ArithmeticProfile p = arithmetic_profile(n, sieve);
                for (std::int64_t A = 1; A <= 3 * n; ++A) {
                    // Incremental scan: brute-force count of [A, B] as B grows.
                    std::int64_t running = 0;
                    for (std::int64_t B = A; B <= 3 * n; ++B) {
                        if (std::gcd(n, B) == 1) ++running;
                        t.expect(phi_range_mobius(p, RangeBound(Fraction(A), Fraction(B))) == running,
                                 [&] { return describe({{"n", str(n)}, {"A", str(A)}, {"B", str(B)}}); });
                    }
                }
            }
        });
        guarded("totient", "printed_mobius_form_agrees_for_n_above_1", [&](Tally& t) {
            for (std::int64_t n = 2; n <= std::min<std::int64_t>(max_n, 200); ++n) {
                auto rng = stream(opt_.seed, 5, n);
                for (int i = 0; i < 10; ++i) {
                    const auto [A, B] = ordered_pair(rng, 3 * n);
                    const RangeBound r{Fraction(A), Fraction(B)};
                    t.expect(phi_range_mobius_printed(n, r) == phi_range_mobius(n, r),
                             [&] { return describe({{"n", str(n)}, {"A", str(A)}, {"B", str(B)}}); });
                }
            }
        });
        guarded("totient", "legendre_decomposition", [&](Tally& t) {
            for (std::int64_t n = 2; n <= max_n; ++n) {
                auto rng = stream(opt_.seed, 6, n);
                for (int i = 0; i < kDecompositionPairsPerN; ++i) {
                    const auto [A, B] = ordered_pair(rng, 3 * n);
                    t.expect(phi_decomposition(n, A, B).combination() ==
                                 phi_range_direct(n, RangeBound(Fraction(A), Fraction(B))),
                             [&] { return describe({{"n", str(n)}, {"A", str(A)}, {"B", str(B)}}); });
                }
            }
        });
        guarded("totient", "approximation_error_within_twice_2_pow_omega", [&](Tally& t) {
            Fraction best(-1);
            for (std::int64_t n = 2; n <= max_n; ++n) {
                const ArithmeticProfile p = arithmetic_profile(n, sieve);
                auto rng = stream(opt_.seed, 7, n);
                for (int i = 0; i < kApproxRangesPerN; ++i) {
                    const auto [A, B] = ordered_pair(rng, 2 * n);
                    const PhiApproximation approx = phi_approx(p, A, B);
                    const Fraction ratio = approx.error.abs() / Fraction(std::int64_t{1} << p.omega);
                    if (ratio > best) {
                        best = ratio;
                        report_.empirical.phi_approx_argmax =
                            describe({{"n", str(n)}, {"A", str(A)}, {"B", str(B)}});
                    }
                    t.expect(approx.within_bound(), [&] {
                        return describe({{"n", str(n)}, {"A", str(A)}, {"B", str(B)}, {"error", approx.error.to_string()}});
                    });
                }
            }
            report_.empirical.phi_approx_max_ratio = best;
        });
        guarded("totient", "divisor_partition_sums_to_range_length", [&](Tally& t) {
            for (std::int64_t n = 1; n <= max_n; ++n) {
                auto rng = stream(opt_.seed, 8, n);
                for (int i = 0; i < kPartitionRangesPerN; ++i) {
                    const auto [A, B] = ordered_pair(rng, 3 * n);
                    t.expect(divisor_partition_identity(n, A, B) == B - A + 1,
                             [&] { return describe({{"n", str(n)}, {"A", str(A)}, {"B", str(B)}}); });
                }
            }
        });
        guarded("totient", "symmetric_range_coprime_sum", [&](Tally& t) {
            for (std::int64_t n = 2; n <= max_n; ++n)
                for (std::int64_t A = 1; 2 * A <= n; ++A) {
                    const std::int64_t B = n - A;
                    const std::int64_t count = phi_range_direct(n, RangeBound(Fraction(A), Fraction(B)));
                    t.expect(2 * coprime_sum(n, A, B) == wide_int{n} * count,
                             [&] { return describe({{"n", str(n)}, {"A", str(A)}, {"B", str(B)}}); });
                }
        });
    }

    void distribution_suites() {
        std::vector<SweepReport> reports;
        guarded("distribution", "closed_form_counts", [&](Tally& t) {
            if (opt_.max_b >= 2) reports = sweep_range(2, opt_.max_b, opt_.workers);
            for (const SweepReport& r : reports)
                t.expect(r.consistent, [&] { return describe({{"b", str(r.b)}}); });
        });
        guarded("distribution", "counts_partition_euler_phi", [&](Tally& t) {
            for (const SweepReport& r : reports)
                t.expect(r.count_zero + r.count_plus + r.count_minus == r.phi_b &&
                             r.phi_b == arithmetic_profile(r.b).euler_phi,
                         [&] { return describe({{"b", str(r.b)}}); });
        });
        guarded("distribution", "plus_minus_symmetry", [&](Tally& t) {
            for (const SweepReport& r : reports)
                t.expect(r.count_plus == r.count_minus, [&] { return describe({{"b", str(r.b)}}); });
        });
    }

    void discrepancies() {
        {
            const RangeBound r(Fraction(3), Fraction(7));
            const std::int64_t printed = phi_range_mobius_printed(1, r);
            const std::int64_t corrected = phi_range_mobius(1, r);
            const std::int64_t direct = phi_range_direct(1, r);
            report_.expected_discrepancies.push_back({"mobius_range_formula_without_plus_one", "n=1 A=3 B=7",
                                                      str(printed), str(corrected), str(direct),
                                                      printed != direct && corrected == direct});
        }
        {
            const std::int64_t printed = divisor_partition_printed(2, 1, 2);
            const std::int64_t corrected = divisor_partition_identity(2, 1, 2);
            report_.expected_discrepancies.push_back({"divisor_partition_sum_over_phi_d", "n=2 A=1 B=2",
                                                      str(printed), str(corrected), str(2 - 1 + 1),
                                                      printed != 2 && corrected == 2});
        }
        {
            const wide_int sum = coprime_sum(5, 1, 2, CheckMode::Permissive);
            const Fraction claimed = Fraction(5, 2) * Fraction(phi_range_direct(5, RangeBound(Fraction(1), Fraction(2))));
            report_.expected_discrepancies.push_back({"coprime_sum_without_symmetric_range", "n=5 A=1 B=2",
                                                      claimed.to_string(), to_string(sum), to_string(sum),
                                                      Fraction(sum) != claimed});
        }
    }

    VerifyOptions opt_;
    VerifyReport report_;
};

} // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed(); }) &&
           std::all_of(expected_discrepancies.begin(), expected_discrepancies.end(),
                       [](const ExpectedDiscrepancy& d) { return d.reproduced; });
}

VerifyReport run_verification(const VerifyOptions& options) { return Runner(options).run(); }

} // namespace cotan
