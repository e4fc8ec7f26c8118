#include "cotan/cotsum.hpp"

#include "cotan/errors.hpp"
#include "cotan/exact.hpp"

#include <numeric>
#include <string>

namespace cotan {

namespace {

void require_trichotomy_hypotheses(std::int64_t a, std::int64_t b, const char* who) {
    if (std::gcd(a, b) != 1)
        throw PreconditionError(std::string(who) + ": requires gcd(a,b) = 1, got a=" + std::to_string(a) +
                                " b=" + std::to_string(b));
    if (b == 3) throw PreconditionError(std::string(who) + ": b = 3 is excluded");
}

void require_reduced(std::int64_t a, std::int64_t b, const char* who) {
    require_modulus(b);
    if (a < 1 || a > b - 1)
        throw PreconditionError(std::string(who) + ": requires 1 <= a <= b-1, got a=" + std::to_string(a));
    require_trichotomy_hypotheses(a, b, who);
}

CotSumTag tag_of(const Fraction& s, std::int64_t b) {
    const Fraction half_b(b, 2);
    if (s.is_zero()) return CotSumTag::Zero;
    if (s == half_b) return CotSumTag::PlusHalfB;
    if (s == -half_b) return CotSumTag::MinusHalfB;
    return CotSumTag::Other;
}

// Multiplier c in c*b = 3a+k+1 for each value class.
std::int64_t congruence_multiple(CotSumTag tag) {
    switch (tag) {
    case CotSumTag::Zero: return 2;
    case CotSumTag::PlusHalfB: return 1;
    case CotSumTag::MinusHalfB: return 3;
    case CotSumTag::Other: break;
    }
    return 0;
}

bool congruence_holds(CotSumTag tag, std::int64_t a, std::int64_t b) {
    require_reduced(a, b, "congruence predicate");
    const std::int64_t k = congruence_multiple(tag) * b - 3 * a - 1;
    return k >= 0 && k <= b - 2;
}

} // namespace

std::string_view to_string(CotSumTag tag) {
    switch (tag) {
    case CotSumTag::Zero: return "Zero";
    case CotSumTag::PlusHalfB: return "PlusHalfB";
    case CotSumTag::MinusHalfB: return "MinusHalfB";
    case CotSumTag::Other: return "Other";
    }
    return "Other";
}

std::string_view congruence_text(CotSumTag tag) {
    switch (tag) {
    case CotSumTag::Zero: return "2b=3a+k+1";
    case CotSumTag::PlusHalfB: return "b=3a+k+1";
    case CotSumTag::MinusHalfB: return "3b=3a+k+1";
    case CotSumTag::Other: break;
    }
    return "none";
}

Fraction eval_exact(std::int64_t n, std::int64_t a, std::int64_t b) {
    require_positive(n, "n");
    require_positive(a, "a");
    require_modulus(b);

    const std::int64_t residue = mul_mod(n, a, b);
    if (residue == 0) return Fraction(0);

    const Fraction x_n(residue, b);
    const std::int64_t triple = mul_mod(3, residue, b);
    if (triple == 0) {
        // sin^3 = (3 sin t - sin 3t)/4 and every sin 3t term vanishes here.
        return Fraction(wide_int{3} * b, 4) * (Fraction(1) - Fraction(2) * x_n);
    }
    const Fraction x_3n(triple, b);
    return Fraction(b, 2) * (x_3n - Fraction(3) * x_n + Fraction(1));
}

CotSumValue classify(std::int64_t a, std::int64_t b, CheckMode mode) {
    require_positive(a, "a");
    require_modulus(b);
    if (mode == CheckMode::Strict) require_trichotomy_hypotheses(a, b, "classify");

    // S depends on a only through a mod b; a = 0 mod b gives the empty product 0.
    const std::int64_t reduced = a % b;
    const Fraction s = reduced == 0 ? Fraction(0) : eval_exact(1, reduced, b);
    return CotSumValue{tag_of(s, b), s};
}

bool MasterWitness::satisfies(std::int64_t a, std::int64_t b) const {
    const Fraction lhs = Fraction(wide_int{3 * nu + 2} * b);
    const Fraction rhs = Fraction(wide_int{3} * a + k + 1) + Fraction(wide_int{3} * e1k) + Fraction(2) * s;
    return lhs == rhs;
}

MasterWitness master_witness(std::int64_t a, std::int64_t b) {
    require_positive(a, "a");
    require_modulus(b);
    require_trichotomy_hypotheses(a, b, "master_witness");

    MasterWitness w;
    const std::int64_t three_a = mul_mod(3, a, b);
    w.k = ((b - three_a - 1) % b + b) % b;
    if (w.k > b - 2) throw PreconditionError("master_witness: b divides 3a, no k in [0, b-2]");

    w.nu = static_cast<std::int64_t>(floor_div(wide_int{a} + w.k, b));
    w.e1k = boundary_count(1, a, b, w.k).value;
    const wide_int twice_s = wide_int{3 * w.nu + 2} * b - (wide_int{3} * a + w.k + 1) - wide_int{3} * w.e1k;
    w.s = Fraction(twice_s, 2);
    return w;
}

std::optional<CongruenceMatch> match_congruence(std::int64_t a, std::int64_t b) {
    require_reduced(a, b, "match_congruence");
    for (CotSumTag tag : {CotSumTag::Zero, CotSumTag::PlusHalfB, CotSumTag::MinusHalfB}) {
        const std::int64_t k = congruence_multiple(tag) * b - 3 * a - 1;
        if (k >= 0 && k <= b - 2) return CongruenceMatch{tag, k};
    }
    return std::nullopt;
}

bool predicate_zero(std::int64_t a, std::int64_t b) { return congruence_holds(CotSumTag::Zero, a, b); }
bool predicate_plus(std::int64_t a, std::int64_t b) { return congruence_holds(CotSumTag::PlusHalfB, a, b); }
bool predicate_minus(std::int64_t a, std::int64_t b) { return congruence_holds(CotSumTag::MinusHalfB, a, b); }

} // namespace cotan
