#pragma once

#include "cotan/errors.hpp"
#include "cotan/fraction.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace cotan {

// S(n,a,b) = sum_{m=1}^{b-1} cot(pi m/b) sin^3(2 pi m n a/b).

enum class CotSumTag { Zero, PlusHalfB, MinusHalfB, Other };

std::string_view to_string(CotSumTag tag);

/// Exact value of S(1,a,b) together with which of 0, b/2, -b/2 it equals.
struct CotSumValue {
    CotSumTag tag = CotSumTag::Other;
    Fraction exact;
};

/// Data of the linear relation (3nu+2)b = (3a+k+1) + 3E(1,k) + 2S(1,a,b).
struct MasterWitness {
    std::int64_t k = 0;   // unique k in [0, b-2] with 3a+k+1 = 0 mod b
    std::int64_t nu = 0;  // floor((a+k)/b)
    std::int64_t e1k = 0; // E(1,k)
    Fraction s;           // S(1,a,b) solved from the relation

    /// Checks the defining relation exactly for the given a and b.
    bool satisfies(std::int64_t a, std::int64_t b) const;
};

/// Exact S(n,a,b) for all n, a >= 1 and b >= 2, by fractional parts:
///   b | na          -> 0
///   b | 3na only    -> (3b/4)(1 - 2 x_n)
///   otherwise       -> (b/2)(x_{3n} - 3 x_n + 1)
Fraction eval_exact(std::int64_t n, std::int64_t a, std::int64_t b);

/// Tags S(1,a,b). Strict mode throws PreconditionError if gcd(a,b) != 1 or b == 3;
/// permissive mode returns CotSumTag::Other whenever the value is not 0 or +-b/2.
CotSumValue classify(std::int64_t a, std::int64_t b, CheckMode mode = CheckMode::Permissive);

/// Throws PreconditionError unless gcd(a,b) = 1 and b != 3.
MasterWitness master_witness(std::int64_t a, std::int64_t b);

/// Which congruence 2b, b or 3b = 3a+k+1 (0 <= k <= b-2) holds, with its k.
struct CongruenceMatch {
    CotSumTag tag = CotSumTag::Other;
    std::int64_t k = 0;
};

/// Requires gcd(a,b) = 1, b >= 2, b != 3, 1 <= a <= b-1; returns the
/// matching congruence, if any (exactly one matches under these conditions).
std::optional<CongruenceMatch> match_congruence(std::int64_t a, std::int64_t b);

bool predicate_zero(std::int64_t a, std::int64_t b);  // 2b = 3a+k+1
bool predicate_plus(std::int64_t a, std::int64_t b);  // b  = 3a+k+1
bool predicate_minus(std::int64_t a, std::int64_t b); // 3b = 3a+k+1

/// Right-hand side of each congruence as a multiple of b: 2, 1 and 3.
std::string_view congruence_text(CotSumTag tag);

} // namespace cotan
