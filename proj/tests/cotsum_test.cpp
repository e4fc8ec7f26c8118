#include "cotan/cotsum.hpp"
#include "cotan/errors.hpp"
#include "cotan/exact.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace cotan;

// Values below were first computed with oracle::cubic_sum and then frozen.
TEST(EvalExact, SpotValues) {
    EXPECT_EQ(eval_exact(1, 1, 4), Fraction(2));
    EXPECT_EQ(eval_exact(1, 3, 4), Fraction(-2));
    EXPECT_EQ(eval_exact(1, 2, 5), Fraction(0));
    EXPECT_EQ(eval_exact(1, 1, 3), Fraction(3, 4));
    EXPECT_EQ(eval_exact(1, 1, 2), Fraction(0));
    EXPECT_EQ(eval_exact(1, 1, 5), Fraction(5, 2));
    EXPECT_EQ(eval_exact(1, 5, 4), Fraction(2));
}

TEST(EvalExact, SpotValuesAgreeWithBruteForce) {
    const struct {
        std::int64_t n, a, b;
    } cases[] = {{1, 1, 4}, {1, 3, 4}, {1, 2, 5}, {1, 1, 3}, {1, 1, 2}, {1, 1, 5}};
    for (const auto& c : cases)
        EXPECT_NEAR(static_cast<double>(oracle::cubic_sum(c.n, c.a, c.b)), eval_exact(c.n, c.a, c.b).to_double(), 1e-12);
}

TEST(EvalExact, RejectsBadArguments) {
    EXPECT_THROW(eval_exact(1, 1, 1), DomainError);
    EXPECT_THROW(eval_exact(0, 1, 5), DomainError);
    EXPECT_THROW(eval_exact(1, 0, 5), DomainError);
}

// Every divisibility branch, including 3 | b with b | 3na, against the naive sum.
TEST(EvalExact, MatchesBruteForceAcrossAllCases) {
    for (std::int64_t b = 2; b <= 60; ++b)
        for (std::int64_t n = 1; n <= 4; ++n)
            for (std::int64_t a = 1; a <= 2 * b; ++a) {
                const long double expected = oracle::cubic_sum(n, a, b);
                ASSERT_NEAR(static_cast<double>(expected), eval_exact(n, a, b).to_double(), 1e-9 * b * b)
                    << n << " " << a << " " << b;
            }
}

TEST(EvalExact, Periodicity) {
    for (std::int64_t b = 2; b <= 80; ++b)
        for (std::int64_t n = 1; n <= 3; ++n)
            for (std::int64_t a = b + 1; a <= 4 * b; ++a) {
                if (a % b == 0) continue;
                ASSERT_EQ(eval_exact(n, a, b), eval_exact(n, a % b, b));
            }
}

TEST(EvalExact, IntegralForEvenModulus) {
    for (std::int64_t b = 2; b <= 300; b += 2)
        for (std::int64_t a = 1; a <= 3 * b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const Fraction s = eval_exact(1, a, b);
            ASSERT_TRUE(s.is_integer());
            ASSERT_EQ((2 * s.num()) % b, 0);
        }
}

TEST(EvalExact, MagnitudeBelowModulus) {
    for (std::int64_t b = 2; b <= 200; ++b)
        for (std::int64_t a = 1; a <= 3 * b; ++a) {
            if ((3 * a) % b == 0) continue;
            ASSERT_LT(eval_exact(1, a, b).abs(), Fraction(b));
        }
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(1, 4).tag, CotSumTag::PlusHalfB);
    EXPECT_EQ(classify(3, 4).tag, CotSumTag::MinusHalfB);
    EXPECT_EQ(classify(2, 5).tag, CotSumTag::Zero);
    EXPECT_EQ(classify(7, 4).exact, Fraction(-2));
}

TEST(Classify, OutsideHypotheses) {
    const CotSumValue three = classify(1, 3);
    EXPECT_EQ(three.tag, CotSumTag::Other);
    EXPECT_EQ(three.exact, Fraction(3, 4));
    EXPECT_THROW(classify(1, 3, CheckMode::Strict), PreconditionError);
    EXPECT_THROW(classify(2, 4, CheckMode::Strict), PreconditionError);
    EXPECT_EQ(classify(4, 4).tag, CotSumTag::Zero); // a = 0 mod b: every term vanishes
    EXPECT_EQ(classify(3, 6).exact, Fraction(0));
    EXPECT_EQ(classify(2, 6).tag, CotSumTag::Other); // (3*6/4)(1 - 2/3) = 3/2
    EXPECT_EQ(classify(2, 6).exact, Fraction(3, 2));
}

TEST(MasterWitness, Examples) {
    const MasterWitness w1 = master_witness(5, 4);
    EXPECT_EQ(w1.k, 0);
    EXPECT_EQ(w1.nu, 1);
    EXPECT_EQ(w1.e1k, 0);
    EXPECT_EQ(w1.s, Fraction(2));

    const MasterWitness w2 = master_witness(2, 5);
    EXPECT_EQ(w2.k, 3);
    EXPECT_EQ(w2.nu, 1);
    EXPECT_EQ(w2.e1k, 5);
    EXPECT_EQ(w2.s, Fraction(0));

    const MasterWitness w3 = master_witness(1, 4);
    EXPECT_EQ(w3.k, 0);
    EXPECT_EQ(w3.nu, 0);
    EXPECT_EQ(w3.e1k, 0);
    EXPECT_EQ(w3.s, Fraction(2));
}

TEST(MasterWitness, Preconditions) {
    EXPECT_THROW(master_witness(1, 3), PreconditionError);
    EXPECT_THROW(master_witness(2, 4), PreconditionError);
}

TEST(MasterWitness, EquationReproducesExactValue) {
    for (std::int64_t b = 2; b <= 300; ++b) {
        if (b == 3) continue;
        for (std::int64_t a = 1; a <= 3 * b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const MasterWitness w = master_witness(a, b);
            ASSERT_TRUE(w.k >= 0 && w.k <= b - 2);
            ASSERT_EQ((3 * a + w.k + 1) % b, 0);
            ASSERT_EQ(w.nu, (a + w.k) / b);
            ASSERT_TRUE(w.satisfies(a, b));
            ASSERT_EQ(w.s, eval_exact(1, a, b)) << a << " " << b;
            if (a < b) ASSERT_LE(w.nu, 1);
        }
    }
}

TEST(Predicates, Examples) {
    EXPECT_TRUE(predicate_zero(2, 5));
    EXPECT_FALSE(predicate_zero(1, 4));
    EXPECT_TRUE(predicate_zero(1, 2));
    EXPECT_TRUE(predicate_plus(1, 4));
    EXPECT_FALSE(predicate_plus(2, 5));
    EXPECT_TRUE(predicate_plus(1, 5));
    EXPECT_TRUE(predicate_minus(3, 4));
    EXPECT_TRUE(predicate_minus(4, 5));
    EXPECT_FALSE(predicate_minus(1, 4));

    EXPECT_EQ(match_congruence(2, 5)->k, 3);
    EXPECT_EQ(match_congruence(4, 5)->k, 2);
}

TEST(Predicates, RejectPreconditionViolations) {
    EXPECT_THROW(predicate_zero(2, 4), PreconditionError);
    EXPECT_THROW(predicate_plus(1, 3), PreconditionError);
    EXPECT_THROW(predicate_minus(5, 5), PreconditionError);
    EXPECT_THROW(predicate_minus(0, 5), PreconditionError);
}

// Exactly one congruence holds, it matches the classification, and it agrees
// with the closed-form ranges for a.
TEST(Predicates, TrichotomyAndRanges) {
    for (std::int64_t b = 2; b <= 500; ++b) {
        if (b == 3) continue;
        for (std::int64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const bool z = predicate_zero(a, b), p = predicate_plus(a, b), m = predicate_minus(a, b);
            ASSERT_EQ(z + p + m, 1) << a << " " << b;
            const CotSumTag tag = classify(a, b, CheckMode::Strict).tag;
            ASSERT_EQ(z, tag == CotSumTag::Zero);
            ASSERT_EQ(p, tag == CotSumTag::PlusHalfB);
            ASSERT_EQ(m, tag == CotSumTag::MinusHalfB);

            ASSERT_EQ(z, Fraction(b + 1, 3).ceil() <= a && a <= Fraction(2 * b - 1, 3).floor());
            ASSERT_EQ(p, 1 <= a && a <= Fraction(b - 1, 3).floor());
            ASSERT_EQ(m, Fraction(2 * b + 1, 3).ceil() <= a && a <= b - 1);
            ASSERT_EQ(Fraction(3 * b - 1, 3).floor(), b - 1);
        }
    }
}
