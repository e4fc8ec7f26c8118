#pragma once

#include "cotan/fraction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cotan {

struct VerifyOptions {
    std::int64_t max_b = 100;  // bound for the cotangent-sum and sweep suites
    std::int64_t max_n = 500;  // bound for the totient suites
    std::uint64_t seed = 42;
    unsigned workers = 1;
};

/// One invariant checked over a family of inputs.
struct CheckOutcome {
    std::string module;
    std::string invariant;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::optional<std::string> counterexample; // first failing input

    bool passed() const { return failures == 0; }
};

/// A printed identity that is known to fail, reproduced on a pinned input.
/// `reproduced` is true when the printed form disagrees with the brute-force
/// value and the corrected form agrees with it.
struct ExpectedDiscrepancy {
    std::string name;
    std::string inputs;
    std::string printed_value;
    std::string corrected_value;
    std::string brute_force_value;
    bool reproduced = false;
};

struct EmpiricalMaxima {
    Fraction phi_approx_max_ratio;     // max |error| / 2^omega(n)
    std::string phi_approx_argmax;     // "n=.. A=.. B=.."
    double oracle_max_diff_over_tol = 0.0;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<CheckOutcome> checks;
    std::vector<ExpectedDiscrepancy> expected_discrepancies;
    EmpiricalMaxima empirical;

    bool passed() const;
};

/// Runs every invariant suite up to the bounds in `options`. Deterministic in
/// (max_b, max_n, seed); the worker count never changes the report.
VerifyReport run_verification(const VerifyOptions& options);

} // namespace cotan
