#include "commands.hpp"

#include "record.hpp"

#include "cotan/cotsum.hpp"
#include "cotan/distribution.hpp"
#include "cotan/errors.hpp"
#include "cotan/numeric.hpp"
#include "cotan/totient.hpp"
#include "cotan/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>

namespace cotan::cli {

namespace {

constexpr std::int64_t kMaxInt = std::numeric_limits<std::int64_t>::max();

struct EvalArgs {
    std::int64_t n = 1, a = 0, b = 0;
    std::string mode = "exact";
    std::string format = "json";
};

struct ClassifyArgs {
    std::int64_t a = 0, b = 0;
    bool strict = false;
    std::string format = "json";
};

struct SweepArgs {
    std::int64_t b_lo = 0, b_hi = 0;
    std::string format = "csv";
    std::string out = "-";
    unsigned workers = 1;
};

struct TotientArgs {
    std::int64_t n = 0;
    std::string lo, hi;
    std::string method = "all";
    std::string format = "json";
};

struct VerifyArgs {
    VerifyOptions options;
    std::string report = "-";
};

// Writes `text` to stdout ("-") or a file; returns false when the file cannot be written.
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
    if (path == "-") {
        out << text;
        return true;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (file) file << text;
    if (!file) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::string render(const OutputRecord& record, const std::string& format) {
    return format == "csv" ? to_csv(record) : to_json(record).dump(2) + "\n";
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
    OutputRecord rec;
    rec.command = "eval";
    rec.inputs = {{"n", std::to_string(args.n)}, {"a", std::to_string(args.a)}, {"b", std::to_string(args.b)},
                  {"mode", args.mode}};

    const bool want_exact = args.mode != "float";
    const bool want_float = args.mode != "exact";
    Fraction exact;
    NumericResult approx;
    if (want_exact) {
        exact = eval_exact(args.n, args.a, args.b);
        rec.outputs.emplace_back("exact", exact.to_string());
    }
    if (want_float) {
        approx = eval_float(args.n, args.a, args.b);
        rec.outputs.emplace_back("float", format_double(approx.value));
    }
    if (want_exact && want_float) {
        const double diff = std::fabs(exact.to_double() - approx.value);
        const bool pass = diff <= tolerance(args.b);
        rec.outputs.emplace_back("abs_diff", format_double(diff));
        rec.outputs.emplace_back("tolerance", format_double(tolerance(args.b)));
        rec.outputs.emplace_back("agreement", pass ? "pass" : "fail");
        if (!pass) rec.status = Status::Inconsistent;
    }
    out << render(rec, args.format);
    return rec.status == Status::Ok ? kExitOk : kExitInvariantFailure;
}

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
    const bool hypotheses = std::gcd(args.a, args.b) == 1 && args.b != 3;
    if (args.strict && !hypotheses) {
        err << "error: classify --strict requires gcd(a,b) = 1 and b != 3 (a=" << args.a << ", b=" << args.b
            << ", gcd=" << std::gcd(args.a, args.b) << ")\n";
        return kExitPrecondition;
    }

    const CotSumValue value = classify(args.a, args.b, args.strict ? CheckMode::Strict : CheckMode::Permissive);
    OutputRecord rec;
    rec.command = "classify";
    rec.inputs = {{"a", std::to_string(args.a)}, {"b", std::to_string(args.b)}, {"strict", args.strict ? "true" : "false"}};
    rec.outputs = {{"tag", std::string(to_string(value.tag))},
                   {"exact", value.exact.to_string()},
                   {"hypotheses", hypotheses ? "true" : "false"}};

    if (hypotheses) {
        const auto match = match_congruence(args.a % args.b, args.b);
        const MasterWitness witness = master_witness(args.a, args.b);
        rec.outputs.emplace_back("predicate", match ? std::string(congruence_text(match->tag)) : "none");
        rec.outputs.emplace_back("k", std::to_string(witness.k));
        rec.outputs.emplace_back("nu", std::to_string(witness.nu));
        rec.outputs.emplace_back("e1k", std::to_string(witness.e1k));
        const bool agree = match && match->tag == value.tag && match->k == witness.k && witness.s == value.exact;
        if (!agree) rec.status = Status::Inconsistent;
    } else {
        rec.outputs.emplace_back("predicate", "none");
    }
    out << render(rec, args.format);
    return rec.status == Status::Ok ? kExitOk : kExitInvariantFailure;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    if (args.b_hi < args.b_lo) {
        err << "error: empty range " << args.b_lo << ".." << args.b_hi << "\n";
        return kExitUsage;
    }
    const auto reports = sweep_range(args.b_lo, args.b_hi, args.workers);
    const auto rows = sweep_rows(args.b_lo, args.b_hi, reports);
    const std::string text = args.format == "json" ? sweep_to_json(rows).dump(2) + "\n" : sweep_to_csv(rows);
    if (!emit(args.out, text, out, err)) return kExitIo;
    const bool all = std::all_of(reports.begin(), reports.end(), [](const SweepReport& r) { return r.consistent; });
    return all ? kExitOk : kExitInvariantFailure;
}

int cmd_totient(const TotientArgs& args, std::ostream& out, std::ostream& err) {
    Fraction lo, hi;
    try {
        lo = Fraction::parse(args.lo);
        hi = Fraction::parse(args.hi);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (lo > hi) {
        err << "error: A must not exceed B\n";
        return kExitUsage;
    }
    const RangeBound range(lo, hi);

    // The main-term approximation is stated for integers 1 <= A <= B and n > 1.
    const bool approx_applies = args.n > 1 && lo.is_integer() && hi.is_integer() && lo >= Fraction(1);
    if (args.method == "approx" && !approx_applies) {
        err << "error: approx requires n > 1 and integer bounds 1 <= A <= B\n";
        return kExitPrecondition;
    }

    OutputRecord rec;
    rec.command = "totient";
    rec.inputs = {{"n", std::to_string(args.n)}, {"A", lo.to_string()}, {"B", hi.to_string()}, {"method", args.method}};

    const bool all = args.method == "all";
    std::optional<std::int64_t> direct, mobius;
    if (all || args.method == "direct") {
        direct = phi_range_direct(args.n, range);
        rec.outputs.emplace_back("direct", std::to_string(*direct));
    }
    if (all || args.method == "mobius") {
        mobius = phi_range_mobius(args.n, range);
        rec.outputs.emplace_back("mobius", std::to_string(*mobius));
    }
    if ((all || args.method == "approx") && approx_applies) {
        const auto A = static_cast<std::int64_t>(lo.num()), B = static_cast<std::int64_t>(hi.num());
        const PhiApproximation approx = phi_approx(args.n, A, B);
        rec.outputs.emplace_back("approx_estimate", approx.estimate.to_string());
        rec.outputs.emplace_back("approx_exact", std::to_string(approx.exact));
        rec.outputs.emplace_back("approx_error", approx.error.to_string());
        rec.outputs.emplace_back("approx_bound", std::to_string(approx.bound));
        if (!approx.within_bound()) rec.status = Status::Inconsistent;
    } else if (all) {
        rec.outputs.emplace_back("approx", "not-applicable");
    }
    if (direct && mobius && *direct != *mobius) rec.status = Status::Inconsistent;

    out << render(rec, args.format);
    return rec.status == Status::Ok ? kExitOk : kExitInvariantFailure;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    const VerifyReport report = run_verification(args.options);
    if (!emit(args.report, report_to_json(report).dump(2) + "\n", out, err)) return kExitIo;
    if (report.passed()) return kExitOk;
    for (const CheckOutcome& c : report.checks)
        if (!c.passed())
            err << "FAIL " << c.module << "/" << c.invariant << ": " << c.counterexample.value_or("") << "\n";
    return kExitInvariantFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cubic cotangent sums and generalized totients", "cotan"};
    app.require_subcommand(1);
    const auto format_check = CLI::IsMember({"json", "csv"});

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate S(n,a,b)");
    eval_cmd->add_option("-n", eval.n, "multiplier n")->check(CLI::Range(std::int64_t{1}, kMaxInt));
    eval_cmd->add_option("-a", eval.a, "numerator a")->required()->check(CLI::Range(std::int64_t{1}, kMaxInt));
    eval_cmd->add_option("-b", eval.b, "modulus b")->required()->check(CLI::Range(std::int64_t{2}, kMaxInt));
    eval_cmd->add_option("--mode", eval.mode)->check(CLI::IsMember({"exact", "float", "both"}));
    eval_cmd->add_option("--format", eval.format)->check(format_check);

    ClassifyArgs cls;
    auto* cls_cmd = app.add_subcommand("classify", "Classify S(1,a,b) as 0, b/2 or -b/2");
    cls_cmd->add_option("-a", cls.a)->required()->check(CLI::Range(std::int64_t{1}, kMaxInt));
    cls_cmd->add_option("-b", cls.b)->required()->check(CLI::Range(std::int64_t{2}, kMaxInt));
    cls_cmd->add_flag("--strict", cls.strict, "reject gcd(a,b) != 1 and b = 3");
    cls_cmd->add_option("--format", cls.format)->check(format_check);

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Value distribution of S(1,a,b) for each b in a range");
    sweep_cmd->add_option("b_lo", sw.b_lo)->required()->check(CLI::Range(std::int64_t{2}, kMaxInt));
    sweep_cmd->add_option("b_hi", sw.b_hi)->required()->check(CLI::Range(std::int64_t{2}, kMaxInt));
    sweep_cmd->add_option("--format", sw.format)->check(format_check);
    sweep_cmd->add_option("--out", sw.out, "output path, - for stdout");
    sweep_cmd->add_option("--workers", sw.workers)->check(CLI::Range(1u, 256u));

    TotientArgs tot;
    auto* tot_cmd = app.add_subcommand("totient", "Count k in [A,B] coprime to n");
    tot_cmd->add_option("n", tot.n)->required()->check(CLI::Range(std::int64_t{1}, kMaxInt));
    tot_cmd->add_option("A", tot.lo, "lower bound, integer or p/q")->required();
    tot_cmd->add_option("B", tot.hi, "upper bound, integer or p/q")->required();
    tot_cmd->add_option("--method", tot.method)->check(CLI::IsMember({"direct", "mobius", "approx", "all"}));
    tot_cmd->add_option("--format", tot.format)->check(format_check);

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Run every invariant suite and write a JSON report");
    ver_cmd->add_option("--max-b", ver.options.max_b)->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
    ver_cmd->add_option("--max-n", ver.options.max_n)->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000}));
    ver_cmd->add_option("--seed", ver.options.seed);
    ver_cmd->add_option("--report", ver.report, "report path, - for stdout");
    ver_cmd->add_option("--workers", ver.options.workers)->check(CLI::Range(1u, 256u));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(eval, out);
        if (cls_cmd->parsed()) return cmd_classify(cls, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(sw, out, err);
        if (tot_cmd->parsed()) return cmd_totient(tot, out, err);
        if (ver_cmd->parsed()) return cmd_verify(ver, out, err);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace cotan::cli
