#include "record.hpp"

#include "cotan/errors.hpp"

#include <cstdio>
#include <stdexcept>

namespace cotan::cli {

namespace {

constexpr const char* kSweepColumns[] = {"b",           "phi_b",       "count_zero",   "count_plus", "count_minus",
                                         "closed_zero", "closed_plus", "closed_minus", "consistent"};

std::int64_t to_int(const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

nlohmann::ordered_json fields_to_json(const Fields& fields) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields) obj[k] = v;
    return obj;
}

Fields fields_from_json(const nlohmann::ordered_json& obj) {
    Fields out;
    for (const auto& [k, v] : obj.items()) out.emplace_back(k, v.get<std::string>());
    return out;
}

} // namespace

std::string_view to_string(Status status) {
    switch (status) {
    case Status::Ok: return "ok";
    case Status::PreconditionViolation: return "precondition_violation";
    case Status::Inconsistent: return "inconsistent";
    }
    return "ok";
}

Status parse_status(std::string_view text) {
    if (text == "ok") return Status::Ok;
    if (text == "precondition_violation") return Status::PreconditionViolation;
    if (text == "inconsistent") return Status::Inconsistent;
    throw std::invalid_argument("unknown status: " + std::string(text));
}

std::optional<std::string> OutputRecord::output(std::string_view key) const {
    for (const auto& [k, v] : outputs)
        if (k == key) return v;
    return std::nullopt;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::ordered_json to_json(const OutputRecord& record) {
    nlohmann::ordered_json j;
    j["command"] = record.command;
    j["inputs"] = fields_to_json(record.inputs);
    j["outputs"] = fields_to_json(record.outputs);
    j["status"] = std::string(to_string(record.status));
    return j;
}

OutputRecord record_from_json(const nlohmann::ordered_json& j) {
    OutputRecord r;
    r.command = j.at("command").get<std::string>();
    r.inputs = fields_from_json(j.at("inputs"));
    r.outputs = fields_from_json(j.at("outputs"));
    r.status = parse_status(j.at("status").get<std::string>());
    return r;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\n\r") == std::string::npos) {
            line += c;
            continue;
        }
        line += '"';
        for (char ch : c) {
            if (ch == '"') line += '"';
            line += ch;
        }
        line += '"';
    }
    line += '\n';
    return line;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    bool pending = false; // a row has started
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
            continue;
        }
        pending = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(cell));
            cell.clear();
        } else if (c == '\n') {
            row.push_back(std::move(cell));
            cell.clear();
            rows.push_back(std::move(row));
            row.clear();
            pending = false;
        } else if (c != '\r') {
            cell += c;
        }
    }
    if (quoted) throw std::invalid_argument("csv: unterminated quoted field");
    if (pending) {
        row.push_back(std::move(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_csv(const OutputRecord& record) {
    std::vector<std::string> header{"command", "status"}, values{record.command, std::string(to_string(record.status))};
    for (const auto& [k, v] : record.inputs) {
        header.push_back("in." + k);
        values.push_back(v);
    }
    for (const auto& [k, v] : record.outputs) {
        header.push_back("out." + k);
        values.push_back(v);
    }
    return csv_line(header) + csv_line(values);
}

OutputRecord record_from_csv(std::string_view text) {
    const auto rows = parse_csv(text);
    if (rows.size() != 2 || rows[0].size() != rows[1].size() || rows[0].size() < 2 || rows[0][0] != "command" ||
        rows[0][1] != "status")
        throw std::invalid_argument("csv: expected a header row and one record row");
    OutputRecord r;
    r.command = rows[1][0];
    r.status = parse_status(rows[1][1]);
    for (std::size_t i = 2; i < rows[0].size(); ++i) {
        const std::string& key = rows[0][i];
        if (key.rfind("in.", 0) == 0)
            r.inputs.emplace_back(key.substr(3), rows[1][i]);
        else if (key.rfind("out.", 0) == 0)
            r.outputs.emplace_back(key.substr(4), rows[1][i]);
        else
            throw std::invalid_argument("csv: unexpected column " + key);
    }
    return r;
}

std::vector<SweepRow> sweep_rows(std::int64_t b_lo, std::int64_t b_hi, const std::vector<SweepReport>& reports) {
    std::vector<SweepRow> rows;
    std::size_t next = 0;
    for (std::int64_t b = b_lo; b <= b_hi; ++b) {
        if (b == 3) {
            rows.push_back(SweepRow{3, true, {}});
            continue;
        }
        if (next >= reports.size() || reports[next].b != b) throw std::logic_error("sweep_rows: report/range mismatch");
        rows.push_back(SweepRow{b, false, reports[next++]});
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = csv_line({std::begin(kSweepColumns), std::end(kSweepColumns)});
    for (const SweepRow& row : rows) {
        if (row.skipped) {
            out += csv_line({std::to_string(row.b), "", "", "", "", "", "", "", "skipped"});
            continue;
        }
        const SweepReport& r = row.report;
        out += csv_line({std::to_string(r.b), std::to_string(r.phi_b), std::to_string(r.count_zero),
                         std::to_string(r.count_plus), std::to_string(r.count_minus), std::to_string(r.closed_zero),
                         std::to_string(r.closed_plus), std::to_string(r.closed_minus),
                         r.consistent ? "true" : "false"});
    }
    return out;
}

std::vector<SweepRow> sweep_from_csv(std::string_view text) {
    const auto table = parse_csv(text);
    if (table.empty() || table[0] != std::vector<std::string>(std::begin(kSweepColumns), std::end(kSweepColumns)))
        throw std::invalid_argument("sweep csv: unexpected header");
    std::vector<SweepRow> rows;
    for (std::size_t i = 1; i < table.size(); ++i) {
        const auto& c = table[i];
        if (c.size() != std::size(kSweepColumns)) throw std::invalid_argument("sweep csv: wrong column count");
        SweepRow row;
        row.b = to_int(c[0]);
        if (c[8] == "skipped") {
            row.skipped = true;
            rows.push_back(row);
            continue;
        }
        SweepReport& r = row.report;
        r.b = row.b;
        r.phi_b = to_int(c[1]);
        r.count_zero = to_int(c[2]);
        r.count_plus = to_int(c[3]);
        r.count_minus = to_int(c[4]);
        r.closed_zero = to_int(c[5]);
        r.closed_plus = to_int(c[6]);
        r.closed_minus = to_int(c[7]);
        if (c[8] != "true" && c[8] != "false") throw std::invalid_argument("sweep csv: bad consistent flag");
        r.consistent = c[8] == "true";
        rows.push_back(row);
    }
    return rows;
}

nlohmann::ordered_json sweep_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRow& row : rows) {
        nlohmann::ordered_json obj;
        obj["b"] = row.b;
        if (row.skipped) {
            obj["skipped"] = true;
            arr.push_back(obj);
            continue;
        }
        const SweepReport& r = row.report;
        obj["phi_b"] = r.phi_b;
        obj["count_zero"] = r.count_zero;
        obj["count_plus"] = r.count_plus;
        obj["count_minus"] = r.count_minus;
        obj["closed_zero"] = r.closed_zero;
        obj["closed_plus"] = r.closed_plus;
        obj["closed_minus"] = r.closed_minus;
        obj["consistent"] = r.consistent;
        arr.push_back(obj);
    }
    return arr;
}

std::vector<SweepRow> sweep_from_json(const nlohmann::ordered_json& j) {
    std::vector<SweepRow> rows;
    for (const auto& obj : j) {
        SweepRow row;
        row.b = obj.at("b").get<std::int64_t>();
        if (obj.value("skipped", false)) {
            row.skipped = true;
            rows.push_back(row);
            continue;
        }
        SweepReport& r = row.report;
        r.b = row.b;
        r.phi_b = obj.at("phi_b").get<std::int64_t>();
        r.count_zero = obj.at("count_zero").get<std::int64_t>();
        r.count_plus = obj.at("count_plus").get<std::int64_t>();
        r.count_minus = obj.at("count_minus").get<std::int64_t>();
        r.closed_zero = obj.at("closed_zero").get<std::int64_t>();
        r.closed_plus = obj.at("closed_plus").get<std::int64_t>();
        r.closed_minus = obj.at("closed_minus").get<std::int64_t>();
        r.consistent = obj.at("consistent").get<bool>();
        rows.push_back(row);
    }
    return rows;
}

nlohmann::ordered_json report_to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["options"] = {{"max_b", report.options.max_b}, {"max_n", report.options.max_n}, {"seed", report.options.seed}};
    j["passed"] = report.passed();

    auto checks = nlohmann::ordered_json::array();
    for (const CheckOutcome& c : report.checks) {
        nlohmann::ordered_json o;
        o["module"] = c.module;
        o["invariant"] = c.invariant;
        o["cases"] = c.cases;
        o["failures"] = c.failures;
        o["passed"] = c.passed();
        o["counterexample"] = c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nlohmann::ordered_json();
        checks.push_back(o);
    }
    j["checks"] = checks;

    auto discrepancies = nlohmann::ordered_json::array();
    for (const ExpectedDiscrepancy& d : report.expected_discrepancies) {
        nlohmann::ordered_json o;
        o["name"] = d.name;
        o["inputs"] = d.inputs;
        o["status"] = "expected-discrepancy";
        o["printed_value"] = d.printed_value;
        o["corrected_value"] = d.corrected_value;
        o["brute_force_value"] = d.brute_force_value;
        o["reproduced"] = d.reproduced;
        discrepancies.push_back(o);
    }
    j["expected_discrepancies"] = discrepancies;

    j["empirical"] = {{"phi_approx_max_error_over_2_pow_omega", report.empirical.phi_approx_max_ratio.to_string()},
                      {"phi_approx_argmax", report.empirical.phi_approx_argmax},
                      {"oracle_max_diff_over_tolerance", report.empirical.oracle_max_diff_over_tol}};
    return j;
}

} // namespace cotan::cli
