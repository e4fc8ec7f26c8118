#pragma once

#include "cotan/distribution.hpp"
#include "cotan/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cotan::cli {

enum class Status { Ok, PreconditionViolation, Inconsistent };

std::string_view to_string(Status status);
Status parse_status(std::string_view text);

/// Insertion-ordered string map; order is part of the output format.
using Fields = std::vector<std::pair<std::string, std::string>>;

/// Result of one single-value command. Exact rationals are stored as
/// canonical "p/q" strings, floats with 17 significant digits.
struct OutputRecord {
    std::string command;
    Fields inputs;
    Fields outputs;
    Status status = Status::Ok;

    std::optional<std::string> output(std::string_view key) const;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

std::string format_double(double v);

nlohmann::ordered_json to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

/// Two lines: header (command,status,in.<key>...,out.<key>...) and values.
std::string to_csv(const OutputRecord& record);
OutputRecord record_from_csv(std::string_view text);

// CSV helpers (RFC 4180 quoting, LF line endings).
std::string csv_line(const std::vector<std::string>& cells);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// One sweep row; b = 3 is a marker row with `skipped` set and no counts.
struct SweepRow {
    std::int64_t b = 0;
    bool skipped = false;
    SweepReport report;
};

std::vector<SweepRow> sweep_rows(std::int64_t b_lo, std::int64_t b_hi, const std::vector<SweepReport>& reports);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_csv(std::string_view text);
nlohmann::ordered_json sweep_to_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json report_to_json(const VerifyReport& report);

} // namespace cotan::cli
