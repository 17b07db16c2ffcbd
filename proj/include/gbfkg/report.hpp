#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbfkg/types.hpp"

namespace gbfkg {

enum class CheckStatus { Pass, Fail, Error };

std::string to_string(CheckStatus s);
CheckStatus status_from_string(const std::string& s);

/// Outcome of one verification check. The status contract is uniform:
/// pass iff residual <= tolerance (threshold checks encode their gap as a
/// shortfall so the same rule applies).
struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Error;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string worst_mode;  // label of the worst offender
    std::string note;        // error message / extra diagnostics
    double wall_ms = 0.0;    // volatile: excluded from hashes
    std::vector<std::pair<std::string, double>> mode_residuals;

    bool operator==(const CheckResult&) const = default;
};

struct CheckReport {
    std::string artifact = "gbfkg";
    std::string version = "1.0.0";
    int schema = 1;
    std::uint64_t scenario_hash = 0;
    std::uint64_t seed = 0;
    std::string scenario_name;
    std::string family;
    std::uint64_t mode_count = 0;
    std::vector<CheckResult> checks;
    std::string timestamp;  // volatile: excluded from hashes

    bool all_passed() const;
    std::size_t count(CheckStatus s) const;

    bool operator==(const CheckReport&) const = default;
};

enum class ReportFormat { Json, Csv, Human };

ReportFormat format_from_string(const std::string& s);
std::string format_extension(ReportFormat f);

/// Serializes the report. With include_volatile = false the timestamp and
/// per-check wall times are omitted, which makes the bytes a pure function
/// of the scenario content and seed.
std::string emit_report(const CheckReport& report, ReportFormat format,
                        bool include_volatile = true);

CheckReport parse_report_json(const std::string& bytes);

/// FNV-1a hash of the non-volatile JSON serialization.
std::uint64_t report_hash(const CheckReport& report);

}  // namespace gbfkg
