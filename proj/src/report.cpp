#include "gbfkg/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "gbfkg/errors.hpp"

namespace gbfkg {

namespace {
using njson = nlohmann::ordered_json;
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "error";
    }
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "error") return CheckStatus::Error;
    throw ConfigError("unknown check status '" + s + "'");
}

bool CheckReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Pass;
    });
}

std::size_t CheckReport::count(CheckStatus s) const {
    return std::count_if(
        checks.begin(), checks.end(),
        [s](const CheckResult& c) { return c.status == s; });
}

ReportFormat format_from_string(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "human") return ReportFormat::Human;
    throw ConfigError("unsupported report format '" + s + "'");
}

std::string format_extension(ReportFormat f) {
    switch (f) {
        case ReportFormat::Json: return "json";
        case ReportFormat::Csv: return "csv";
        default: return "txt";
    }
}

namespace {

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << std::setfill('0') << std::setw(16) << v;
    return os.str();
}

std::uint64_t parse_hex64(const std::string& s) {
    return std::stoull(s, nullptr, 16);
}

njson to_json(const CheckReport& r, bool include_volatile) {
    njson j;
    j["artifact"] = r.artifact;
    j["version"] = r.version;
    j["schema"] = r.schema;
    j["scenario"] = {{"name", r.scenario_name},
                     {"hash", hex64(r.scenario_hash)},
                     {"seed", r.seed},
                     {"family", r.family},
                     {"modes", r.mode_count}};
    j["summary"] = {{"total", r.checks.size()},
                    {"passed", r.count(CheckStatus::Pass)},
                    {"failed", r.count(CheckStatus::Fail)},
                    {"errored", r.count(CheckStatus::Error)}};
    njson checks = njson::array();
    for (const CheckResult& c : r.checks) {
        njson jc;
        jc["id"] = c.id;
        jc["status"] = to_string(c.status);
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["worst_mode"] = c.worst_mode;
        if (!c.note.empty()) jc["note"] = c.note;
        if (!c.mode_residuals.empty()) {
            njson table = njson::array();
            for (const auto& [mode, res] : c.mode_residuals)
                table.push_back({{"mode", mode}, {"residual", res}});
            jc["mode_residuals"] = table;
        }
        if (include_volatile) jc["wall_ms"] = c.wall_ms;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    if (include_volatile) j["timestamp"] = r.timestamp;
    return j;
}

std::string emit_csv(const CheckReport& r) {
    std::ostringstream os;
    os << "row_kind,check_id,status,residual,tolerance,mode\n";
    os << std::setprecision(17);
    for (const CheckResult& c : r.checks) {
        os << "summary," << c.id << ',' << to_string(c.status) << ','
           << c.residual << ',' << c.tolerance << ",\"" << c.worst_mode
           << "\"\n";
        for (const auto& [mode, res] : c.mode_residuals)
            os << "mode," << c.id << ",," << res << ",,\"" << mode << "\"\n";
    }
    return os.str();
}

std::string emit_human(const CheckReport& r) {
    std::ostringstream os;
    os << r.artifact << ' ' << r.version << "  scenario '" << r.scenario_name
       << "'  family " << r.family << "  modes " << r.mode_count << "  seed "
       << r.seed << '\n';
    os << std::string(78, '-') << '\n';
    for (const CheckResult& c : r.checks) {
        os << std::left << std::setw(36) << c.id << std::setw(7)
           << to_string(c.status) << std::scientific << std::setprecision(3)
           << "residual " << std::setw(12) << c.residual << " tol "
           << std::setw(12) << c.tolerance;
        if (!c.worst_mode.empty()) os << ' ' << c.worst_mode;
        os << '\n';
        if (!c.note.empty()) os << "    " << c.note << '\n';
    }
    os << std::string(78, '-') << '\n';
    os << "passed " << r.count(CheckStatus::Pass) << "/" << r.checks.size();
    const auto err = r.count(CheckStatus::Error);
    if (err) os << "  (" << err << " errored)";
    os << '\n';
    return os.str();
}

}  // namespace

std::string emit_report(const CheckReport& report, ReportFormat format,
                        bool include_volatile) {
    switch (format) {
        case ReportFormat::Json:
            return to_json(report, include_volatile).dump(2) + "\n";
        case ReportFormat::Csv:
            return emit_csv(report);
        default:
            return emit_human(report);
    }
}

CheckReport parse_report_json(const std::string& bytes) {
    njson j;
    try {
        j = njson::parse(bytes);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("report parse: ") + e.what());
    }
    CheckReport r;
    r.artifact = j.at("artifact").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.schema = j.at("schema").get<int>();
    const auto& s = j.at("scenario");
    r.scenario_name = s.at("name").get<std::string>();
    r.scenario_hash = parse_hex64(s.at("hash").get<std::string>());
    r.seed = s.at("seed").get<std::uint64_t>();
    r.family = s.at("family").get<std::string>();
    r.mode_count = s.at("modes").get<std::uint64_t>();
    for (const auto& jc : j.at("checks")) {
        CheckResult c;
        c.id = jc.at("id").get<std::string>();
        c.status = status_from_string(jc.at("status").get<std::string>());
        c.residual = jc.at("residual").get<double>();
        c.tolerance = jc.at("tolerance").get<double>();
        c.worst_mode = jc.at("worst_mode").get<std::string>();
        if (jc.contains("note")) c.note = jc.at("note").get<std::string>();
        if (jc.contains("wall_ms")) c.wall_ms = jc.at("wall_ms").get<double>();
        if (jc.contains("mode_residuals"))
            for (const auto& row : jc.at("mode_residuals"))
                c.mode_residuals.emplace_back(
                    row.at("mode").get<std::string>(),
                    row.at("residual").get<double>());
        r.checks.push_back(std::move(c));
    }
    if (j.contains("timestamp")) r.timestamp = j.at("timestamp");
    return r;
}

std::uint64_t report_hash(const CheckReport& report) {
    return fnv1a64(emit_report(report, ReportFormat::Json, false));
}

}  // namespace gbfkg
