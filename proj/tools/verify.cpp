#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gbfkg/report.hpp"
#include "gbfkg/scenario.hpp"

namespace fs = std::filesystem;

namespace {

/// Bare scenario names resolve against --scenario-dir, then
/// $GBFKG_SCENARIO_DIR, then ./scenarios.
std::string resolve_scenario_path(const std::string& arg,
                                  const std::string& dir_flag) {
    if (fs::exists(arg)) return arg;
    std::vector<std::string> dirs;
    if (!dir_flag.empty()) dirs.push_back(dir_flag);
    if (const char* env = std::getenv("GBFKG_SCENARIO_DIR")) dirs.push_back(env);
    dirs.push_back("scenarios");
    for (const std::string& d : dirs) {
        for (const std::string& name : {arg, arg + ".json"}) {
            const fs::path p = fs::path(d) / name;
            if (fs::exists(p)) return p.string();
        }
    }
    throw gbfkg::ConfigError("scenario '" + arg + "' not found");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gbfkg scenario verifier: runs the selected identity checks "
                 "for a mode family, grid and vacuum, and emits a report"};
    app.name("gbfkg-verify");

    std::string scenario_arg;
    std::string out_dir;
    std::string scenario_dir;
    std::vector<std::string> formats{"human"};
    int jobs = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tolerance_scale = 0.0;
    bool list_checks = false;

    app.add_option("--scenario", scenario_arg,
                   "scenario file (or bare name under the scenario dir)");
    app.add_option("--out", out_dir, "directory for report artifacts");
    app.add_option("--format", formats,
                   "report formats: json, csv, human (repeatable)");
    app.add_option("--jobs", jobs, "parallel check workers")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "override the scenario seed")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--tolerance-scale", tolerance_scale,
                   "multiply every check tolerance by this factor")
        ->check(CLI::PositiveNumber);
    app.add_option("--scenario-dir", scenario_dir,
                   "directory searched for bare scenario names");
    app.add_flag("--list-checks", list_checks, "print registered checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list_checks) {
            for (const auto& def : gbfkg::check_registry())
                std::cout << def.id << "  (tol " << def.tolerance << ")  "
                          << def.description << '\n';
            return 0;
        }
        if (scenario_arg.empty())
            throw gbfkg::ConfigError("--scenario is required");

        gbfkg::Scenario scenario = gbfkg::load_scenario_file(
            resolve_scenario_path(scenario_arg, scenario_dir));
        if (seed_set) scenario.seed = seed;
        if (tolerance_scale > 0.0) scenario.tol.scale = tolerance_scale;

        const gbfkg::CheckReport report = gbfkg::run_scenario(scenario, jobs);

        bool printed = false;
        for (const std::string& fmt_name : formats) {
            const auto fmt = gbfkg::format_from_string(fmt_name);
            const std::string body = gbfkg::emit_report(report, fmt);
            if (!out_dir.empty()) {
                fs::create_directories(out_dir);
                const fs::path file =
                    fs::path(out_dir) /
                    (report.scenario_name + "." + gbfkg::format_extension(fmt));
                std::ofstream(file) << body;
            } else if (fmt == gbfkg::ReportFormat::Human) {
                std::cout << body;
                printed = true;
            } else {
                std::cout << body;
                printed = true;
            }
        }
        if (!printed && !out_dir.empty())
            std::cout << gbfkg::emit_report(report, gbfkg::ReportFormat::Human);
        return gbfkg::report_exit_code(report);
    } catch (const gbfkg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
