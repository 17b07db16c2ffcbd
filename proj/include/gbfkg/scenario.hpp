#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gbfkg/modes.hpp"
#include "gbfkg/pairings.hpp"
#include "gbfkg/random_fields.hpp"
#include "gbfkg/report.hpp"
#include "gbfkg/vacuum.hpp"

namespace gbfkg {

/// Declarative description of one verification run: family, grid, vacuum,
/// sample leaves, seed and check selection. The seed fully determines all
/// random fields, so reports are bit-reproducible.
struct Scenario {
    std::string name = "unnamed";
    std::string family_kind = "minkowski_interval";
    double mass = 1.0;

    // interval grid: count log-spaced |k| pairs in [kmin, kmax]
    std::size_t grid_count = 16;
    double kmin = 0.1, kmax = 10.0;
    // rod/tube grid: omega pairs x l values with m-sum weights
    std::size_t omega_count = 9;
    double omega_min = 0.5, omega_max = 4.0;
    int lmax = 4;

    std::string vacuum_kind = "standard";  // standard|constant|gauge_scaled|random
    cplx vac_ca{1.0, 0.0}, vac_cb{0.0, -1.0};
    cplx gauge_factor{1.0, 0.0};

    std::vector<double> taus;  // sample leaves; defaults per family
    std::uint64_t seed = 20240901;
    Tolerances tol;
    double wronskian_floor = 1e-300;

    std::vector<std::string> checks;  // empty = all applicable
};

Scenario parse_scenario_json(const std::string& bytes);
Scenario load_scenario_file(const std::string& path);
/// Canonical serialization (used for the scenario hash).
std::string scenario_canonical_json(const Scenario& s);
std::uint64_t scenario_hash(const Scenario& s);

/// Materialized scenario: family, grid and vacuum spec instances plus
/// cached contexts at the sample leaves.
struct ScenarioRuntime {
    const Scenario* scenario = nullptr;
    ModeFamily family;
    GridPtr grid;
    VacuumSpec spec;
    std::vector<double> taus;
    Tolerances tol;
    PairingContext ctx0;  // at taus[0], built eagerly (checks run in parallel)

    PairingContext context(double tau, int orientation = +1) const;
    const PairingContext& context0() const { return ctx0; }
    FieldSampler sampler(std::string_view label) const;
};

ScenarioRuntime make_runtime(const Scenario& s);

/// One registered verification check.
struct CheckOutcome {
    double residual = 0.0;
    std::string worst_mode;
    std::string note;
    std::vector<std::pair<std::string, double>> mode_residuals;
};

struct CheckDef {
    std::string id;
    std::string description;
    double tolerance;
    std::set<RegionKind> regions;
    std::function<CheckOutcome(const ScenarioRuntime&)> run;
};

const std::vector<CheckDef>& check_registry();
const CheckDef& find_check(const std::string& id);
/// Ids applicable to the region kind, in registry order.
std::vector<std::string> applicable_checks(RegionKind kind);

/// Executes the scenario's checks (in a pool of `jobs` threads; results
/// are independent of the execution order) and assembles the report.
CheckReport run_scenario(const Scenario& s, int jobs = 1);

/// Exit-code contract shared by the CLI: 0 all-pass, 1 any fail/error.
int report_exit_code(const CheckReport& report);

}  // namespace gbfkg
