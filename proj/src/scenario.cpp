#include "gbfkg/scenario.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gbfkg/errors.hpp"

namespace gbfkg {

namespace {
using njson = nlohmann::ordered_json;

RegionKind region_of(const std::string& family_kind) {
    if (family_kind == "minkowski_interval") return RegionKind::Interval;
    if (family_kind == "minkowski_rod") return RegionKind::Rod;
    if (family_kind == "minkowski_tube") return RegionKind::Tube;
    throw ConfigError("unknown family kind '" + family_kind + "'");
}

cplx parse_cplx(const njson& j) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

njson cplx_json(cplx z) { return njson::array({z.real(), z.imag()}); }

}  // namespace

Scenario parse_scenario_json(const std::string& bytes) {
    njson j;
    try {
        j = njson::parse(bytes);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("scenario parse: ") + e.what());
    }
    Scenario s;
    try {
        if (j.contains("name")) s.name = j["name"].get<std::string>();
        const auto& fam = j.at("family");
        s.family_kind = fam.at("kind").get<std::string>();
        region_of(s.family_kind);  // validate
        if (fam.contains("mass")) s.mass = fam["mass"].get<double>();
        if (j.contains("grid")) {
            const auto& g = j["grid"];
            if (g.contains("count")) s.grid_count = g["count"].get<std::size_t>();
            if (g.contains("kmin")) s.kmin = g["kmin"].get<double>();
            if (g.contains("kmax")) s.kmax = g["kmax"].get<double>();
            if (g.contains("omega_count"))
                s.omega_count = g["omega_count"].get<std::size_t>();
            if (g.contains("omega_min")) s.omega_min = g["omega_min"].get<double>();
            if (g.contains("omega_max")) s.omega_max = g["omega_max"].get<double>();
            if (g.contains("lmax")) s.lmax = g["lmax"].get<int>();
        }
        if (j.contains("vacuum")) {
            const auto& v = j["vacuum"];
            s.vacuum_kind = v.at("kind").get<std::string>();
            if (v.contains("ca")) s.vac_ca = parse_cplx(v["ca"]);
            if (v.contains("cb")) s.vac_cb = parse_cplx(v["cb"]);
            if (v.contains("factor")) s.gauge_factor = parse_cplx(v["factor"]);
        }
        if (j.contains("taus")) s.taus = j["taus"].get<std::vector<double>>();
        if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("tolerances")) {
            const auto& t = j["tolerances"];
            if (t.contains("relative")) s.tol.relative = t["relative"].get<double>();
            if (t.contains("absolute")) s.tol.absolute = t["absolute"].get<double>();
            if (t.contains("scale")) s.tol.scale = t["scale"].get<double>();
        }
        if (j.contains("wronskian_floor"))
            s.wronskian_floor = j["wronskian_floor"].get<double>();
        if (j.contains("checks")) {
            if (j["checks"].is_string()) {
                if (j["checks"].get<std::string>() != "all")
                    throw ConfigError("checks: expected \"all\" or a list");
            } else {
                s.checks = j["checks"].get<std::vector<std::string>>();
            }
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("scenario parse: ") + e.what());
    }
    for (const std::string& id : s.checks) find_check(id);  // validate early
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario_json(buf.str());
}

std::string scenario_canonical_json(const Scenario& s) {
    njson j;
    j["name"] = s.name;
    j["family"] = {{"kind", s.family_kind}, {"mass", s.mass}};
    if (region_of(s.family_kind) == RegionKind::Interval)
        j["grid"] = {{"count", s.grid_count}, {"kmin", s.kmin}, {"kmax", s.kmax}};
    else
        j["grid"] = {{"omega_count", s.omega_count},
                     {"omega_min", s.omega_min},
                     {"omega_max", s.omega_max},
                     {"lmax", s.lmax}};
    j["vacuum"] = {{"kind", s.vacuum_kind},
                   {"ca", cplx_json(s.vac_ca)},
                   {"cb", cplx_json(s.vac_cb)},
                   {"factor", cplx_json(s.gauge_factor)}};
    j["taus"] = s.taus;
    j["seed"] = s.seed;
    j["tolerances"] = {{"relative", s.tol.relative},
                       {"absolute", s.tol.absolute},
                       {"scale", s.tol.scale}};
    j["wronskian_floor"] = s.wronskian_floor;
    j["checks"] = s.checks.empty() ? njson("all") : njson(s.checks);
    return j.dump();
}

std::uint64_t scenario_hash(const Scenario& s) {
    return fnv1a64(scenario_canonical_json(s));
}

PairingContext ScenarioRuntime::context(double tau, int orientation) const {
    return make_context(family, spec, grid, tau, orientation);
}

FieldSampler ScenarioRuntime::sampler(std::string_view label) const {
    return FieldSampler::keyed(scenario->seed, label);
}

ScenarioRuntime make_runtime(const Scenario& s) {
    ScenarioRuntime rt;
    rt.scenario = &s;
    const RegionKind kind = region_of(s.family_kind);
    switch (kind) {
        case RegionKind::Interval:
            rt.family = minkowski_interval_family(s.mass);
            rt.grid = interval_log_grid(s.grid_count, s.kmin, s.kmax);
            rt.taus = s.taus.empty()
                          ? std::vector<double>{0.0, 0.3, 0.7, 1.3, 1.7}
                          : s.taus;
            break;
        case RegionKind::Rod:
        case RegionKind::Tube:
            rt.family = kind == RegionKind::Rod
                            ? minkowski_rod_family(s.mass)
                            : minkowski_tube_family(s.mass);
            rt.grid = rod_grid(s.omega_count, s.omega_min, s.omega_max, s.lmax);
            rt.taus = s.taus.empty()
                          ? std::vector<double>{0.6, 1.0, 1.7, 2.6, 4.1}
                          : s.taus;
            break;
    }
    VacuumSpec base = standard_spec(kind);
    if (s.vacuum_kind == "standard") {
        rt.spec = base;
    } else if (s.vacuum_kind == "constant") {
        rt.spec = constant_spec(s.vac_ca, s.vac_cb);
    } else if (s.vacuum_kind == "gauge_scaled") {
        rt.spec = gauge_scaled(base, [f = s.gauge_factor](const ModeIndex&) {
            return f;
        });
    } else if (s.vacuum_kind == "random") {
        FieldSampler fs = FieldSampler::keyed(s.seed, "vacuum-spec");
        // Built-in families have W > 0 throughout their domains.
        rt.spec = fs.random_admissible_spec(rt.grid, rt.family.sigma, +1.0);
    } else {
        throw ConfigError("unknown vacuum kind '" + s.vacuum_kind + "'");
    }
    rt.tol = s.tol;
    rt.ctx0 = rt.context(rt.taus.at(0));
    return rt;
}

const CheckDef& find_check(const std::string& id) {
    for (const CheckDef& def : check_registry())
        if (def.id == id) return def;
    throw UnknownCheckError("unknown check id '" + id + "'");
}

std::vector<std::string> applicable_checks(RegionKind kind) {
    std::vector<std::string> out;
    for (const CheckDef& def : check_registry())
        if (def.regions.count(kind)) out.push_back(def.id);
    return out;
}

namespace {

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

CheckResult run_one(const ScenarioRuntime& rt, const CheckDef& def,
                    double tol_scale) {
    CheckResult res;
    res.id = def.id;
    res.tolerance = def.tolerance * tol_scale;
    const auto start = std::chrono::steady_clock::now();
    try {
        CheckOutcome out = def.run(rt);
        res.residual = out.residual;
        res.worst_mode = std::move(out.worst_mode);
        res.note = std::move(out.note);
        res.mode_residuals = std::move(out.mode_residuals);
        res.status = res.residual <= res.tolerance ? CheckStatus::Pass
                                                   : CheckStatus::Fail;
    } catch (const std::exception& e) {
        res.status = CheckStatus::Error;
        res.note = e.what();
    }
    res.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return res;
}

}  // namespace

CheckReport run_scenario(const Scenario& s, int jobs) {
    const RegionKind kind = region_of(s.family_kind);
    std::vector<std::string> ids =
        s.checks.empty() ? applicable_checks(kind) : s.checks;
    for (const std::string& id : ids) {
        const CheckDef& def = find_check(id);
        if (!def.regions.count(kind))
            throw ConfigError("check '" + id + "' does not apply to family '" +
                              s.family_kind + "'");
    }

    CheckReport report;
    report.scenario_hash = scenario_hash(s);
    report.seed = s.seed;
    report.scenario_name = s.name;
    report.family = s.family_kind;
    report.timestamp = iso_timestamp();

    ScenarioRuntime rt;
    bool runtime_ok = true;
    std::string runtime_error;
    try {
        rt = make_runtime(s);
        report.mode_count = rt.grid->size();
    } catch (const ConfigError&) {
        throw;  // malformed scenario: usage error, not a check failure
    } catch (const std::exception& e) {
        runtime_ok = false;
        runtime_error = e.what();
    }

    report.checks.resize(ids.size());
    if (!runtime_ok) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            report.checks[i].id = ids[i];
            report.checks[i].status = CheckStatus::Error;
            report.checks[i].note = runtime_error;
        }
        return report;
    }

    const int nthreads =
        std::max(1, std::min<int>(jobs, static_cast<int>(ids.size())));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            report.checks[i] = run_one(rt, find_check(ids[i]), s.tol.scale);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= ids.size()) return;
                report.checks[i] = run_one(rt, find_check(ids[i]), s.tol.scale);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return report;
}

int report_exit_code(const CheckReport& report) {
    return report.all_passed() ? 0 : 1;
}

}  // namespace gbfkg
