#include "gbfkg/modes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gbfkg/special_functions.hpp"

namespace gbfkg {

ModeIndex reflected(const ModeIndex& idx) {
    if (const auto* iv = std::get_if<IntervalIndex>(&idx))
        return IntervalIndex{{-iv->k[0], -iv->k[1], -iv->k[2]}};
    const auto& r = std::get<RodIndex>(idx);
    return RodIndex{-r.omega, r.l, -r.m};
}

bool is_rod_index(const ModeIndex& idx) {
    return std::holds_alternative<RodIndex>(idx);
}

std::string mode_label(const ModeIndex& idx) {
    std::ostringstream os;
    if (const auto* iv = std::get_if<IntervalIndex>(&idx)) {
        os << "k=(" << iv->k[0] << "," << iv->k[1] << "," << iv->k[2] << ")";
    } else {
        const auto& r = std::get<RodIndex>(idx);
        os << "w=" << r.omega << " l=" << r.l << " m=" << r.m;
    }
    return os.str();
}

ModeGrid::ModeGrid(std::vector<ModeIndex> modes, std::vector<double> weights)
    : modes_(std::move(modes)), weights_(std::move(weights)) {
    if (modes_.size() != weights_.size())
        throw ConfigError("ModeGrid: modes/weights size mismatch");
    reflect_.resize(modes_.size());
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (weights_[i] <= 0.0)
            throw ConfigError("ModeGrid: weights must be strictly positive");
        if (const auto* r = std::get_if<RodIndex>(&modes_[i]))
            if (std::abs(r->m) > r->l)
                throw ConfigError("ModeGrid: rod index violates |m| <= l");
        const ModeIndex want = reflected(modes_[i]);
        const auto it = std::find(modes_.begin(), modes_.end(), want);
        if (it == modes_.end())
            throw ConfigError("ModeGrid: not closed under reflection near " +
                              mode_label(modes_[i]));
        reflect_[i] = static_cast<std::size_t>(it - modes_.begin());
    }
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (reflect_[reflect_[i]] != i)
            throw ConfigError("ModeGrid: reflection is not an involution");
        if (weights_[i] != weights_[reflect_[i]])
            throw ConfigError("ModeGrid: weights not reflection-symmetric");
    }
}

std::size_t ModeGrid::find(const ModeIndex& idx) const {
    const auto it = std::find(modes_.begin(), modes_.end(), idx);
    if (it == modes_.end())
        throw ConfigError("ModeGrid: index not on grid: " + mode_label(idx));
    return static_cast<std::size_t>(it - modes_.begin());
}

ModeSample sample_mode(const ModeFamily& family, const ModeIndex& idx,
                       double tau) {
    const bool needs_rod = family.kind != RegionKind::Interval;
    if (is_rod_index(idx) != needs_rod)
        throw FamilyDomainError("sample_mode: index kind does not match '" +
                                family.name + "'");
    if (!(tau > family.tau_min && tau < family.tau_max))
        throw FamilyDomainError("sample_mode: tau outside domain of '" +
                                family.name + "'");
    return family.eval(idx, tau);
}

double wronskian(const ModeSample& s, double degeneracy_floor) {
    const double w = s.Xa * s.dXb - s.Xb * s.dXa;
    if (std::abs(w) < degeneracy_floor)
        throw DegenerateModeError("wronskian: X^a, X^b linearly dependent");
    return w;
}

double weighted_wronskian_residual(const ModeFamily& family,
                                   const ModeIndex& idx,
                                   std::vector<double> tau_grid) {
    if (tau_grid.empty())
        throw FamilyDomainError("weighted_wronskian_residual: empty tau grid");
    if (tau_grid.size() == 1) tau_grid.push_back(tau_grid.front());
    const ModeSample s0 = sample_mode(family, idx, tau_grid.front());
    const double ref = s0.wtilde * wronskian(s0);
    double worst = 0.0;
    for (double tau : tau_grid) {
        const ModeSample s = sample_mode(family, idx, tau);
        const double ww = s.wtilde * wronskian(s);
        worst = std::max(worst, std::abs(ww - ref) / std::abs(ref));
    }
    return worst;
}

namespace {

double interval_energy(const ModeIndex& idx, double mass) {
    const auto& k = std::get<IntervalIndex>(idx).k;
    return std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + mass * mass);
}

double rod_radial_momentum(const ModeIndex& idx, double mass) {
    const auto& r = std::get<RodIndex>(idx);
    const double p2 = r.omega * r.omega - mass * mass;
    if (p2 <= 0.0)
        throw FamilyDomainError(
            "rod family: requires omega^2 > mass^2 at " + mode_label(idx));
    return std::sqrt(p2);
}

ModeFamily radial_bessel_family(RegionKind kind, double mass,
                                std::string name) {
    ModeFamily f;
    f.kind = kind;
    f.tau_min = 0.0;  // y_l singular at r = 0
    f.tau_max = 1e300;
    f.sigma = -1;  // sign(g_00) sign(g^rr) in Minkowski
    f.name = std::move(name);
    f.eval = [mass](const ModeIndex& idx, double r) {
        const auto& ri = std::get<RodIndex>(idx);
        const double p = rod_radial_momentum(idx, mass);
        const SphBesselPair b = sph_bessel_pair(ri.l, p * r);
        ModeSample s;
        s.Xa = b.j;
        s.Xb = b.y;
        s.dXa = p * b.dj;
        s.dXb = p * b.dy;
        s.wtilde = r * r;
        s.sigma = -1;
        s.tau = r;
        return s;
    };
    f.spatial = [](const ModeIndex& idx, const std::array<double, 3>& pt) {
        // pt = (t, theta, phi) on the hypercylinder
        const auto& ri = std::get<RodIndex>(idx);
        return std::exp(-kI * ri.omega * pt[0]) /
                   std::sqrt(2.0 * M_PI) *
               spherical_harmonic(ri.l, ri.m, pt[1], pt[2]);
    };
    return f;
}

}  // namespace

ModeFamily minkowski_interval_family(double mass) {
    ModeFamily f;
    f.kind = RegionKind::Interval;
    f.sigma = +1;
    f.name = "minkowski_interval";
    f.eval = [mass](const ModeIndex& idx, double tau) {
        const double E = interval_energy(idx, mass);
        ModeSample s;
        s.Xa = std::cos(E * tau);
        s.Xb = std::sin(E * tau);
        s.dXa = -E * std::sin(E * tau);
        s.dXb = E * std::cos(E * tau);
        s.wtilde = 1.0;
        s.sigma = +1;
        s.tau = tau;
        return s;
    };
    f.spatial = [](const ModeIndex& idx, const std::array<double, 3>& x) {
        const auto& k = std::get<IntervalIndex>(idx).k;
        const double kx = k[0] * x[0] + k[1] * x[1] + k[2] * x[2];
        return std::exp(kI * kx) / std::pow(2.0 * M_PI, 1.5);
    };
    return f;
}

ModeFamily minkowski_rod_family(double mass) {
    return radial_bessel_family(RegionKind::Rod, mass, "minkowski_rod");
}

ModeFamily minkowski_tube_family(double mass) {
    return radial_bessel_family(RegionKind::Tube, mass, "minkowski_tube");
}

ModeFamily user_family(
    RegionKind kind, double tau_min, double tau_max, int sigma,
    std::function<ModeSample(const ModeIndex&, double)> eval,
    std::function<cplx(const ModeIndex&, const std::array<double, 3>&)>
        spatial) {
    ModeFamily f;
    f.kind = kind;
    f.tau_min = tau_min;
    f.tau_max = tau_max;
    f.sigma = sigma;
    f.name = "user";
    f.eval = std::move(eval);
    f.spatial = std::move(spatial);
    return f;
}

GridPtr interval_log_grid(std::size_t count, double kmin, double kmax) {
    if (count < 1 || kmin <= 0.0 || kmax <= kmin)
        throw ConfigError("interval_log_grid: bad parameters");
    std::vector<ModeIndex> modes;
    std::vector<double> weights;
    for (std::size_t i = 0; i < count; ++i) {
        const double t =
            count == 1 ? 0.0 : double(i) / double(count - 1);
        const double k = kmin * std::pow(kmax / kmin, t);
        modes.push_back(IntervalIndex{{k, 0.0, 0.0}});
        weights.push_back(1.0);
        modes.push_back(IntervalIndex{{-k, 0.0, 0.0}});
        weights.push_back(1.0);
    }
    return std::make_shared<ModeGrid>(std::move(modes), std::move(weights));
}

GridPtr rod_grid(std::size_t omega_count, double omega_min, double omega_max,
                 int lmax) {
    if (omega_count < 1 || omega_min <= 0.0 || omega_max < omega_min ||
        lmax < 0)
        throw ConfigError("rod_grid: bad parameters");
    std::vector<ModeIndex> modes;
    std::vector<double> weights;
    for (std::size_t i = 0; i < omega_count; ++i) {
        const double t =
            omega_count == 1 ? 0.0 : double(i) / double(omega_count - 1);
        const double w = omega_min + (omega_max - omega_min) * t;
        for (int sign : {+1, -1}) {
            for (int l = 0; l <= lmax; ++l) {
                modes.push_back(RodIndex{sign * w, l, 0});
                weights.push_back(2.0 * l + 1.0);  // m_l-sum degeneracy
            }
        }
    }
    return std::make_shared<ModeGrid>(std::move(modes), std::move(weights));
}

}  // namespace gbfkg
