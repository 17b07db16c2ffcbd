#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gbfkg/errors.hpp"
#include "gbfkg/types.hpp"

namespace gbfkg {

/// Continuous momentum triple labelling an interval-region mode.
struct IntervalIndex {
    std::array<double, 3> k{};

    bool operator==(const IntervalIndex&) const = default;
};

/// Discrete hypercylinder momentum (omega, l, m_l) with |m_l| <= l.
struct RodIndex {
    double omega = 0.0;
    int l = 0;
    int m = 0;

    bool operator==(const RodIndex&) const = default;
};

using ModeIndex = std::variant<IntervalIndex, RodIndex>;

/// The momentum-reflection involution: k -> -k, (omega,l,m) -> (-omega,l,-m).
ModeIndex reflected(const ModeIndex& idx);

bool is_rod_index(const ModeIndex& idx);

/// Short human-readable label for reports ("k=(0.1,0,0)", "w=0.5 l=2 m=0").
std::string mode_label(const ModeIndex& idx);

/// Quadrature grid over momentum space, closed under reflection, with
/// strictly positive weights that stand in for the continuum measure
/// (d^3k, or d-omega times the m_l-degeneracy sum).
class ModeGrid {
public:
    ModeGrid(std::vector<ModeIndex> modes, std::vector<double> weights);

    std::size_t size() const { return modes_.size(); }
    const ModeIndex& mode(std::size_t i) const { return modes_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }
    /// Position of the reflection partner of entry i.
    std::size_t reflect(std::size_t i) const { return reflect_[i]; }
    bool self_paired(std::size_t i) const { return reflect_[i] == i; }

    /// Exact-match lookup; throws if the index is not a grid entry.
    std::size_t find(const ModeIndex& idx) const;

    bool operator==(const ModeGrid& o) const {
        return modes_ == o.modes_ && weights_ == o.weights_;
    }

private:
    std::vector<ModeIndex> modes_;
    std::vector<double> weights_;
    std::vector<std::size_t> reflect_;
};

using GridPtr = std::shared_ptr<const ModeGrid>;

/// Tau-dependent data of one mode: the two real solutions of the
/// separated equation, their tau-derivatives, the leaf weight and the
/// metric sign product sigma = sign(g_00) sign(g^tautau).
struct ModeSample {
    double Xa = 0.0, Xb = 0.0;
    double dXa = 0.0, dXb = 0.0;
    double wtilde = 1.0;
    int sigma = +1;
    double tau = 0.0;
};

enum class RegionKind { Interval, Tube, Rod };

/// A family of separated-solution modes for one region geometry. The
/// evaluator must return analytic derivatives, and must be symmetric
/// under momentum reflection. Evaluators are pure and stateless.
struct ModeFamily {
    RegionKind kind = RegionKind::Interval;
    double tau_min = -1e300;
    double tau_max = 1e300;
    int sigma = +1;
    std::string name;
    std::function<ModeSample(const ModeIndex&, double)> eval;
    /// Optional spatial mode U_k(x) or U_{wlm}(t,Omega); used only by the
    /// configuration-space reconstruction path.
    std::function<cplx(const ModeIndex&, const std::array<double, 3>&)> spatial;

    bool has_spatial() const { return static_cast<bool>(spatial); }
};

/// Evaluates a family at (idx, tau), validating the domain and the
/// index/region-kind match.
ModeSample sample_mode(const ModeFamily& family, const ModeIndex& idx,
                       double tau);

/// W = Xa dXb - Xb dXa. Throws DegenerateModeError below the floor.
double wronskian(const ModeSample& s, double degeneracy_floor = 1e-300);

/// max_tau |wW(tau) - wW(tau_0)| / |wW(tau_0)| over the given grid of
/// leaf parameters; zero for genuine mode families.
double weighted_wronskian_residual(const ModeFamily& family,
                                   const ModeIndex& idx,
                                   std::vector<double> tau_grid);

/// Built-in families. Interval: Xa = cos(E tau), Xb = sin(E tau) with
/// E = sqrt(k^2 + m^2), wtilde = 1, sigma = +1. Rod and tube: Xa = j_l(p r),
/// Xb = y_l(p r) with p = sqrt(omega^2 - m^2) (omega^2 > m^2 required),
/// wtilde = r^2, sigma = -1, domain r > 0.
ModeFamily minkowski_interval_family(double mass);
ModeFamily minkowski_rod_family(double mass);
ModeFamily minkowski_tube_family(double mass);

/// Family from externally supplied evaluators.
ModeFamily user_family(
    RegionKind kind, double tau_min, double tau_max, int sigma,
    std::function<ModeSample(const ModeIndex&, double)> eval,
    std::function<cplx(const ModeIndex&, const std::array<double, 3>&)>
        spatial = {});

/// Reflection-closed 1D radial proxy grid: count log-spaced |k| values in
/// [kmin, kmax] along the x-axis plus their reflections, unit weights.
GridPtr interval_log_grid(std::size_t count, double kmin, double kmax);

/// Rod grid: omega in +/- {omega_count values linearly spaced in
/// [omega_min, omega_max]}, l in {0..lmax}, m_l = 0 entries carrying the
/// m_l-sum degeneracy weight (2l+1).
GridPtr rod_grid(std::size_t omega_count, double omega_min, double omega_max,
                 int lmax);

}  // namespace gbfkg
