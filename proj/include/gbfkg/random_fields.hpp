#pragma once

#include <cstdint>

#include "gbfkg/coefficients.hpp"
#include "gbfkg/modes.hpp"
#include "gbfkg/vacuum.hpp"

namespace gbfkg {

/// Deterministic Gaussian sampler (splitmix64 + Box-Muller, fixed
/// algorithm so streams are reproducible across toolchains). Every
/// random field in the verification suites comes from here, keyed by the
/// scenario seed so reports are bit-stable.
class FieldSampler {
public:
    explicit FieldSampler(std::uint64_t seed) : state_(seed) {}

    /// Substream derived from a seed and a label (check id); independent
    /// of the order in which checks run.
    static FieldSampler keyed(std::uint64_t seed, std::string_view label);

    double uniform();  // [0, 1)
    double gauss();
    cplx cgauss();

    /// Unconstrained complex coefficients.
    FreqCoeffs complex_field(GridPtr grid);
    LeafConfig complex_config(GridPtr grid);

    /// Reflection-symmetrized complex Gaussians: a real field.
    FreqCoeffs real_field(GridPtr grid);
    LeafConfig real_config(GridPtr grid);

    /// Real-expansion coefficients of a real rod boundary field.
    RealCoeffs real_ab_field(GridPtr grid);

    /// Random admissible vacuum pair table on the grid: moduli log-uniform
    /// in [1/3, 3], phase difference bounded away from {0, pi}, sign of
    /// Im(conj(ca) cb) chosen so that -sigma Im W > 0.
    VacuumSpec random_admissible_spec(GridPtr grid, int sigma,
                                      double wronskian_sign);

    /// Nonzero complex gauge factor, reflection-symmetric on the grid.
    std::function<cplx(const ModeIndex&)> random_gauge_factor(GridPtr grid);

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;

    std::uint64_t next_u64();
};

}  // namespace gbfkg
