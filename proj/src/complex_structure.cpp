#include "gbfkg/complex_structure.hpp"

#include <cmath>

#include "gbfkg/errors.hpp"

namespace gbfkg {

Mat2 jab_matrix(const VacuumSpec& spec, const ModeIndex& idx) {
    const SpecEntry e = spec_entry(spec, idx);
    const double inv = 1.0 / e.im_cab;
    return Mat2{inv * e.re_cab, -inv * std::norm(e.ca),
                inv * std::norm(e.cb), -inv * e.re_cab};
}

FreqCoeffs apply_j_freq(const FreqCoeffs& f) {
    FreqCoeffs out = f;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.p[i] *= -kI;
        out.q[i] *= kI;
    }
    return out;
}

RealCoeffs apply_j_real(const VacuumSpec& spec, const RealCoeffs& r) {
    RealCoeffs out = r;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Mat2 j = jab_matrix(spec, r.grid->mode(i));
        std::tie(out.a[i], out.b[i]) = j.apply(r.a[i], r.b[i]);
    }
    return out;
}

VacuumInvariants vacuum_invariants(const VacuumSpec& spec,
                                   const ModeIndex& idx) {
    const SpecEntry e = spec_entry_unchecked(spec, idx);
    if (std::abs(e.ca) == 0.0 || std::abs(e.cb) == 0.0)
        throw ZeroComponentError("vacuum_invariants: c^a and c^b must be nonzero");
    double d = std::arg(e.cb) - std::arg(e.ca);
    while (d > M_PI) d -= 2.0 * M_PI;
    while (d <= -M_PI) d += 2.0 * M_PI;
    if (std::abs(e.im_cab) < 1e-300)
        throw DegenerateSpecError(
            "vacuum_invariants: dAlpha in {0, pi} (degenerate pair)");
    return {std::abs(e.ca) / std::abs(e.cb), d};
}

MnProjectors projectors_mn(const PairingContext& ctx, std::size_t mode_pos) {
    const cplx u = ctx.U[mode_pos];
    const cplx du = ctx.dU[mode_pos];
    const cplx pref =
        1.0 / (2.0 * kI * ctx.im_cab[mode_pos] * ctx.wronsk[mode_pos]);
    const Mat2 pm = pref * Mat2{std::conj(u) * du, std::conj(u) * std::conj(du),
                                -u * du, -u * std::conj(du)};
    const Mat2 pn =
        pref * Mat2{-u * std::conj(du), -std::conj(u) * std::conj(du),
                    u * du, std::conj(u) * du};
    return {pm, pn};
}

namespace {

FreqCoeffs apply_mn(const PairingContext& ctx, const FreqCoeffs& f, bool m) {
    require_same_grid(ctx.grid, f.grid);
    FreqCoeffs out = FreqCoeffs::zeros(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const MnProjectors pr = projectors_mn(ctx, i);
        const Mat2& mat = m ? pr.PM : pr.PN;
        std::tie(out.p[i], out.q[i]) = mat.apply(f.p[i], f.q[i]);
    }
    return out;
}

}  // namespace

FreqCoeffs apply_pm(const PairingContext& ctx, const FreqCoeffs& f) {
    return apply_mn(ctx, f, true);
}

FreqCoeffs apply_pn(const PairingContext& ctx, const FreqCoeffs& f) {
    return apply_mn(ctx, f, false);
}

PmProjection projectors_pm(const FreqCoeffs& f) {
    PmProjection out{FreqCoeffs::zeros(f.grid), FreqCoeffs::zeros(f.grid)};
    out.plus.q = f.q;
    out.minus.p = f.p;
    return out;
}

FreqCoeffs j_sigma_map(const PairingContext& ctx, const LeafConfig& kappa) {
    require_same_grid(ctx.grid, kappa.grid);
    FreqCoeffs out = FreqCoeffs::zeros(kappa.grid);
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        out.p[i] = kappa.v[i] / (2.0 * ctx.U[i]);
        out.q[i] = kappa.v[i] / (2.0 * std::conj(ctx.U[i]));
    }
    return out;
}

}  // namespace gbfkg
