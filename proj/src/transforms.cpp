#include "gbfkg/transforms.hpp"

#include "gbfkg/errors.hpp"

namespace gbfkg {

FreqCoeffs real_to_freq(const VacuumSpec& spec, const RealCoeffs& r) {
    FreqCoeffs out = FreqCoeffs::zeros(r.grid);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const SpecEntry e = spec_entry(spec, r.grid->mode(i));
        const cplx pref = -1.0 / (2.0 * kI * e.im_cab);
        const Mat2 m = pref * Mat2{std::conj(e.cb), -std::conj(e.ca),
                                   -e.cb, e.ca};
        std::tie(out.p[i], out.q[i]) = m.apply(r.a[i], r.b[i]);
    }
    return out;
}

RealCoeffs freq_to_real(const VacuumSpec& spec, const FreqCoeffs& f) {
    RealCoeffs out = RealCoeffs::zeros(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const SpecEntry e = spec_entry(spec, f.grid->mode(i));
        const Mat2 m{e.ca, std::conj(e.ca), e.cb, std::conj(e.cb)};
        std::tie(out.a[i], out.b[i]) = m.apply(f.p[i], f.q[i]);
    }
    return out;
}

FreqCoeffs recover_from_initial_data(const PairingContext& ctx,
                                     const InitialData& data) {
    require_same_grid(ctx.grid, data.grid);
    if (data.T != ctx.tau)
        throw ConfigError("recover_from_initial_data: data leaf != context leaf");
    FreqCoeffs out = FreqCoeffs::zeros(data.grid);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const cplx pref =
            1.0 / (2.0 * kI * ctx.im_cab[i] * ctx.wronsk[i]);
        const Mat2 m = pref * Mat2{-std::conj(ctx.dU[i]), std::conj(ctx.U[i]),
                                   ctx.dU[i], -ctx.U[i]};
        std::tie(out.p[i], out.q[i]) = m.apply(data.phi[i], data.dphi[i]);
    }
    return out;
}

InitialData evaluate_solution(const PairingContext& ctx, const FreqCoeffs& f) {
    require_same_grid(ctx.grid, f.grid);
    InitialData out;
    out.grid = f.grid;
    out.T = ctx.tau;
    out.phi.resize(f.size());
    out.dphi.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out.phi[i] = f.p[i] * ctx.U[i] + f.q[i] * std::conj(ctx.U[i]);
        out.dphi[i] = f.p[i] * ctx.dU[i] + f.q[i] * std::conj(ctx.dU[i]);
    }
    return out;
}

LeafConfig restrict_to_leaf(const PairingContext& ctx, const FreqCoeffs& f) {
    require_same_grid(ctx.grid, f.grid);
    LeafConfig out = LeafConfig::zeros(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        out.v[i] = f.p[i] * ctx.U[i] + f.q[i] * std::conj(ctx.U[i]);
    return out;
}

cplx reconstruct_spatial(const ModeFamily& family, const LeafConfig& config,
                         const std::array<double, 3>& point) {
    if (!family.has_spatial())
        throw UnsupportedFamilyError(
            "reconstruct_spatial: family '" + family.name +
            "' provides no spatial modes");
    std::vector<cplx> terms(config.size());
    for (std::size_t i = 0; i < config.size(); ++i)
        terms[i] = config.grid->weight(i) * config.v[i] *
                   family.spatial(config.grid->mode(i), point);
    return pairwise_sum(terms);
}

}  // namespace gbfkg
