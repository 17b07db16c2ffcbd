#include "gbfkg/pairings.hpp"

#include <cmath>

#include "gbfkg/errors.hpp"

namespace gbfkg {

std::pair<cplx, cplx> upsilon(const VacuumSpec& spec, const ModeSample& s,
                              const ModeIndex& idx) {
    const SpecEntry e = spec_entry(spec, idx);
    const cplx u = e.ca * s.Xa + e.cb * s.Xb;
    const cplx du = e.ca * s.dXa + e.cb * s.dXb;
    if (std::abs(u) < 1e-300 || std::abs(du) < 1e-300)
        throw ZeroUpsilonError("upsilon: Upsilon or dUpsilon vanishes at " +
                               mode_label(idx));
    return {u, du};
}

PairingContext make_context(const ModeFamily& family, const VacuumSpec& spec,
                            GridPtr grid, double tau, int orientation) {
    if (orientation != +1 && orientation != -1)
        throw ConfigError("make_context: orientation must be +1 or -1");
    PairingContext ctx;
    ctx.grid = grid;
    ctx.tau = tau;
    ctx.sigma = family.sigma;
    ctx.orientation = orientation;
    const std::size_t n = grid->size();
    ctx.wtilde.resize(n);
    ctx.wronsk.resize(n);
    ctx.im_cab.resize(n);
    ctx.ca.resize(n);
    ctx.cb.resize(n);
    ctx.U.resize(n);
    ctx.dU.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ModeIndex& idx = grid->mode(i);
        const ModeSample s = sample_mode(family, idx, tau);
        const SpecEntry e = spec_entry(spec, idx);
        ctx.wtilde[i] = s.wtilde;
        ctx.wronsk[i] = wronskian(s);
        ctx.im_cab[i] = e.im_cab;
        ctx.ca[i] = e.ca;
        ctx.cb[i] = e.cb;
        auto [u, du] = upsilon(spec, s, idx);
        ctx.U[i] = u;
        ctx.dU[i] = du;
        if (-family.sigma * e.im_cab * ctx.wronsk[i] <= 0.0)
            ctx.positive = false;
    }
    return ctx;
}

PairingContext reversed(PairingContext ctx) {
    ctx.orientation = -ctx.orientation;
    return ctx;
}

void require_positivity(const PairingContext& ctx) {
    if (!ctx.positive)
        throw PositivityError(
            "vacuum positivity -sigma Im(conj(c^a) c^b) W > 0 violated");
}

cplx symplectic_potential(const PairingContext& ctx, const FreqCoeffs& xi,
                          const FreqCoeffs& phi) {
    require_same_grid(ctx.grid, xi.grid);
    require_same_grid(ctx.grid, phi.grid);
    const std::size_t n = ctx.size();
    std::vector<cplx> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = ctx.grid->reflect(i);
        const cplx u = ctx.U[i], du = ctx.dU[i];
        const cplx t = phi.p[i] * xi.p[r] * u * du +
                       phi.p[i] * xi.q[r] * u * std::conj(du) +
                       phi.q[r] * xi.q[i] * std::conj(u) * std::conj(du) +
                       phi.q[r] * xi.p[i] * std::conj(u) * du;
        terms[i] = double(ctx.sigma * ctx.orientation) *
                   ctx.grid->weight(i) * ctx.wtilde[i] * t;
    }
    return pairwise_sum(terms);
}

cplx symplectic_form_c(const PairingContext& ctx, const FreqCoeffs& xi,
                       const FreqCoeffs& zeta) {
    require_same_grid(ctx.grid, xi.grid);
    require_same_grid(ctx.grid, zeta.grid);
    const std::size_t n = ctx.size();
    std::vector<cplx> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = ctx.grid->reflect(i);
        terms[i] = kI * double(ctx.sigma * ctx.orientation) *
                   ctx.grid->weight(i) * ctx.wtilde[i] * ctx.wronsk[i] *
                   ctx.im_cab[i] *
                   (xi.p[i] * zeta.q[r] - xi.q[r] * zeta.p[i]);
    }
    return pairwise_sum(terms);
}

double symplectic_form(const PairingContext& ctx, const FreqCoeffs& xi,
                       const FreqCoeffs& zeta) {
    return symplectic_form_c(ctx, xi, zeta).real();
}

std::vector<cplx> g_product_terms(const PairingContext& ctx,
                                  const FreqCoeffs& xi,
                                  const FreqCoeffs& zeta) {
    require_same_grid(ctx.grid, xi.grid);
    require_same_grid(ctx.grid, zeta.grid);
    require_positivity(ctx);
    const std::size_t n = ctx.size();
    std::vector<cplx> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = ctx.grid->reflect(i);
        terms[i] = -2.0 * ctx.sigma * ctx.wtilde[i] * ctx.wronsk[i] *
                   ctx.im_cab[i] *
                   (xi.p[i] * zeta.q[r] + xi.q[r] * zeta.p[i]);
    }
    return terms;
}

cplx g_product_c(const PairingContext& ctx, const FreqCoeffs& xi,
                 const FreqCoeffs& zeta) {
    const auto terms = g_product_terms(ctx, xi, zeta);
    std::vector<cplx> weighted(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        weighted[i] = ctx.grid->weight(i) * terms[i];
    return pairwise_sum(weighted);
}

double g_product(const PairingContext& ctx, const FreqCoeffs& xi,
                 const FreqCoeffs& zeta) {
    return g_product_c(ctx, xi, zeta).real();
}

cplx complex_inner_product(const PairingContext& ctx, const FreqCoeffs& xi,
                           const FreqCoeffs& zeta) {
    require_same_grid(ctx.grid, xi.grid);
    require_same_grid(ctx.grid, zeta.grid);
    require_positivity(ctx);
    const std::size_t n = ctx.size();
    std::vector<cplx> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = ctx.grid->reflect(i);
        // Orientation reversal swaps which slot contributes p against q.
        const cplx pair = ctx.orientation > 0 ? xi.p[i] * zeta.q[r]
                                              : xi.q[r] * zeta.p[i];
        terms[i] = -4.0 * ctx.sigma * ctx.grid->weight(i) * ctx.wtilde[i] *
                   ctx.wronsk[i] * ctx.im_cab[i] * pair;
    }
    return pairwise_sum(terms);
}

}  // namespace gbfkg
