#include "gbfkg/phase_space.hpp"

#include <algorithm>
#include <cmath>

#include "gbfkg/errors.hpp"

namespace gbfkg {

AbdcEigs abdc_operators(const PairingContext& ctx, std::size_t mode_pos) {
    const cplx u = ctx.U[mode_pos];
    const cplx du = ctx.dU[mode_pos];
    const double w = ctx.wronsk[mode_pos];
    const double imz = ctx.im_cab[mode_pos];
    const double wt = ctx.wtilde[mode_pos];
    AbdcEigs e;
    const double binv = -wt * imz * w / std::norm(u);
    e.B = 1.0 / binv;
    e.C = -(std::conj(u) * du).real() / (w * imz);
    e.A = -e.C;
    e.D = wt * std::norm(du) / (w * imz);
    return e;
}

double abdc_constraint_residual(const AbdcEigs& e) {
    const double r1 = std::abs(e.A * e.A + e.B * e.D + 1.0);
    const double r2 = std::abs(e.C * e.C + e.D * e.B + 1.0);
    const double r3 = std::abs(e.A * e.B + e.B * e.C);
    const double r4 = std::abs(e.D * e.A + e.C * e.D);
    const double r5 = std::abs(e.A + e.C);
    return std::max({r1, r2, r3, r4, r5});
}

Mat2 f_matrix(const PairingContext& ctx, std::size_t mode_pos) {
    const cplx u = ctx.U[mode_pos];
    const cplx du = ctx.dU[mode_pos];
    const double wt = ctx.wtilde[mode_pos];
    const cplx pref =
        1.0 / (2.0 * kI * ctx.im_cab[mode_pos] * ctx.wronsk[mode_pos]);
    return pref * Mat2{-std::conj(du), std::conj(u) / wt, du, -u / wt};
}

double conjugation_residual_with(const PairingContext& ctx,
                                 std::size_t mode_pos, const AbdcEigs& e) {
    const Mat2 F = f_matrix(ctx, mode_pos);
    const Mat2 M{e.A, e.B, e.D, e.C};
    const Mat2 lhs = F * M;
    const Mat2 rhs = Mat2::diag(-kI, kI) * F;
    return (lhs - rhs).frobenius_norm();
}

double conjugation_residual(const PairingContext& ctx, std::size_t mode_pos) {
    return conjugation_residual_with(ctx, mode_pos,
                                     abdc_operators(ctx, mode_pos));
}

double m_condition_residual(const PairingContext& ctx, std::size_t mode_pos,
                            cplx p, cplx q) {
    const cplx u = ctx.U[mode_pos];
    const cplx t1 = p * u, t2 = q * std::conj(u);
    const double scale = std::max({std::abs(t1), std::abs(t2), 1e-300});
    return std::abs(t1 + t2) / scale;
}

double n_condition_residual(const PairingContext& ctx, std::size_t mode_pos,
                            cplx p, cplx q) {
    const cplx du = ctx.dU[mode_pos];
    const cplx t1 = p * du, t2 = q * std::conj(du);
    const double scale = std::max({std::abs(t1), std::abs(t2), 1e-300});
    return std::abs(t1 + t2) / scale;
}

double PhaseSubspaceResiduals::worst() const {
    return std::max({a_to_n, b_to_n, d_to_m, c_to_m});
}

PhaseSubspaceResiduals phase_subspace_relations(const PairingContext& ctx,
                                                std::size_t mode_pos,
                                                cplx vph, cplx pi) {
    const AbdcEigs e = abdc_operators(ctx, mode_pos);
    const Mat2 F = f_matrix(ctx, mode_pos);
    PhaseSubspaceResiduals out{};
    // (A vph, 0) and (B pi, 0) induce solutions with vanishing derivative.
    {
        auto [p, q] = F.apply(e.A * vph, 0.0);
        out.a_to_n = n_condition_residual(ctx, mode_pos, p, q);
    }
    {
        auto [p, q] = F.apply(e.B * pi, 0.0);
        out.b_to_n = n_condition_residual(ctx, mode_pos, p, q);
    }
    // (0, D vph) and (0, C pi) induce solutions vanishing on the leaf.
    {
        auto [p, q] = F.apply(0.0, e.D * vph);
        out.d_to_m = m_condition_residual(ctx, mode_pos, p, q);
    }
    {
        auto [p, q] = F.apply(0.0, e.C * pi);
        out.c_to_m = m_condition_residual(ctx, mode_pos, p, q);
    }
    return out;
}

cplx phase_symplectic_form(const PairingContext& ctx, const PhasePoint& x,
                           const PhasePoint& y) {
    require_same_grid(ctx.grid, x.grid);
    require_same_grid(ctx.grid, y.grid);
    std::vector<cplx> terms(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const std::size_t r = ctx.grid->reflect(i);
        terms[i] = -0.5 * ctx.sigma * ctx.orientation * ctx.grid->weight(i) *
                   (x.vph[i] * y.pi[r] - y.vph[i] * x.pi[r]);
    }
    return pairwise_sum(terms);
}

PhasePoint apply_j_phase(const PairingContext& ctx, const PhasePoint& x) {
    require_same_grid(ctx.grid, x.grid);
    PhasePoint out;
    out.grid = x.grid;
    out.vph.resize(x.size());
    out.pi.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const AbdcEigs e = abdc_operators(ctx, i);
        out.vph[i] = e.A * x.vph[i] + e.B * x.pi[i];
        out.pi[i] = e.D * x.vph[i] + e.C * x.pi[i];
    }
    return out;
}

}  // namespace gbfkg
