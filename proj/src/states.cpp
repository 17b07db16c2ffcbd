#include "gbfkg/states.hpp"

#include <cmath>

#include "gbfkg/errors.hpp"
#include "gbfkg/transforms.hpp"

namespace gbfkg {

cplx vacuum_operator_eig(const PairingContext& ctx, std::size_t mode_pos) {
    return -kI * double(ctx.sigma) * ctx.wtilde[mode_pos] *
           std::conj(ctx.dU[mode_pos]) / std::conj(ctx.U[mode_pos]);
}

double vacuum_norm_log_density(const PairingContext& ctx,
                               std::size_t mode_pos) {
    const double arg = ctx.wtilde[mode_pos] *
                       std::abs(2.0 * ctx.im_cab[mode_pos] *
                                ctx.wronsk[mode_pos]) /
                       (2.0 * M_PI * std::norm(ctx.U[mode_pos]));
    return 0.25 * std::log(arg);
}

cplx omega_vacuum_form(const PairingContext& ctx, const LeafConfig& phi,
                       const LeafConfig& chi) {
    const FreqCoeffs jphi = j_sigma_map(ctx, phi);
    const FreqCoeffs jchi = j_sigma_map(ctx, chi);
    return g_product_c(ctx, jphi, jchi) -
           kI * symplectic_potential(ctx, jphi, jchi);
}

cplx omega_vacuum_direct(const PairingContext& ctx, const LeafConfig& phi,
                         const LeafConfig& chi) {
    require_same_grid(ctx.grid, phi.grid);
    require_same_grid(ctx.grid, chi.grid);
    std::vector<cplx> terms(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const std::size_t r = ctx.grid->reflect(i);
        terms[i] = ctx.grid->weight(i) * vacuum_operator_eig(ctx, i) *
                   phi.v[i] * chi.v[r];
    }
    return pairwise_sum(terms);
}

double kd_eig(const PairingContext& ctx, std::size_t mode_pos) {
    require_positivity(ctx);
    return 1.0 / (-2.0 * ctx.sigma * ctx.im_cab[mode_pos] *
                  ctx.wtilde[mode_pos] * ctx.wronsk[mode_pos]);
}

FreqCoeffs characterizing_solution(const PairingContext& ctx,
                                   const LeafConfig& eta) {
    require_same_grid(ctx.grid, eta.grid);
    FreqCoeffs out = FreqCoeffs::zeros(eta.grid);
    for (std::size_t i = 0; i < eta.size(); ++i) {
        const double kd = kd_eig(ctx, i);
        const std::size_t r = ctx.grid->reflect(i);
        out.p[i] = kd * eta.v[i];
        out.q[i] = kd * std::conj(eta.v[r]);
    }
    return out;
}

cplx coherent_inner_product_schrodinger(const PairingContext& ctx,
                                        const LeafConfig& eta,
                                        const LeafConfig& kappa) {
    require_same_grid(ctx.grid, eta.grid);
    require_same_grid(ctx.grid, kappa.grid);
    std::vector<cplx> terms(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const double kd = kd_eig(ctx, i);
        terms[i] = ctx.grid->weight(i) * kd *
                   (std::conj(eta.v[i]) * kappa.v[i] -
                    0.5 * std::norm(eta.v[i]) - 0.5 * std::norm(kappa.v[i]));
    }
    return std::exp(pairwise_sum(terms));
}

cplx coherent_inner_product_holomorphic(const PairingContext& ctx,
                                        const FreqCoeffs& xi,
                                        const FreqCoeffs& zeta) {
    const cplx ip = complex_inner_product(ctx, xi, zeta);
    const cplx gx = g_product_c(ctx, xi, xi);
    const cplx gz = g_product_c(ctx, zeta, zeta);
    return std::exp(0.5 * ip - 0.25 * gx - 0.25 * gz);
}

AmplitudeResult amplitude_sfq_interval(const PairingContext& ctx,
                                       const LeafConfig& eta,
                                       const LeafConfig& kappa) {
    require_same_grid(ctx.grid, eta.grid);
    require_same_grid(ctx.grid, kappa.grid);
    AmplitudeResult out;
    out.scheme = Scheme::SFQ;
    out.region = RegionKind::Interval;
    out.grid = ctx.grid;
    out.log_contrib.resize(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const double kd = kd_eig(ctx, i);
        out.log_contrib[i] =
            kd * (eta.v[i] * std::conj(kappa.v[i]) -
                  0.5 * std::norm(eta.v[i]) - 0.5 * std::norm(kappa.v[i]));
    }
    out.value = std::exp(out.exponent());
    return out;
}

AmplitudeResult amplitude_hq_interval(const PairingContext& ctx,
                                      const FreqCoeffs& zeta,
                                      const FreqCoeffs& xi) {
    const IntervalDecomposition d = decompose_interval(zeta, xi);
    const auto tII = g_product_terms(ctx, d.lamI, d.lamI);
    const auto tRI = g_product_terms(ctx, d.lamR, d.lamI);
    AmplitudeResult out;
    out.scheme = Scheme::HQ;
    out.region = RegionKind::Interval;
    out.grid = ctx.grid;
    out.log_contrib.resize(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i)
        out.log_contrib[i] = -tII[i] - kI * tRI[i];
    out.value = std::exp(out.exponent());
    return out;
}

AmplitudeResult amplitude_sfq_rod(const PairingContext& ctx,
                                  const LeafConfig& kappa) {
    require_same_grid(ctx.grid, kappa.grid);
    AmplitudeResult out;
    out.scheme = Scheme::SFQ;
    out.region = RegionKind::Rod;
    out.grid = ctx.grid;
    out.log_contrib.resize(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const double kd = kd_eig(ctx, i);
        if (std::abs(ctx.cb[i]) == 0.0)
            throw ZeroComponentError("amplitude_sfq_rod: c^b must be nonzero");
        const std::size_t r = ctx.grid->reflect(i);
        cplx kk = std::conj(kappa.v[i]) * std::conj(kappa.v[r]);
        if (ctx.grid->self_paired(i)) kk = kk.real();
        const cplx ratio = std::conj(ctx.cb[i]) / ctx.cb[i];
        out.log_contrib[i] =
            -0.5 * kd * (ratio * kk + std::conj(kappa.v[i]) * kappa.v[i]);
    }
    out.value = std::exp(out.exponent());
    return out;
}

AmplitudeResult amplitude_hq_rod(const PairingContext& ctx,
                                 const VacuumSpec& spec,
                                 const RodBoundaryField& field) {
    require_same_grid(ctx.grid, field.xi_ab.grid);
    const RealCoeffs hat = asymptotic_field_rod(spec, field);
    const FreqCoeffs hat_f = real_to_freq(spec, hat);
    const FreqCoeffs xi_f = real_to_freq(spec, field.xi_ab);
    const auto t_hat = g_product_terms(ctx, hat_f, hat_f);
    const auto t_xi = g_product_terms(ctx, xi_f, xi_f);
    AmplitudeResult out;
    out.scheme = Scheme::HQ;
    out.region = RegionKind::Rod;
    out.grid = ctx.grid;
    out.log_contrib.resize(ctx.size());
    // N^{H,xi} exp(g(hat,hat)/4) with N^{H,xi} = exp(-g(xi,xi)/4).
    for (std::size_t i = 0; i < ctx.size(); ++i)
        out.log_contrib[i] = 0.25 * (t_hat[i] - t_xi[i]);
    out.value = std::exp(out.exponent());
    return out;
}

cplx correspondence_kernel_log(const PairingContext& ctx, const FreqCoeffs& xi,
                               const LeafConfig& vph) {
    require_same_grid(ctx.grid, xi.grid);
    require_same_grid(ctx.grid, vph.grid);
    const FreqCoeffs jphi = j_sigma_map(ctx, vph);
    const FreqCoeffs jqxi = j_sigma_map(ctx, restrict_to_leaf(ctx, xi));
    return -0.5 * kI * symplectic_potential(ctx, jphi, jphi) -
           0.5 * g_product_c(ctx, jphi, jphi) +
           complex_inner_product(ctx, jphi, xi) -
           0.5 * complex_inner_product(ctx, jqxi, xi);
}

}  // namespace gbfkg
