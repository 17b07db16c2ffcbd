#pragma once

#include <string>
#include <vector>

#include "gbfkg/boundary.hpp"
#include "gbfkg/coefficients.hpp"
#include "gbfkg/complex_structure.hpp"
#include "gbfkg/pairings.hpp"

namespace gbfkg {

enum class Scheme { SFQ, HQ };

/// Free-amplitude value together with its per-mode exponent table:
/// value = exp( sum_j mu_j log_contrib[j] ).
struct AmplitudeResult {
    cplx value;
    Scheme scheme;
    RegionKind region;
    std::vector<cplx> log_contrib;
    GridPtr grid;

    /// The exponent recomputed from the table (deterministic pairwise sum).
    cplx exponent() const {
        std::vector<cplx> w(log_contrib.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] = grid->weight(i) * log_contrib[i];
        return pairwise_sum(w);
    }
};

/// Eigenvalue of the vacuum operator on mode j:
/// a_j = -i sigma wtilde conj(dU)/conj(U); its real part is positive for
/// admissible specs (normalizable Gaussian).
cplx vacuum_operator_eig(const PairingContext& ctx, std::size_t mode_pos);

/// Per-mode log-density of the (never multiplied-in) vacuum normalization:
/// 0.25 * log( wtilde |2 Im(conj(ca) cb) W| / (2 pi |U|^2) ). Read-only
/// inspection hook; all amplitudes are normalized ratios where it cancels.
double vacuum_norm_log_density(const PairingContext& ctx,
                               std::size_t mode_pos);

/// Bilinear vacuum form Omega(phi, chi) = g(j phi, j chi) - i [j phi, chi]
/// computed through the two-term route; equals the direct pairing
/// sum_j mu_j a_j phi_j chi_{-j} (the vacuum correspondence).
cplx omega_vacuum_form(const PairingContext& ctx, const LeafConfig& phi,
                       const LeafConfig& chi);

/// Direct route for the same form, used as the cross-check oracle.
cplx omega_vacuum_direct(const PairingContext& ctx, const LeafConfig& phi,
                         const LeafConfig& chi);

/// Eigenvalue of the tau-independent coherent-state kernel
/// K^D = (-sigma 2 Im(conj(ca) cb) wtilde W)^{-1} > 0.
double kd_eig(const PairingContext& ctx, std::size_t mode_pos);

/// Characterizing solution of the coherent state with characterizing
/// function eta: per mode (p, q) = K^D (eta_k, conj(eta_{-k})). Always a
/// real field, for any complex eta.
FreqCoeffs characterizing_solution(const PairingContext& ctx,
                                   const LeafConfig& eta);

/// <psi^eta, psi^kappa> = exp sum_j mu_j K^D_j (conj(eta) kappa
///   - |eta|^2/2 - |kappa|^2/2).
cplx coherent_inner_product_schrodinger(const PairingContext& ctx,
                                        const LeafConfig& eta,
                                        const LeafConfig& kappa);

/// exp( <xi, zeta>/2 - g(xi,xi)/4 - g(zeta,zeta)/4 ) for normalized
/// holomorphic coherent states; reproduces the Schroedinger product under
/// eta <-> eta^D.
cplx coherent_inner_product_holomorphic(const PairingContext& ctx,
                                        const FreqCoeffs& xi,
                                        const FreqCoeffs& zeta);

/// Free interval amplitude, Schroedinger-Feynman route:
/// exp sum_j mu_j K^D_j (eta conj(kappa) - |eta|^2/2 - |kappa|^2/2).
/// Note the unconjugated eta (amplitude, not inner product).
AmplitudeResult amplitude_sfq_interval(const PairingContext& ctx,
                                       const LeafConfig& eta,
                                       const LeafConfig& kappa);

/// Free interval amplitude, holomorphic route: decompose (zeta, xi) into
/// lambda^R, lambda^I and evaluate exp(-g(lamI,lamI) - i g(lamR,lamI))
/// with g at the first leaf.
AmplitudeResult amplitude_hq_interval(const PairingContext& ctx,
                                      const FreqCoeffs& zeta,
                                      const FreqCoeffs& xi);

/// Free rod amplitude, Schroedinger-Feynman route: exponent
/// -1/2 sum_j mu_j K^D_j [ (conj(cb)/cb) conj(kappa_j) conj(kappa_{-j})
///   + conj(kappa_j) kappa_j ]; the kappa-bar pairing runs through the
/// grid involution (self-paired modes take the real part).
AmplitudeResult amplitude_sfq_rod(const PairingContext& ctx,
                                  const LeafConfig& kappa);

/// Free rod amplitude, holomorphic route:
/// N^{H,xi} exp( g(hat-lambda, hat-lambda)/4 ) with the complexified
/// asymptotic field and N^{H,xi} = exp(-g(xi,xi)/4).
AmplitudeResult amplitude_hq_rod(const PairingContext& ctx,
                                 const VacuumSpec& spec,
                                 const RodBoundaryField& field);

/// Exponent of the correspondence kernel B~(xi, vph):
/// -i/2 [j vph, j vph] - 1/2 g(j vph, j vph) + <j vph, xi>
///   - 1/2 <j q xi, xi>.
/// For xi = 0 its conjugate is the vacuum exponent -Omega(vph,vph)/2; the
/// last two terms carry the coherent data.
cplx correspondence_kernel_log(const PairingContext& ctx, const FreqCoeffs& xi,
                               const LeafConfig& vph);

}  // namespace gbfkg
