#pragma once

#include "gbfkg/coefficients.hpp"
#include "gbfkg/pairings.hpp"
#include "gbfkg/vacuum.hpp"

namespace gbfkg {

/// (p, q) = -1/(2i Im(conj(ca) cb)) [[conj(cb), -conj(ca)], [-cb, ca]] (a, b).
FreqCoeffs real_to_freq(const VacuumSpec& spec, const RealCoeffs& r);

/// (a, b) = [[ca, conj(ca)], [cb, conj(cb)]] (p, q); inverse of the above.
RealCoeffs freq_to_real(const VacuumSpec& spec, const FreqCoeffs& f);

/// Frequency coefficients from mode-projected Cauchy data on the leaf
/// ctx.tau (== data.T required): per mode
/// (p, q) = 1/(2i Im(conj(ca) cb) W) [[-conj(dU), conj(U)], [dU, -U]] (phi, dphi).
FreqCoeffs recover_from_initial_data(const PairingContext& ctx,
                                     const InitialData& data);

/// Mode coefficients of the solution and its tau-derivative on the leaf
/// ctx.tau: value = p U + q conj(U), dvalue = p dU + q conj(dU).
InitialData evaluate_solution(const PairingContext& ctx, const FreqCoeffs& f);

/// The configuration phi^T_k = p U(T) + q conj(U(T)); zero exactly on the
/// momentum subspace M_Sigma.
LeafConfig restrict_to_leaf(const PairingContext& ctx, const FreqCoeffs& f);

/// Demonstration path: quadrature sum  sum_j mu_j v_j U_{k_j}(point) using
/// the family's spatial modes.
cplx reconstruct_spatial(const ModeFamily& family, const LeafConfig& config,
                         const std::array<double, 3>& point);

}  // namespace gbfkg
