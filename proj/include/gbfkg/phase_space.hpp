#pragma once

#include "gbfkg/coefficients.hpp"
#include "gbfkg/pairings.hpp"

namespace gbfkg {

/// Phase-space point: configuration and momentum-density coefficients
/// (phi_k, pi_k) on a leaf, with pi = wtilde * d_tau phi per mode.
struct PhasePoint {
    GridPtr grid;
    std::vector<cplx> vph, pi;

    std::size_t size() const { return vph.size(); }
};

/// Eigenvalues of the four commuting operators forming the phase-space
/// complex structure J = [[A, B], [D, C]]: they satisfy
/// A^2 + BD = C^2 + DB = -1, AB + BC = DA + CD = 0, A = -C, and B
/// inverts the real part of the vacuum operator.
struct AbdcEigs {
    double A, B, D, C;
};

AbdcEigs abdc_operators(const PairingContext& ctx, std::size_t mode_pos);

/// Max violation of the four algebraic constraints (absolute).
double abdc_constraint_residual(const AbdcEigs& e);

/// Per-mode map F from (phi, pi) to (p, q):
/// F = 1/(2i Im(conj(ca) cb) W) [[-conj(dU), conj(U)/wtilde],
///                               [dU, -U/wtilde]].
/// Consistent with recover_from_initial_data under pi = wtilde dphi.
Mat2 f_matrix(const PairingContext& ctx, std::size_t mode_pos);

/// Frobenius norm of F [[A,B],[D,C]] - diag(-i, i) F: the phase-space
/// complex structure conjugates into the frequency one.
double conjugation_residual(const PairingContext& ctx, std::size_t mode_pos);

/// Same residual with the given eigenvalues substituted (for negative
/// controls with perturbed operators).
double conjugation_residual_with(const PairingContext& ctx,
                                 std::size_t mode_pos, const AbdcEigs& e);

/// Residuals of the subspace mapping properties: A and B land the image
/// (through F) in the vanishing-derivative subspace N, D and C in the
/// vanishing-on-the-leaf subspace M.
struct PhaseSubspaceResiduals {
    double a_to_n, b_to_n, d_to_m, c_to_m;

    double worst() const;
};
PhaseSubspaceResiduals phase_subspace_relations(const PairingContext& ctx,
                                                std::size_t mode_pos,
                                                cplx vph, cplx pi);

/// M-condition residual |p U + q conj(U)| and N-condition residual
/// |p dU + q conj(dU)|, both relative to the term magnitudes.
double m_condition_residual(const PairingContext& ctx, std::size_t mode_pos,
                            cplx p, cplx q);
double n_condition_residual(const PairingContext& ctx, std::size_t mode_pos,
                            cplx p, cplx q);

/// Phase-space symplectic form -sigma/2 sum_j mu_j (vph1 pi2 - vph2 pi1)
/// paired through the grid involution.
cplx phase_symplectic_form(const PairingContext& ctx, const PhasePoint& x,
                           const PhasePoint& y);

/// J applied per mode through the ABDC eigenvalues.
PhasePoint apply_j_phase(const PairingContext& ctx, const PhasePoint& x);

}  // namespace gbfkg
