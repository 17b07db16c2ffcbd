#pragma once

#include "gbfkg/coefficients.hpp"
#include "gbfkg/pairings.hpp"
#include "gbfkg/vacuum.hpp"

namespace gbfkg {

/// Complex structure J in the real expansion: the 2x2 real matrix
/// (1/Im(conj(ca) cb)) [[Re(conj(ca) cb), -|ca|^2], [|cb|^2, -Re(conj(ca) cb)]]
/// acting on (phi^a, phi^b); squares to -1.
Mat2 jab_matrix(const VacuumSpec& spec, const ModeIndex& idx);

/// J in the frequency representation: p -> -i p, q -> +i q (the q slot
/// stores a conjugated coefficient).
FreqCoeffs apply_j_freq(const FreqCoeffs& f);

/// J in the real representation: per-mode multiplication by jab_matrix.
/// Conjugate to apply_j_freq under real_to_freq.
RealCoeffs apply_j_real(const VacuumSpec& spec, const RealCoeffs& r);

/// The gauge-invariant parametrization of J: Q_r = |ca|/|cb| and
/// dAlpha = arg(cb) - arg(ca), normalized to (-pi, pi]. Gauge-related
/// specs (common c -> f c) give identical values.
struct VacuumInvariants {
    double Qr;
    double dAlpha;
};
VacuumInvariants vacuum_invariants(const VacuumSpec& spec,
                                   const ModeIndex& idx);

/// Per-mode projector matrices P_M (image vanishes on the leaf) and P_N
/// (image has vanishing tau-derivative on the leaf), acting on (p, q).
/// They satisfy P_M^2 = P_M, P_N^2 = P_N, P_M + P_N = 1, and are
/// oblique with respect to the complex inner product.
struct MnProjectors {
    Mat2 PM, PN;
};
MnProjectors projectors_mn(const PairingContext& ctx, std::size_t mode_pos);

FreqCoeffs apply_pm(const PairingContext& ctx, const FreqCoeffs& f);
FreqCoeffs apply_pn(const PairingContext& ctx, const FreqCoeffs& f);

/// Frequency projectors P-+ = (1 +- i J)/2: P^+ keeps the q components,
/// P^- the p components; they sum to the identity.
struct PmProjection {
    FreqCoeffs plus, minus;
};
PmProjection projectors_pm(const FreqCoeffs& f);

/// The map j_Sigma: leaf configurations -> J M_Sigma. The returned
/// solution restricts back to kappa on the leaf (q o j = 1). Per mode:
/// p = kappa / (2 Upsilon(T)), q = kappa / (2 conj(Upsilon(T))).
FreqCoeffs j_sigma_map(const PairingContext& ctx, const LeafConfig& kappa);

}  // namespace gbfkg
