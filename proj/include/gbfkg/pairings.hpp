#pragma once

#include <vector>

#include "gbfkg/coefficients.hpp"
#include "gbfkg/modes.hpp"
#include "gbfkg/vacuum.hpp"

namespace gbfkg {

/// Per-mode data of one leaf, cached for the quadrature pairings:
/// Upsilon = c^a X^a + c^b X^b and its tau-derivative, the leaf weight,
/// the Wronskian, and the vacuum combinations. Construction validates
/// Im(conj(c^a) c^b) != 0, W != 0, Upsilon != 0 and dUpsilon != 0 on
/// every grid mode; vacuum positivity is recorded but only enforced by
/// the operations that need it (g-product and descendants).
struct PairingContext {
    GridPtr grid;
    double tau = 0.0;
    int sigma = +1;
    /// +1: the canonical backward-oriented leaf; -1 flips the symplectic
    /// quantities (and J), leaving the g-product unchanged.
    int orientation = +1;
    bool positive = true;  // -sigma * im_cab * W > 0 on all modes

    std::vector<double> wtilde, wronsk, im_cab;
    std::vector<cplx> ca, cb;
    std::vector<cplx> U, dU;  // Upsilon_k(tau), d_tau Upsilon_k(tau)

    std::size_t size() const { return U.size(); }
};

PairingContext make_context(const ModeFamily& family, const VacuumSpec& spec,
                            GridPtr grid, double tau, int orientation = +1);

/// Same leaf, opposite orientation.
PairingContext reversed(PairingContext ctx);

/// Upsilon and its derivative for a single (spec, sample) pair; throws
/// ZeroUpsilonError when either vanishes.
std::pair<cplx, cplx> upsilon(const VacuumSpec& spec, const ModeSample& s,
                              const ModeIndex& idx);

void require_positivity(const PairingContext& ctx);

/// Symplectic potential [xi, phi] = theta_{Sigma,xi}(phi): quadrature sum
/// of the four-term frequency integrand (the first argument is the
/// differentiated one). Real-valued on real fields.
cplx symplectic_potential(const PairingContext& ctx, const FreqCoeffs& xi,
                          const FreqCoeffs& phi);

/// Bilinear symplectic structure, complexified form. Real fields give a
/// real value, exposed by symplectic_form().
cplx symplectic_form_c(const PairingContext& ctx, const FreqCoeffs& xi,
                       const FreqCoeffs& zeta);
double symplectic_form(const PairingContext& ctx, const FreqCoeffs& xi,
                       const FreqCoeffs& zeta);

/// g(xi, zeta) = 2 omega(xi, J zeta), as a bilinear form so complexified
/// arguments (asymptotic fields) can be paired too. Orientation-invariant
/// and positive definite on real fields. Requires vacuum positivity.
cplx g_product_c(const PairingContext& ctx, const FreqCoeffs& xi,
                 const FreqCoeffs& zeta);
double g_product(const PairingContext& ctx, const FreqCoeffs& xi,
                 const FreqCoeffs& zeta);

/// Per-mode g integrand t_j (the full product is sum_j mu_j t_j); used
/// for amplitude per-mode tables.
std::vector<cplx> g_product_terms(const PairingContext& ctx,
                                  const FreqCoeffs& xi,
                                  const FreqCoeffs& zeta);

/// <xi, zeta> = g + 2i omega; conjugate-linear in the first slot with
/// respect to the complex structure J.
cplx complex_inner_product(const PairingContext& ctx, const FreqCoeffs& xi,
                           const FreqCoeffs& zeta);

}  // namespace gbfkg
