#pragma once

#include "gbfkg/coefficients.hpp"
#include "gbfkg/transforms.hpp"
#include "gbfkg/vacuum.hpp"

namespace gbfkg {

/// Boundary solution on an interval (or tube) region: one real solution
/// near each boundary leaf.
struct IntervalBoundaryField {
    FreqCoeffs zeta;  // near Sigma_{tau_1}
    FreqCoeffs xi;    // near Sigma_{tau_2}
};

/// Boundary solution on a rod region: a single real solution near the
/// (inward-oriented) boundary hypercylinder, in real-expansion form.
struct RodBoundaryField {
    RealCoeffs xi_ab;
};

/// lambda = lambda^R + J_boundary lambda^I with both parts global interior
/// solutions; for the interval boundary (J, -J) this is solved by
/// lambda^R = (zeta + xi)/2, lambda^I = (J xi - J zeta)/2.
struct IntervalDecomposition {
    FreqCoeffs lamR, lamI;
};
IntervalDecomposition decompose_interval(const FreqCoeffs& zeta,
                                         const FreqCoeffs& xi);

/// Classical asymptotic field lambda^R - i lambda^I for interval regions:
/// splices zeta's p components with xi's q components.
FreqCoeffs asymptotic_field_interval(const FreqCoeffs& zeta,
                                     const FreqCoeffs& xi);

/// The change of basis between (xi^a, xi^b) and the regular components
/// ((xi^R)^a, (xi^I)^a) of the rod decomposition, and its inverse.
struct XiMatrices {
    Mat2 Xi, XiInv;
};
XiMatrices xi_matrices(const VacuumSpec& spec, const ModeIndex& idx);

/// Rod decomposition xi = xi^R - J xi^I with both parts regular (pure
/// a-coefficient) interior solutions: (xi^R)^a, (xi^I)^a = XiInv (xi^a, xi^b).
struct RodDecomposition {
    RealCoeffs xiR, xiI;  // b components identically zero
};
RodDecomposition decompose_rod(const VacuumSpec& spec,
                               const RodBoundaryField& field);

/// Rod classical asymptotic field, regular on the whole rod:
/// a-coefficients xi^a - (c^a/c^b) xi^b, b identically zero. Complexified:
/// in general it violates the reality predicate.
RealCoeffs asymptotic_field_rod(const VacuumSpec& spec,
                                const RodBoundaryField& field);

}  // namespace gbfkg
