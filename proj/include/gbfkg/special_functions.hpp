#pragma once

#include "gbfkg/types.hpp"

namespace gbfkg {

/// Values and derivatives of the spherical Bessel pair at one point.
struct SphBesselPair {
    double j, y;    // j_l(x), y_l(x)
    double dj, dy;  // d/dx values
};

/// Spherical Bessel function of the first kind, j_l(x), for x > 0.
/// Uses Miller's downward recurrence normalized against j_0 (upward
/// recurrence is unstable for l > x).
double sph_bessel_j(int l, double x);

/// Spherical Neumann function y_l(x), x > 0, by upward recurrence
/// (stable in this direction).
double sph_neumann_y(int l, double x);

/// j_l, y_l and their derivatives in one call.
SphBesselPair sph_bessel_pair(int l, double x);

/// Orthonormal spherical harmonic Y_lm(theta, phi) with the Condon-Shortley
/// phase, so that conj(Y_lm) = (-1)^m Y_{l,-m}. Associated Legendre values
/// come from the standard (m,m) -> (m+1,m) -> upward-in-l recurrence.
cplx spherical_harmonic(int l, int m, double theta, double phi);

}  // namespace gbfkg
