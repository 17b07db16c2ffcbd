#include "gbfkg/special_functions.hpp"

#include <cmath>
#include <vector>

#include "gbfkg/errors.hpp"

namespace gbfkg {

namespace {

double sph_j0(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0 * (1.0 - x * x / 20.0);
    return std::sin(x) / x;
}

double sph_j1(double x) {
    if (std::abs(x) < 1e-4)
        return x / 3.0 * (1.0 - x * x / 10.0 * (1.0 - x * x / 28.0));
    return std::sin(x) / (x * x) - std::cos(x) / x;
}

// j_0 .. j_lmax by Miller's downward recurrence with renormalization
// guards, normalized against j_0(x).
std::vector<double> sph_j_table(int lmax, double x) {
    std::vector<double> j(static_cast<std::size_t>(lmax) + 1, 0.0);
    if (x <= 0.0) throw FamilyDomainError("sph_bessel_j: requires x > 0");
    if (lmax == 0) {
        j[0] = sph_j0(x);
        return j;
    }
    // Tiny argument: leading series term per order avoids underflow of
    // the Miller normalization quotient.
    if (x < 1e-6) {
        double dfact = 1.0;  // (2l+1)!!
        double xp = 1.0;     // x^l
        for (int l = 0; l <= lmax; ++l) {
            j[static_cast<std::size_t>(l)] = xp / dfact;
            dfact *= 2.0 * l + 3.0;
            xp *= x;
        }
        j[0] = sph_j0(x);
        if (lmax >= 1) j[1] = sph_j1(x);
        return j;
    }
    // The downward recurrence must start well inside the decaying regime,
    // which begins around order x for large arguments.
    const int top = std::max(lmax, static_cast<int>(std::ceil(x)));
    const int start = top + 16 + static_cast<int>(std::sqrt(40.0 * (top + 1)));
    double jp1 = 0.0;  // j_{n+1}
    double jn = 1.0;   // j_n (arbitrary seed)
    for (int n = start; n >= 1; --n) {
        const double jm1 = (2.0 * n + 1.0) / x * jn - jp1;
        jp1 = jn;
        jn = jm1;
        if (n - 1 <= lmax) j[static_cast<std::size_t>(n - 1)] = jn;
        if (std::abs(jn) > 1e200) {
            jp1 *= 1e-200;
            jn *= 1e-200;
            for (auto& v : j) v *= 1e-200;
        }
    }
    const double scale = sph_j0(x) / j[0];
    for (auto& v : j) v *= scale;
    return j;
}

std::vector<double> sph_y_table(int lmax, double x) {
    if (x <= 0.0) throw FamilyDomainError("sph_neumann_y: requires x > 0");
    std::vector<double> y(static_cast<std::size_t>(lmax) + 1);
    y[0] = -std::cos(x) / x;
    if (lmax >= 1) y[1] = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int n = 1; n < lmax; ++n)
        y[static_cast<std::size_t>(n) + 1] =
            (2.0 * n + 1.0) / x * y[static_cast<std::size_t>(n)] -
            y[static_cast<std::size_t>(n) - 1];
    return y;
}

}  // namespace

double sph_bessel_j(int l, double x) {
    if (l < 0) throw FamilyDomainError("sph_bessel_j: requires l >= 0");
    return sph_j_table(l, x)[static_cast<std::size_t>(l)];
}

double sph_neumann_y(int l, double x) {
    if (l < 0) throw FamilyDomainError("sph_neumann_y: requires l >= 0");
    return sph_y_table(l, x)[static_cast<std::size_t>(l)];
}

SphBesselPair sph_bessel_pair(int l, double x) {
    if (l < 0) throw FamilyDomainError("sph_bessel_pair: requires l >= 0");
    const int lmax = std::max(l, 1);
    const auto j = sph_j_table(lmax, x);
    const auto y = sph_y_table(lmax, x);
    SphBesselPair out;
    out.j = j[static_cast<std::size_t>(l)];
    out.y = y[static_cast<std::size_t>(l)];
    if (l == 0) {
        out.dj = -j[1];
        out.dy = -y[1];
    } else {
        // f_l' = f_{l-1} - (l+1)/x f_l holds for both kinds.
        out.dj = j[static_cast<std::size_t>(l) - 1] - (l + 1.0) / x * out.j;
        out.dy = y[static_cast<std::size_t>(l) - 1] - (l + 1.0) / x * out.y;
    }
    return out;
}

cplx spherical_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l)
        throw FamilyDomainError("spherical_harmonic: requires |m| <= l");
    const int am = std::abs(m);
    const double x = std::cos(theta);
    const double somx2 = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));

    // P_am^am with Condon-Shortley phase.
    double pmm = 1.0;
    double fact = 1.0;
    for (int i = 1; i <= am; ++i) {
        pmm *= -fact * somx2;
        fact += 2.0;
    }
    double plm = pmm;
    if (l > am) {
        double pmmp1 = x * (2.0 * am + 1.0) * pmm;
        plm = pmmp1;
        for (int ll = am + 2; ll <= l; ++ll) {
            const double pll = (x * (2.0 * ll - 1.0) * pmmp1 -
                                (ll + am - 1.0) * pmm) /
                               (ll - am);
            pmm = pmmp1;
            pmmp1 = pll;
            plm = pll;
        }
    }

    double lognorm = 0.0;  // log of (l-|m|)!/(l+|m|)!
    for (int i = l - am + 1; i <= l + am; ++i) lognorm -= std::log(double(i));
    const double norm =
        std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI) * std::exp(lognorm));
    cplx val = norm * plm * std::exp(kI * double(am) * phi);
    if (m < 0) val = (am % 2 == 0 ? 1.0 : -1.0) * std::conj(val);
    return val;
}

}  // namespace gbfkg
