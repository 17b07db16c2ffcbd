#include "gbfkg/coefficients.hpp"

#include <algorithm>

#include "gbfkg/errors.hpp"

namespace gbfkg {

void require_same_grid(const GridPtr& a, const GridPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b))
        throw GridMismatchError("coefficient fields live on different grids");
}

double reality_residual(const FreqCoeffs& f) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::size_t r = f.grid->reflect(i);
        worst = std::max(worst, std::abs(f.p[i] - std::conj(f.q[r])));
    }
    return worst;
}

double reality_residual(const RealCoeffs& rc) {
    double worst = 0.0;
    for (std::size_t i = 0; i < rc.size(); ++i) {
        const std::size_t r = rc.grid->reflect(i);
        worst = std::max(worst, std::abs(rc.a[r] - std::conj(rc.a[i])));
        worst = std::max(worst, std::abs(rc.b[r] - std::conj(rc.b[i])));
    }
    return worst;
}

double reality_residual(const LeafConfig& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t r = c.grid->reflect(i);
        worst = std::max(worst, std::abs(c.v[r] - std::conj(c.v[i])));
    }
    return worst;
}

FreqCoeffs operator+(const FreqCoeffs& a, const FreqCoeffs& b) {
    require_same_grid(a.grid, b.grid);
    FreqCoeffs out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.p[i] += b.p[i];
        out.q[i] += b.q[i];
    }
    return out;
}

FreqCoeffs operator-(const FreqCoeffs& a, const FreqCoeffs& b) {
    require_same_grid(a.grid, b.grid);
    FreqCoeffs out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.p[i] -= b.p[i];
        out.q[i] -= b.q[i];
    }
    return out;
}

FreqCoeffs operator*(cplx s, const FreqCoeffs& f) {
    FreqCoeffs out = f;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.p[i] *= s;
        out.q[i] *= s;
    }
    return out;
}

double max_abs_diff(const FreqCoeffs& a, const FreqCoeffs& b) {
    require_same_grid(a.grid, b.grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a.p[i] - b.p[i]));
        worst = std::max(worst, std::abs(a.q[i] - b.q[i]));
    }
    return worst;
}

LeafConfig operator+(const LeafConfig& a, const LeafConfig& b) {
    require_same_grid(a.grid, b.grid);
    LeafConfig out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.v[i] += b.v[i];
    return out;
}

LeafConfig operator*(cplx s, const LeafConfig& c) {
    LeafConfig out = c;
    for (auto& v : out.v) v *= s;
    return out;
}

}  // namespace gbfkg
