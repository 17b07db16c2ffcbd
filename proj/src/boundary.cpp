#include "gbfkg/boundary.hpp"

#include "gbfkg/complex_structure.hpp"
#include "gbfkg/errors.hpp"

namespace gbfkg {

IntervalDecomposition decompose_interval(const FreqCoeffs& zeta,
                                         const FreqCoeffs& xi) {
    require_same_grid(zeta.grid, xi.grid);
    IntervalDecomposition out{FreqCoeffs::zeros(zeta.grid),
                              FreqCoeffs::zeros(zeta.grid)};
    out.lamR = 0.5 * (zeta + xi);
    out.lamI = apply_j_freq(0.5 * (xi - zeta));
    return out;
}

FreqCoeffs asymptotic_field_interval(const FreqCoeffs& zeta,
                                     const FreqCoeffs& xi) {
    require_same_grid(zeta.grid, xi.grid);
    FreqCoeffs out = FreqCoeffs::zeros(zeta.grid);
    out.p = zeta.p;
    out.q = xi.q;
    return out;
}

XiMatrices xi_matrices(const VacuumSpec& spec, const ModeIndex& idx) {
    const SpecEntry e = spec_entry(spec, idx);
    const double nb = std::norm(e.cb);
    XiMatrices out;
    out.Xi = Mat2{1.0, -e.re_cab / e.im_cab, 0.0, -nb / e.im_cab};
    out.XiInv = Mat2{1.0, -e.re_cab / nb, 0.0, -e.im_cab / nb};
    return out;
}

RodDecomposition decompose_rod(const VacuumSpec& spec,
                               const RodBoundaryField& field) {
    const RealCoeffs& in = field.xi_ab;
    RodDecomposition out{RealCoeffs::zeros(in.grid),
                         RealCoeffs::zeros(in.grid)};
    for (std::size_t i = 0; i < in.size(); ++i) {
        const XiMatrices m = xi_matrices(spec, in.grid->mode(i));
        std::tie(out.xiR.a[i], out.xiI.a[i]) =
            m.XiInv.apply(in.a[i], in.b[i]);
    }
    return out;
}

RealCoeffs asymptotic_field_rod(const VacuumSpec& spec,
                                const RodBoundaryField& field) {
    const RealCoeffs& in = field.xi_ab;
    RealCoeffs out = RealCoeffs::zeros(in.grid);
    for (std::size_t i = 0; i < in.size(); ++i) {
        const auto [ca, cb] = spec.eval(in.grid->mode(i));
        if (std::abs(cb) == 0.0)
            throw ZeroComponentError("asymptotic_field_rod: c^b must be nonzero");
        out.a[i] = in.a[i] - ca / cb * in.b[i];
    }
    return out;
}

}  // namespace gbfkg
