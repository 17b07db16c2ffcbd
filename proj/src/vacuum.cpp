#include "gbfkg/vacuum.hpp"

#include "gbfkg/errors.hpp"

namespace gbfkg {

SpecEntry spec_entry_unchecked(const VacuumSpec& spec, const ModeIndex& idx) {
    const auto [ca, cb] = spec.eval(idx);
    const cplx z = std::conj(ca) * cb;
    return SpecEntry{ca, cb, z.imag(), z.real()};
}

SpecEntry spec_entry(const VacuumSpec& spec, const ModeIndex& idx) {
    SpecEntry e = spec_entry_unchecked(spec, idx);
    if (std::abs(e.im_cab) < 1e-300)
        throw DegenerateSpecError(
            "vacuum spec: Im(conj(c^a) c^b) vanishes at " + mode_label(idx));
    return e;
}

VacuumSpec constant_spec(cplx ca, cplx cb) {
    return VacuumSpec{[ca, cb](const ModeIndex&) {
        return std::pair<cplx, cplx>{ca, cb};
    }};
}

VacuumSpec standard_spec(RegionKind kind) {
    if (kind == RegionKind::Interval) return constant_spec(1.0, -kI);
    return constant_spec(1.0, kI);
}

VacuumSpec gauge_scaled(VacuumSpec base,
                        std::function<cplx(const ModeIndex&)> factor) {
    return VacuumSpec{
        [base = std::move(base), factor = std::move(factor)](
            const ModeIndex& idx) {
            auto [ca, cb] = base.eval(idx);
            const cplx f = factor(idx);
            return std::pair<cplx, cplx>{f * ca, f * cb};
        }};
}

VacuumSpec table_spec(GridPtr grid, std::vector<std::pair<cplx, cplx>> table) {
    if (grid->size() != table.size())
        throw ConfigError("table_spec: table size does not match grid");
    auto shared = std::make_shared<std::vector<std::pair<cplx, cplx>>>(
        std::move(table));
    return VacuumSpec{[grid = std::move(grid), shared](const ModeIndex& idx) {
        return (*shared)[grid->find(idx)];
    }};
}

}  // namespace gbfkg
