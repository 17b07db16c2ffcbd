#pragma once

#include <functional>
#include <utility>

#include "gbfkg/modes.hpp"
#include "gbfkg/types.hpp"

namespace gbfkg {

/// Per-mode vacuum data: the complex pair (c^a, c^b) and the combination
/// Im(conj(c^a) c^b) that controls well-definedness.
struct SpecEntry {
    cplx ca, cb;
    double im_cab;  // Im(conj(ca) * cb)
    double re_cab;  // Re(conj(ca) * cb)
};

/// The vacuum-defining pair of complex functions on momentum space.
/// Must be reflection-symmetric: c(idx) = c(reflected(idx)).
struct VacuumSpec {
    std::function<std::pair<cplx, cplx>(const ModeIndex&)> eval;
};

/// Entry with the derived combinations; throws DegenerateSpecError when
/// Im(conj(ca) cb) vanishes (below the 1e-300 true-zero floor).
SpecEntry spec_entry(const VacuumSpec& spec, const ModeIndex& idx);

/// Like spec_entry but without the degeneracy guard (for admissibility
/// diagnostics that want to look at bad specs).
SpecEntry spec_entry_unchecked(const VacuumSpec& spec, const ModeIndex& idx);

/// Constant pair (ca, cb) on all modes.
VacuumSpec constant_spec(cplx ca, cplx cb);

/// Defaults per built-in family. Interval: (1, -i), which makes Upsilon
/// the standard positive-frequency mode exp(-i E tau). Rod and tube:
/// (1, +i), the Hankel combination j_l + i y_l; with sigma = -1 on radial
/// leaves this is the sign that satisfies vacuum positivity.
VacuumSpec standard_spec(RegionKind kind);

/// Pointwise gauge scaling (ca, cb) -> f * (ca, cb). A reflection-
/// symmetric nonzero f leaves the complex structure unchanged.
VacuumSpec gauge_scaled(VacuumSpec base,
                        std::function<cplx(const ModeIndex&)> factor);

/// Spec from a per-grid-entry table (used for random and file-defined
/// vacua). The table is aligned with grid positions.
VacuumSpec table_spec(GridPtr grid, std::vector<std::pair<cplx, cplx>> table);

}  // namespace gbfkg
