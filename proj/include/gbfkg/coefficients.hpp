#pragma once

#include <vector>

#include "gbfkg/modes.hpp"
#include "gbfkg/types.hpp"

namespace gbfkg {

/// Frequency-expansion coefficients. Per mode k the stored pair is the
/// column vector (p, q) = (phi^+_k, conj(phi^-_{-k})), so every 2x2
/// per-mode matrix of the formulation applies verbatim. The underlying
/// field is real iff p(k) = conj(q(-k)) for all modes.
struct FreqCoeffs {
    GridPtr grid;
    std::vector<cplx> p, q;

    static FreqCoeffs zeros(GridPtr g) {
        FreqCoeffs f;
        f.p.assign(g->size(), cplx{});
        f.q.assign(g->size(), cplx{});
        f.grid = std::move(g);
        return f;
    }

    std::size_t size() const { return p.size(); }
};

/// Real-expansion coefficients (a, b) = (phi^a_k, phi^b_k). The field is
/// real iff a(-k) = conj(a(k)) and likewise for b.
struct RealCoeffs {
    GridPtr grid;
    std::vector<cplx> a, b;

    static RealCoeffs zeros(GridPtr g) {
        RealCoeffs r;
        r.a.assign(g->size(), cplx{});
        r.b.assign(g->size(), cplx{});
        r.grid = std::move(g);
        return r;
    }

    std::size_t size() const { return a.size(); }
};

/// Configuration coefficients on one leaf (mode-projected field values).
/// Real configurations satisfy v(-k) = conj(v(k)).
struct LeafConfig {
    GridPtr grid;
    std::vector<cplx> v;

    static LeafConfig zeros(GridPtr g) {
        LeafConfig c;
        c.v.assign(g->size(), cplx{});
        c.grid = std::move(g);
        return c;
    }

    std::size_t size() const { return v.size(); }
};

/// Mode-projected Cauchy data (phi_k(T), (d_tau phi)_k(T)) on the leaf T.
struct InitialData {
    GridPtr grid;
    double T = 0.0;
    std::vector<cplx> phi, dphi;

    std::size_t size() const { return phi.size(); }
};

void require_same_grid(const GridPtr& a, const GridPtr& b);

/// Max deviation from the reality predicate (0 for exactly real fields).
double reality_residual(const FreqCoeffs& f);
double reality_residual(const RealCoeffs& r);
double reality_residual(const LeafConfig& c);

FreqCoeffs operator+(const FreqCoeffs& a, const FreqCoeffs& b);
FreqCoeffs operator-(const FreqCoeffs& a, const FreqCoeffs& b);
FreqCoeffs operator*(cplx s, const FreqCoeffs& f);
double max_abs_diff(const FreqCoeffs& a, const FreqCoeffs& b);

LeafConfig operator+(const LeafConfig& a, const LeafConfig& b);
LeafConfig operator*(cplx s, const LeafConfig& c);

}  // namespace gbfkg
