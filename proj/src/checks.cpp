#include <algorithm>
#include <cmath>

#include "gbfkg/boundary.hpp"
#include "gbfkg/complex_structure.hpp"
#include "gbfkg/phase_space.hpp"
#include "gbfkg/scenario.hpp"
#include "gbfkg/states.hpp"
#include "gbfkg/transforms.hpp"

namespace gbfkg {

namespace {

struct Worst {
    double residual = 0.0;
    std::string mode;

    void update(double v, const std::string& label = {}) {
        if (v > residual) {
            residual = v;
            mode = label;
        }
    }
    void update(double v, const ModeGrid& g, std::size_t i) {
        update(v, mode_label(g.mode(i)));
    }
};

/// Sum of terms that should cancel, relative to their magnitude.
double cancellation_residual(const std::vector<cplx>& terms) {
    double mag = 0.0;
    for (const cplx& t : terms) mag += std::abs(t);
    return std::abs(pairwise_sum(terms)) / std::max(mag, 1e-300);
}

/// Matrix identity residual, scale-invariant.
double mat_residual(const Mat2& deviation, double scale) {
    return deviation.frobenius_norm() / (1.0 + scale);
}

/// Required sign of Im(conj(ca) cb) for admissibility. Built-in families
/// have W > 0 on their domains.
double im_sign_for(const ModeFamily& fam) { return fam.sigma > 0 ? -1.0 : 1.0; }

/// One admissible pair with moduli in [0.7, 1.4] and the phase difference
/// in (pi/4, 3pi/4) (times the required sign): conditioning stays O(1).
std::pair<cplx, cplx> random_pair(FieldSampler& fs, double im_sign) {
    const double ra = 0.7 * std::pow(2.0, fs.uniform());
    const double rb = 0.7 * std::pow(2.0, fs.uniform());
    const double aa = (fs.uniform() - 0.5) * 2.0 * M_PI;
    const double d = im_sign * (0.25 + 0.5 * fs.uniform()) * M_PI;
    return {ra * std::exp(kI * aa), rb * std::exp(kI * (aa + d))};
}

/// Constant admissible spec with Re(conj(ca) cb) != 0: the generic
/// situation in which N and J M differ.
VacuumSpec offdiagonal_spec(const ModeFamily& fam) {
    const double sgn = im_sign_for(fam);
    return constant_spec(1.0, std::exp(kI * sgn * M_PI / 4.0));
}

VacuumSpec random_spec(const ScenarioRuntime& rt, FieldSampler& fs) {
    return fs.random_admissible_spec(rt.grid, rt.family.sigma, +1.0);
}

LeafConfig scaled_config(FieldSampler& fs, const GridPtr& grid, double s) {
    LeafConfig c = fs.complex_config(grid);
    for (auto& v : c.v) v *= s;
    return c;
}

/// Worst per-mode conditioning of the leaf M/N split (the decomposition
/// degenerates at deep-evanescent rod modes where |Upsilon| blows up).
double leaf_conditioning(const PairingContext& ctx) {
    double worst = 0.0;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const MnProjectors pr = projectors_mn(ctx, i);
        const AbdcEigs e = abdc_operators(ctx, i);
        worst = std::max({worst, pr.PM.frobenius_norm(),
                          std::abs(e.B) + std::abs(e.D)});
    }
    return worst;
}

/// Sample leaves ordered from best to worst conditioned. Checks whose
/// residuals pass through the M/N split use the best ones; scale-relative
/// checks still cover the harsh leaves.
std::vector<double> taus_by_conditioning(const ScenarioRuntime& rt) {
    std::vector<std::pair<double, double>> ranked;
    for (double tau : rt.taus)
        ranked.emplace_back(leaf_conditioning(rt.context(tau)), tau);
    std::sort(ranked.begin(), ranked.end());
    std::vector<double> out;
    for (const auto& [cond, tau] : ranked) out.push_back(tau);
    return out;
}

PairingContext well_conditioned_context(const ScenarioRuntime& rt) {
    return rt.context(taus_by_conditioning(rt).front());
}

// --- individual checks -------------------------------------------------

CheckOutcome check_mode_reflection(const ScenarioRuntime& rt) {
    Worst w;
    for (double tau : rt.taus) {
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const ModeIndex idx = rt.grid->mode(i);
            if (!(reflected(reflected(idx)) == idx))
                throw Error("reflection is not an involution");
            const ModeSample s1 = sample_mode(rt.family, idx, tau);
            const ModeSample s2 = sample_mode(rt.family, reflected(idx), tau);
            const double d = std::max(
                {std::abs(s1.Xa - s2.Xa), std::abs(s1.Xb - s2.Xb),
                 std::abs(s1.dXa - s2.dXa), std::abs(s1.dXb - s2.dXb),
                 std::abs(s1.wtilde - s2.wtilde)});
            w.update(d, *rt.grid, i);
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_wronskian_nonzero(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("wronskian_nonzero");
    const double lo = rt.taus.front();
    const double hi = rt.taus.back();
    double min_ww = 1e300;
    std::string at;
    for (int trial = 0; trial < 256; ++trial) {
        const std::size_t i =
            std::size_t(fs.uniform() * double(rt.grid->size()));
        const double tau = lo + (hi - lo) * fs.uniform();
        const ModeSample s = sample_mode(rt.family, rt.grid->mode(i), tau);
        const double ww = std::abs(s.wtilde * wronskian(s));
        if (ww < min_ww) {
            min_ww = ww;
            at = mode_label(rt.grid->mode(i));
        }
    }
    CheckOutcome out;
    out.residual = 0.0;  // any degeneracy throws above
    out.worst_mode = at;
    out.note = "min |wW| = " + std::to_string(min_ww);
    return out;
}

CheckOutcome check_weighted_wronskian(const ScenarioRuntime& rt) {
    const double lo = rt.taus.front();
    const double hi = rt.taus.back();
    std::vector<double> taus(64);
    for (int i = 0; i < 64; ++i)
        taus[std::size_t(i)] = lo + (hi - lo) * double(i) / 63.0;
    Worst w;
    CheckOutcome out;
    for (std::size_t i = 0; i < rt.grid->size(); ++i) {
        const double r =
            weighted_wronskian_residual(rt.family, rt.grid->mode(i), taus);
        w.update(r, *rt.grid, i);
        out.mode_residuals.emplace_back(mode_label(rt.grid->mode(i)), r);
    }
    out.residual = w.residual;
    out.worst_mode = w.mode;
    return out;
}

CheckOutcome check_derivative_consistency(const ScenarioRuntime& rt) {
    const double h = 1e-4;
    Worst w;
    for (std::size_t i = 0; i < rt.grid->size(); ++i) {
        for (double tau : rt.taus) {
            const ModeIndex idx = rt.grid->mode(i);
            const ModeSample c = sample_mode(rt.family, idx, tau);
            const ModeSample p = sample_mode(rt.family, idx, tau + h);
            const ModeSample m = sample_mode(rt.family, idx, tau - h);
            const double fda = (p.Xa - m.Xa) / (2.0 * h);
            const double fdb = (p.Xb - m.Xb) / (2.0 * h);
            const double scale =
                std::max({std::abs(c.dXa), std::abs(c.dXb), 1e-12});
            w.update(std::abs(fda - c.dXa) / scale, *rt.grid, i);
            w.update(std::abs(fdb - c.dXb) / scale, *rt.grid, i);
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_vacuum_admissibility(const ScenarioRuntime& rt) {
    Worst w;
    for (std::size_t i = 0; i < rt.grid->size(); ++i) {
        const ModeIndex idx = rt.grid->mode(i);
        const SpecEntry e = spec_entry(rt.spec, idx);  // throws if Im = 0
        const SpecEntry er = spec_entry(rt.spec, reflected(idx));
        w.update(std::abs(e.ca - er.ca) + std::abs(e.cb - er.cb), *rt.grid, i);
        const ModeSample s = sample_mode(rt.family, idx, rt.taus.front());
        if (-s.sigma * e.im_cab * wronskian(s) <= 0.0)
            throw PositivityError("vacuum positivity violated at " +
                                  mode_label(idx));
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_j_squared_real(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("j_squared_real");
    Worst w;
    const double sgn = im_sign_for(rt.family);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto [ca, cb] = random_pair(fs, sgn);
        const std::size_t i =
            std::size_t(fs.uniform() * double(rt.grid->size()));
        const VacuumSpec spec = constant_spec(ca, cb);
        const Mat2 j = jab_matrix(spec, rt.grid->mode(i));
        const Mat2 dev = j * j + Mat2::identity();
        w.update(dev.frobenius_norm(), *rt.grid, i);
    }
    // Gauge scaling leaves the matrix untouched.
    const Mat2 j1 = jab_matrix(rt.spec, rt.grid->mode(0));
    const Mat2 j2 = jab_matrix(
        gauge_scaled(rt.spec, [](const ModeIndex&) { return cplx{2.0, 0.0}; }),
        rt.grid->mode(0));
    w.update((j1 - j2).frobenius_norm(), *rt.grid, 0);
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_j_squared_freq(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("j_squared_freq");
    const FreqCoeffs f = fs.complex_field(rt.grid);
    const FreqCoeffs jjf = apply_j_freq(apply_j_freq(f));
    Worst w;
    for (std::size_t i = 0; i < f.size(); ++i) {
        w.update(std::abs(jjf.p[i] + f.p[i]), *rt.grid, i);
        w.update(std::abs(jjf.q[i] + f.q[i]), *rt.grid, i);
    }
    // Reality preservation on a reflection-symmetric input.
    const FreqCoeffs r = fs.real_field(rt.grid);
    w.update(reality_residual(apply_j_freq(r)), "reality");
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_j_squared_phase(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("j_squared_phase");
    Worst w;
    CheckOutcome out;
    for (int pass = 0; pass < 3; ++pass) {
        const VacuumSpec spec = pass == 0 ? rt.spec : random_spec(rt, fs);
        for (double tau : rt.taus) {
            const PairingContext ctx = make_context(rt.family, spec, rt.grid, tau);
            for (std::size_t i = 0; i < rt.grid->size(); ++i) {
                const AbdcEigs e = abdc_operators(ctx, i);
                const double scale =
                    e.A * e.A + e.B * e.B + e.D * e.D + e.C * e.C;
                const double r = abdc_constraint_residual(e) / (1.0 + scale);
                w.update(r, *rt.grid, i);
                if (pass == 0 && tau == rt.taus.front())
                    out.mode_residuals.emplace_back(
                        mode_label(rt.grid->mode(i)), r);
            }
        }
    }
    out.residual = w.residual;
    out.worst_mode = w.mode;
    return out;
}

CheckOutcome check_j_conjugacy(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("j_conjugacy");
    Worst w;
    for (int pass = 0; pass < 3; ++pass) {
        const VacuumSpec spec = pass == 0 ? rt.spec : random_spec(rt, fs);
        RealCoeffs r = RealCoeffs::zeros(rt.grid);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r.a[i] = fs.cgauss();
            r.b[i] = fs.cgauss();
        }
        const FreqCoeffs lhs = real_to_freq(spec, apply_j_real(spec, r));
        const FreqCoeffs rhs = apply_j_freq(real_to_freq(spec, r));
        w.update(max_abs_diff(lhs, rhs), "random coefficients");
        // J^2 = -1 in the real representation as well.
        const RealCoeffs jjr = apply_j_real(spec, apply_j_real(spec, r));
        for (std::size_t i = 0; i < r.size(); ++i) {
            w.update(std::abs(jjr.a[i] + r.a[i]), *rt.grid, i);
            w.update(std::abs(jjr.b[i] + r.b[i]), *rt.grid, i);
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_j_gauge_invariance(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("j_gauge_invariance");
    Worst w;
    const PairingContext base = rt.context0();
    for (int trial = 0; trial < 100; ++trial) {
        const VacuumSpec scaled =
            gauge_scaled(rt.spec, fs.random_gauge_factor(rt.grid));
        const PairingContext ctx =
            make_context(rt.family, scaled, rt.grid, rt.taus.front());
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const ModeIndex idx = rt.grid->mode(i);
            const Mat2 dj = jab_matrix(rt.spec, idx) - jab_matrix(scaled, idx);
            w.update(dj.frobenius_norm(), *rt.grid, i);
            const VacuumInvariants v1 = vacuum_invariants(rt.spec, idx);
            const VacuumInvariants v2 = vacuum_invariants(scaled, idx);
            w.update(rel_dev(v1.Qr, v2.Qr, 1.0), *rt.grid, i);
            w.update(std::abs(v1.dAlpha - v2.dAlpha), *rt.grid, i);
            w.update(rel_dev(vacuum_operator_eig(base, i),
                             vacuum_operator_eig(ctx, i)),
                     *rt.grid, i);
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_vacuum_invariants_examples(const ScenarioRuntime& rt) {
    // Qr and dAlpha recover the spec up to gauge; spot checks on scaled pairs.
    FieldSampler fs = rt.sampler("vacuum_invariants");
    Worst w;
    const double sgn = im_sign_for(rt.family);
    for (int trial = 0; trial < 200; ++trial) {
        const auto [ca, cb] = random_pair(fs, sgn);
        const VacuumSpec s1 = constant_spec(ca, cb);
        const cplx f = 0.5 + fs.uniform() * 2.0;
        const cplx phase = std::exp(kI * (fs.uniform() - 0.5) * 3.0);
        const VacuumSpec s2 = constant_spec(f * phase * ca, f * phase * cb);
        const ModeIndex idx = rt.grid->mode(0);
        const VacuumInvariants v1 = vacuum_invariants(s1, idx);
        const VacuumInvariants v2 = vacuum_invariants(s2, idx);
        w.update(rel_dev(v1.Qr, v2.Qr, 1.0));
        w.update(std::abs(v1.dAlpha - v2.dAlpha));
        w.update(rel_dev(v1.Qr, std::abs(ca) / std::abs(cb), 1.0));
    }
    return {w.residual, "gauge pair", {}, {}};
}

CheckOutcome check_sympl_antisymmetry(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("sympl_antisymmetry");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 32; ++trial) {
        const FreqCoeffs xi = fs.real_field(rt.grid);
        const FreqCoeffs phi = fs.real_field(rt.grid);
        const cplx t1 = symplectic_potential(ctx, xi, phi);
        const cplx t2 = symplectic_potential(ctx, phi, xi);
        const cplx om = symplectic_form_c(ctx, xi, phi);
        const double scale =
            std::max({std::abs(t1), std::abs(t2), std::abs(om), 1.0});
        w.update(std::abs(t1 - t2 - 2.0 * om) / scale, "theta vs omega");
        w.update(std::abs(t1.imag()) / scale, "theta real-valued");
        w.update(std::abs(symplectic_form_c(ctx, xi, xi)) / scale,
                 "omega(xi,xi)");
        // Orientation reversal flips both.
        const PairingContext rev = reversed(ctx);
        w.update(std::abs(symplectic_form_c(rev, xi, phi) + om) / scale,
                 "orientation");
        w.update(std::abs(symplectic_potential(rev, xi, phi) + t1) / scale,
                 "orientation");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_sympl_tau_independence(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("sympl_tau_independence");
    const FreqCoeffs xi = fs.real_field(rt.grid);
    const FreqCoeffs zeta = fs.real_field(rt.grid);
    Worst w;
    const double ref = symplectic_form(rt.context0(), xi, zeta);
    for (double tau : rt.taus) {
        const double om = symplectic_form(rt.context(tau), xi, zeta);
        w.update(rel_dev(om, ref), "tau=" + std::to_string(tau));
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_sympl_compatibility(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("sympl_compatibility");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 64; ++trial) {
        const FreqCoeffs xi = fs.real_field(rt.grid);
        const FreqCoeffs zeta = fs.real_field(rt.grid);
        const cplx om = symplectic_form_c(ctx, xi, zeta);
        const cplx omj =
            symplectic_form_c(ctx, apply_j_freq(xi), apply_j_freq(zeta));
        w.update(rel_dev(om, omj, 1.0), "random pair");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_sympl_rep_agreement(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("sympl_rep_agreement");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 32; ++trial) {
        const FreqCoeffs xi = fs.real_field(rt.grid);
        const FreqCoeffs zeta = fs.real_field(rt.grid);
        const RealCoeffs xa = freq_to_real(rt.spec, xi);
        const RealCoeffs za = freq_to_real(rt.spec, zeta);
        // ab-representation: -sigma/2 sum mu wW (xi^a zeta^b_- - xi^b zeta^a_-)
        std::vector<cplx> terms(rt.grid->size());
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const std::size_t r = rt.grid->reflect(i);
            terms[i] = -0.5 * ctx.sigma * ctx.orientation *
                       rt.grid->weight(i) * ctx.wtilde[i] * ctx.wronsk[i] *
                       (xa.a[i] * za.b[r] - xa.b[i] * za.a[r]);
        }
        const cplx om_ab = pairwise_sum(terms);
        const cplx om_pm = symplectic_form_c(ctx, xi, zeta);
        w.update(rel_dev(om_ab, om_pm, 1.0), "rep agreement");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_g_positive_definite(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("g_positive_definite");
    Worst w;
    double min_g = 1e300;
    for (int pass = 0; pass < 2; ++pass) {
        const VacuumSpec spec = pass == 0 ? rt.spec : random_spec(rt, fs);
        const PairingContext ctx =
            pass == 0 ? rt.context0()
                      : make_context(rt.family, spec, rt.grid,
                                     rt.taus.front());
        const int trials = pass == 0 ? 1000 : 100;
        for (int t = 0; t < trials; ++t) {
            const FreqCoeffs xi = fs.real_field(rt.grid);
            const double g = g_product(ctx, xi, xi);
            min_g = std::min(min_g, g);
            if (g <= 0.0) w.update(-g + 1.0, "nonpositive g");
        }
        const FreqCoeffs zero = FreqCoeffs::zeros(rt.grid);
        w.update(std::abs(g_product(ctx, zero, zero)), "zero field");
    }
    CheckOutcome out{w.residual, w.mode, {}, {}};
    out.note = "min g(xi,xi) = " + std::to_string(min_g);
    return out;
}

CheckOutcome check_g_properties(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("g_properties");
    const PairingContext& ctx = rt.context0();
    const PairingContext rev = reversed(ctx);
    Worst w;
    for (int trial = 0; trial < 32; ++trial) {
        const FreqCoeffs xi = fs.real_field(rt.grid);
        const FreqCoeffs zeta = fs.real_field(rt.grid);
        const cplx g = g_product_c(ctx, xi, zeta);
        w.update(rel_dev(g, g_product_c(ctx, zeta, xi), 1.0), "symmetry");
        w.update(rel_dev(g, g_product_c(rev, xi, zeta), 1.0), "orientation");
        // definition route 2 omega(xi, J zeta)
        const cplx via_def =
            2.0 * symplectic_form_c(ctx, xi, apply_j_freq(zeta));
        w.update(rel_dev(g, via_def, 1.0), "definition route");
        w.update(std::abs(g.imag()) / (1.0 + std::abs(g)), "real-valued");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_inner_product(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("inner_product");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 32; ++trial) {
        const FreqCoeffs xi = fs.real_field(rt.grid);
        const FreqCoeffs zeta = fs.real_field(rt.grid);
        const cplx ip = complex_inner_product(ctx, xi, zeta);
        const cplx via = g_product_c(ctx, xi, zeta) +
                         2.0 * kI * symplectic_form_c(ctx, xi, zeta);
        w.update(rel_dev(ip, via, 1.0), "g + 2i omega");
        //

        // sesquilinearity with respect to J
        w.update(
            rel_dev(complex_inner_product(ctx, apply_j_freq(xi), zeta),
                    -kI * ip, 1.0),
            "<J xi, zeta>");
        w.update(
            rel_dev(complex_inner_product(ctx, xi, apply_j_freq(zeta)),
                    kI * ip, 1.0),
            "<xi, J zeta>");
        const cplx self = complex_inner_product(ctx, xi, xi);
        w.update(std::abs(self.imag()) / (1.0 + std::abs(self)), "<xi,xi>");
        if (self.real() <= 0.0) w.update(1.0, "<xi,xi> positivity");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_projector_algebra(const ScenarioRuntime& rt) {
    Worst w;
    FieldSampler fs = rt.sampler("projector_algebra");
    for (double tau : rt.taus) {
        const PairingContext ctx = rt.context(tau);
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const MnProjectors pr = projectors_mn(ctx, i);
            const double scale =
                pr.PM.frobenius_norm() * pr.PM.frobenius_norm() +
                pr.PN.frobenius_norm() * pr.PN.frobenius_norm();
            w.update(mat_residual(pr.PM * pr.PM - pr.PM, scale), *rt.grid, i);
            w.update(mat_residual(pr.PN * pr.PN - pr.PN, scale), *rt.grid, i);
            w.update(mat_residual(pr.PM + pr.PN - Mat2::identity(), scale),
                     *rt.grid, i);
        }
    }
    // Reality preservation.
    const PairingContext& ctx = rt.context0();
    const FreqCoeffs f = fs.real_field(rt.grid);
    const double norm = 1.0 + max_abs_diff(f, FreqCoeffs::zeros(rt.grid));
    w.update(reality_residual(apply_pm(ctx, f)) / norm, "PM reality");
    w.update(reality_residual(apply_pn(ctx, f)) / norm, "PN reality");
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_projector_images(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("projector_images");
    const PairingContext ctx = well_conditioned_context(rt);
    Worst w;
    for (int trial = 0; trial < 16; ++trial) {
        const FreqCoeffs f = fs.real_field(rt.grid);
        const FreqCoeffs mf = apply_pm(ctx, f);
        const FreqCoeffs nf = apply_pn(ctx, f);
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            w.update(m_condition_residual(ctx, i, mf.p[i], mf.q[i]),
                     *rt.grid, i);
            w.update(n_condition_residual(ctx, i, nf.p[i], nf.q[i]),
                     *rt.grid, i);
            // Completeness, relative to the split magnitudes.
            const double scale = 1.0 + std::abs(mf.p[i]) + std::abs(nf.p[i]);
            w.update(std::abs(mf.p[i] + nf.p[i] - f.p[i]) / scale, "PM + PN");
            w.update(std::abs(mf.q[i] + nf.q[i] - f.q[i]) / scale, "PM + PN");
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_projector_oblique(const ScenarioRuntime& rt) {
    const PairingContext& ctx = rt.context0();
    // Fixed witness pair: constant p-profiles i and 1+i (real fields).
    FreqCoeffs xi = FreqCoeffs::zeros(rt.grid);
    FreqCoeffs zeta = FreqCoeffs::zeros(rt.grid);
    for (std::size_t i = 0; i < rt.grid->size(); ++i) {
        xi.p[i] = kI;
        xi.q[i] = -kI;
        zeta.p[i] = 1.0 + kI;
        zeta.q[i] = 1.0 - kI;
    }
    const cplx lhs = complex_inner_product(ctx, apply_pm(ctx, xi), zeta);
    const cplx rhs = complex_inner_product(ctx, xi, apply_pm(ctx, zeta));
    const double gap = std::abs(lhs - rhs) /
                       std::max(1.0, std::abs(lhs) + std::abs(rhs));
    const double threshold = 1e-3;
    CheckOutcome out;
    out.residual = std::max(0.0, threshold - gap);
    out.worst_mode = "fixed witness";
    out.note = "normalized self-adjointness gap = " + std::to_string(gap);
    return out;
}

CheckOutcome check_n_neq_jm(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("n_neq_jm");
    const VacuumSpec spec = offdiagonal_spec(rt.family);
    const PairingContext ctx =
        make_context(rt.family, spec, rt.grid, rt.taus.front());
    const FreqCoeffs f = fs.real_field(rt.grid);
    const FreqCoeffs nf = apply_pn(ctx, f);
    // J M elements satisfy p = +q conj(U)/U; exhibit a P_N image violating it.
    double gap = 0.0;
    std::string at;
    for (std::size_t i = 0; i < rt.grid->size(); ++i) {
        const cplx lhs = nf.p[i] * ctx.U[i];
        const cplx rhs = nf.q[i] * std::conj(ctx.U[i]);
        const double scale =
            std::max(std::abs(lhs) + std::abs(rhs), 1e-300);
        const double g = std::abs(lhs - rhs) / scale;
        if (g > gap) {
            gap = g;
            at = mode_label(rt.grid->mode(i));
        }
    }
    const double threshold = 1e-3;
    CheckOutcome out;
    out.residual = std::max(0.0, threshold - gap);
    out.worst_mode = at;
    out.note = "max J M-condition violation of a P_N image = " +
               std::to_string(gap);
    return out;
}

CheckOutcome check_mn_isotropy(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("mn_isotropy");
    const PairingContext ctx = well_conditioned_context(rt);
    Worst w;
    for (int trial = 0; trial < 16; ++trial) {
        const FreqCoeffs xi = fs.real_field(rt.grid);
        const FreqCoeffs zeta = fs.real_field(rt.grid);
        for (bool use_m : {true, false}) {
            const FreqCoeffs px = use_m ? apply_pm(ctx, xi) : apply_pn(ctx, xi);
            const FreqCoeffs pz =
                use_m ? apply_pm(ctx, zeta) : apply_pn(ctx, zeta);
            std::vector<cplx> terms(rt.grid->size());
            for (std::size_t i = 0; i < rt.grid->size(); ++i) {
                const std::size_t r = rt.grid->reflect(i);
                terms[i] = kI * double(ctx.sigma) * rt.grid->weight(i) *
                           ctx.wtilde[i] * ctx.wronsk[i] * ctx.im_cab[i] *
                           (px.p[i] * pz.q[r] - px.q[r] * pz.p[i]);
            }
            w.update(cancellation_residual(terms),
                     use_m ? "M isotropy" : "N isotropy");
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_roundtrip_real_freq(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("roundtrip_real_freq");
    Worst w;
    for (int pass = 0; pass < 3; ++pass) {
        const VacuumSpec spec = pass == 0 ? rt.spec : random_spec(rt, fs);
        const FreqCoeffs f = fs.complex_field(rt.grid);
        const FreqCoeffs f2 = real_to_freq(spec, freq_to_real(spec, f));
        w.update(max_abs_diff(f, f2), "freq round trip");
        RealCoeffs r = RealCoeffs::zeros(rt.grid);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r.a[i] = fs.cgauss();
            r.b[i] = fs.cgauss();
        }
        const RealCoeffs r2 = freq_to_real(spec, real_to_freq(spec, r));
        for (std::size_t i = 0; i < r.size(); ++i) {
            w.update(std::abs(r.a[i] - r2.a[i]), *rt.grid, i);
            w.update(std::abs(r.b[i] - r2.b[i]), *rt.grid, i);
        }
        // Reality transport.
        const FreqCoeffs rf = fs.real_field(rt.grid);
        w.update(reality_residual(freq_to_real(spec, rf)), "reality");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_roundtrip_initial_data(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("roundtrip_initial_data");
    const PairingContext ctx = well_conditioned_context(rt);
    Worst w;
    for (int trial = 0; trial < 16; ++trial) {
        const FreqCoeffs f = fs.complex_field(rt.grid);
        const FreqCoeffs f2 =
            recover_from_initial_data(ctx, evaluate_solution(ctx, f));
        w.update(max_abs_diff(f, f2), "recover(evaluate)");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_transform_linearity(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("transform_linearity");
    const PairingContext& ctx = rt.context0();
    Worst w;
    const cplx al = fs.cgauss(), be = fs.cgauss();
    const FreqCoeffs f = fs.complex_field(rt.grid);
    const FreqCoeffs g = fs.complex_field(rt.grid);
    const FreqCoeffs sum = al * f + be * g;
    {
        const InitialData d1 = evaluate_solution(ctx, sum);
        const InitialData da = evaluate_solution(ctx, f);
        const InitialData db = evaluate_solution(ctx, g);
        for (std::size_t i = 0; i < d1.size(); ++i) {
            const cplx va = al * da.phi[i] + be * db.phi[i];
            const cplx vd = al * da.dphi[i] + be * db.dphi[i];
            w.update(rel_dev(d1.phi[i], va, 1.0), *rt.grid, i);
            w.update(rel_dev(d1.dphi[i], vd, 1.0), *rt.grid, i);
        }
    }
    {
        const RealCoeffs r1 = freq_to_real(rt.spec, sum);
        const RealCoeffs ra = freq_to_real(rt.spec, f);
        const RealCoeffs rb = freq_to_real(rt.spec, g);
        for (std::size_t i = 0; i < r1.size(); ++i)
            w.update(rel_dev(r1.a[i], al * ra.a[i] + be * rb.a[i], 1.0),
                     *rt.grid, i);
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_tau_transport(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("tau_transport");
    Worst w;
    const PairingContext c0 = rt.context(rt.taus.front());
    const PairingContext c1 = rt.context(rt.taus.back());
    for (int trial = 0; trial < 16; ++trial) {
        const FreqCoeffs f = fs.complex_field(rt.grid);
        const InitialData at0 = evaluate_solution(c0, f);
        const FreqCoeffs rec0 = recover_from_initial_data(c0, at0);
        const InitialData at1 = evaluate_solution(c1, rec0);
        const FreqCoeffs rec1 = recover_from_initial_data(c1, at1);
        double norm = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            norm = std::max({norm, std::abs(f.p[i]), std::abs(f.q[i])});
        w.update(max_abs_diff(f, rec1) / std::max(norm, 1.0), "transport");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_j_map_roundtrip(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("j_map_roundtrip");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 16; ++trial) {
        const LeafConfig kappa = fs.complex_config(rt.grid);
        const FreqCoeffs xi = j_sigma_map(ctx, kappa);
        const LeafConfig back = restrict_to_leaf(ctx, xi);
        for (std::size_t i = 0; i < kappa.size(); ++i)
            w.update(rel_dev(kappa.v[i], back.v[i], 1.0), *rt.grid, i);
        // Image lies in J M: p = +q conj(U)/U per mode.
        for (std::size_t i = 0; i < kappa.size(); ++i) {
            const cplx lhs = xi.p[i] * ctx.U[i];
            const cplx rhs = xi.q[i] * std::conj(ctx.U[i]);
            w.update(std::abs(lhs - rhs) /
                         std::max(std::abs(lhs) + std::abs(rhs), 1e-300),
                     *rt.grid, i);
        }
    }
    // Reality preservation.
    const LeafConfig rc = fs.real_config(rt.grid);
    w.update(reality_residual(j_sigma_map(ctx, rc)), "reality");
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_xi_roundtrip(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("xi_roundtrip");
    Worst w;
    for (int pass = 0; pass < 3; ++pass) {
        const VacuumSpec spec = pass == 0 ? rt.spec : random_spec(rt, fs);
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const XiMatrices m = xi_matrices(spec, rt.grid->mode(i));
            w.update((m.Xi * m.XiInv - Mat2::identity()).frobenius_norm(),
                     *rt.grid, i);
            w.update((m.XiInv * m.Xi - Mat2::identity()).frobenius_norm(),
                     *rt.grid, i);
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_vacuum_correspondence(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("vacuum_correspondence");
    Worst w;
    CheckOutcome out;
    for (int pass = 0; pass < 3; ++pass) {
        const VacuumSpec spec = pass == 0 ? rt.spec : random_spec(rt, fs);
        const PairingContext ctx =
            pass == 0 ? rt.context0()
                      : make_context(rt.family, spec, rt.grid,
                                     rt.taus.front());
        for (int trial = 0; trial < 8; ++trial) {
            const LeafConfig phi = fs.real_config(rt.grid);
            const LeafConfig chi = fs.real_config(rt.grid);
            const cplx two_term = omega_vacuum_form(ctx, phi, chi);
            const cplx direct = omega_vacuum_direct(ctx, phi, chi);
            w.update(rel_dev(two_term, direct, 1.0), "two-route");
        }
        if (pass == 0) {
            // Gaussian normalizability: positive real part per mode.
            for (std::size_t i = 0; i < rt.grid->size(); ++i)
                if (vacuum_operator_eig(ctx, i).real() <= 0.0)
                    w.update(1.0, mode_label(rt.grid->mode(i)));
        }
    }
    out.residual = w.residual;
    out.worst_mode = w.mode;
    return out;
}

CheckOutcome check_vacuum_gauge_invariance(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("vacuum_gauge_invariance");
    const PairingContext& base = rt.context0();
    Worst w;
    for (int trial = 0; trial < 100; ++trial) {
        const VacuumSpec scaled =
            gauge_scaled(rt.spec, fs.random_gauge_factor(rt.grid));
        const PairingContext ctx =
            make_context(rt.family, scaled, rt.grid, rt.taus.front());
        for (std::size_t i = 0; i < rt.grid->size(); ++i)
            w.update(rel_dev(vacuum_operator_eig(base, i),
                             vacuum_operator_eig(ctx, i)),
                     *rt.grid, i);
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_kd_consistency(const ScenarioRuntime& rt) {
    Worst w;
    std::vector<double> ref;
    for (double tau : rt.taus) {
        const PairingContext ctx = rt.context(tau);
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const double kd = kd_eig(ctx, i);  // throws if not positive
            if (tau == rt.taus.front())
                ref.push_back(kd);
            else
                w.update(rel_dev(kd, ref[i]), *rt.grid, i);
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_coherent_unitarity(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("coherent_unitarity");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 1000; ++trial) {
        const LeafConfig eta = scaled_config(fs, rt.grid, 0.4);
        const LeafConfig kappa = scaled_config(fs, rt.grid, 0.4);
        const cplx s = coherent_inner_product_schrodinger(ctx, eta, kappa);
        const cplx h = coherent_inner_product_holomorphic(
            ctx, characterizing_solution(ctx, kappa),
            characterizing_solution(ctx, eta));
        w.update(rel_dev(s, h), "random pair");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_coherent_modulus_bound(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("coherent_modulus_bound");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 64; ++trial) {
        const LeafConfig eta = scaled_config(fs, rt.grid, 0.5);
        const LeafConfig kappa = scaled_config(fs, rt.grid, 0.5);
        const cplx s = coherent_inner_product_schrodinger(ctx, eta, kappa);
        w.update(std::max(0.0, std::abs(s) - 1.0), "|<eta,kappa>| <= 1");
        // Gaussian-overlap oracle for the exponent.
        std::vector<cplx> terms(rt.grid->size());
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const double kd = kd_eig(ctx, i);
            const cplx d = eta.v[i] - kappa.v[i];
            terms[i] = rt.grid->weight(i) * kd *
                       (-0.5 * std::norm(d) +
                        kI * std::imag(std::conj(eta.v[i]) * kappa.v[i]));
        }
        w.update(rel_dev(s, std::exp(pairwise_sum(terms))), "oracle");
        w.update(std::abs(coherent_inner_product_schrodinger(ctx, eta, eta) -
                          1.0),
                 "normalization");
    }
    const LeafConfig zero = LeafConfig::zeros(rt.grid);
    w.update(std::abs(coherent_inner_product_schrodinger(ctx, zero, zero) -
                      1.0),
             "vacuum overlap");
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_amplitude_equality_interval(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("amplitude_equality_interval");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 1000; ++trial) {
        const LeafConfig eta = scaled_config(fs, rt.grid, 0.4);
        const LeafConfig kappa = scaled_config(fs, rt.grid, 0.4);
        const AmplitudeResult sfq = amplitude_sfq_interval(ctx, eta, kappa);
        const AmplitudeResult hq = amplitude_hq_interval(
            ctx, characterizing_solution(ctx, eta),
            characterizing_solution(ctx, kappa));
        w.update(rel_dev(sfq.value, hq.value), "cross-scheme");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_amplitude_equality_rod(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("amplitude_equality_rod");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 1000; ++trial) {
        const LeafConfig kappa = scaled_config(fs, rt.grid, 0.4);
        const AmplitudeResult sfq = amplitude_sfq_rod(ctx, kappa);
        const RodBoundaryField field{
            freq_to_real(rt.spec, characterizing_solution(ctx, kappa))};
        const AmplitudeResult hq = amplitude_hq_rod(ctx, rt.spec, field);
        w.update(rel_dev(sfq.value, hq.value), "cross-scheme");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_amplitude_normalization(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("amplitude_normalization");
    const PairingContext& ctx = rt.context0();
    Worst w;
    const LeafConfig zero = LeafConfig::zeros(rt.grid);
    const LeafConfig eta = scaled_config(fs, rt.grid, 0.7);
    if (rt.family.kind == RegionKind::Rod) {
        w.update(std::abs(amplitude_sfq_rod(ctx, zero).value - 1.0),
                 "vacuum persistence");
        // Purely regular boundary field: xi^I = 0, amplitude 1.
        RodBoundaryField reg{RealCoeffs::zeros(rt.grid)};
        FieldSampler fs2 = rt.sampler("amplitude_normalization_reg");
        const RealCoeffs rnd = fs2.real_ab_field(rt.grid);
        reg.xi_ab.a = rnd.a;
        const AmplitudeResult amp = amplitude_hq_rod(ctx, rt.spec, reg);
        w.update(std::abs(amp.value - 1.0), "regular boundary field");
        w.update(std::abs(amp.value - std::exp(amp.exponent())),
                 "per-mode table");
    } else {
        w.update(
            std::abs(amplitude_sfq_interval(ctx, eta, eta).value - 1.0),
            "eta = kappa");
        w.update(
            std::abs(amplitude_sfq_interval(ctx, zero, zero).value - 1.0),
            "vacuum persistence");
        const FreqCoeffs xi = fs.real_field(rt.grid);
        const AmplitudeResult amp = amplitude_hq_interval(ctx, xi, xi);
        w.update(std::abs(amp.value - 1.0), "zeta = xi");
        w.update(std::abs(amp.value - std::exp(amp.exponent())),
                 "per-mode table");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_amplitude_modulus_bound(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("amplitude_modulus_bound");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 64; ++trial) {
        cplx value;
        if (rt.family.kind == RegionKind::Rod) {
            value = amplitude_sfq_rod(ctx, scaled_config(fs, rt.grid, 0.5))
                        .value;
        } else {
            value = amplitude_sfq_interval(ctx,
                                           scaled_config(fs, rt.grid, 0.5),
                                           scaled_config(fs, rt.grid, 0.5))
                        .value;
        }
        w.update(std::max(0.0, std::abs(value) - 1.0), "|amplitude| <= 1");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_interval_asymptotic(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("interval_asymptotic");
    Worst w;
    for (int trial = 0; trial < 16; ++trial) {
        const FreqCoeffs zeta = fs.real_field(rt.grid);
        const FreqCoeffs xi = fs.real_field(rt.grid);
        const IntervalDecomposition d = decompose_interval(zeta, xi);
        w.update(reality_residual(d.lamR), "lambda^R reality");
        w.update(reality_residual(d.lamI), "lambda^I reality");
        // Reconstruction identity: (zeta, xi) = (lamR + J lamI, lamR - J lamI).
        const FreqCoeffs jlam = apply_j_freq(d.lamI);
        w.update(max_abs_diff(d.lamR + jlam, zeta), "zeta reconstruction");
        w.update(max_abs_diff(d.lamR - jlam, xi), "xi reconstruction");
        // Dual route to the asymptotic field.
        const FreqCoeffs splice = asymptotic_field_interval(zeta, xi);
        const FreqCoeffs via = d.lamR - kI * d.lamI;
        w.update(max_abs_diff(splice, via), "splice vs R - iI");
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_rod_asymptotic(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("rod_asymptotic");
    Worst w;
    for (int pass = 0; pass < 2; ++pass) {
        const VacuumSpec spec = pass == 0 ? rt.spec : random_spec(rt, fs);
        for (int trial = 0; trial < 8; ++trial) {
            const RodBoundaryField field{fs.real_ab_field(rt.grid)};
            const RodDecomposition d = decompose_rod(spec, field);
            // Reassembly through Xi.
            for (std::size_t i = 0; i < rt.grid->size(); ++i) {
                const XiMatrices m = xi_matrices(spec, rt.grid->mode(i));
                auto [a, b] = m.Xi.apply(d.xiR.a[i], d.xiI.a[i]);
                w.update(std::abs(a - field.xi_ab.a[i]), *rt.grid, i);
                w.update(std::abs(b - field.xi_ab.b[i]), *rt.grid, i);
            }
            // Dual-route asymptotic field.
            const RealCoeffs hat = asymptotic_field_rod(spec, field);
            for (std::size_t i = 0; i < rt.grid->size(); ++i) {
                const cplx via = d.xiR.a[i] - kI * d.xiI.a[i];
                w.update(rel_dev(hat.a[i], via, 1.0), *rt.grid, i);
                w.update(std::abs(hat.b[i]), *rt.grid, i);
            }
            // Frequency-form relations.
            const FreqCoeffs hat_f = real_to_freq(spec, hat);
            const FreqCoeffs xi_f = real_to_freq(spec, field.xi_ab);
            for (std::size_t i = 0; i < rt.grid->size(); ++i) {
                w.update(rel_dev(hat_f.q[i], xi_f.q[i], 1.0), *rt.grid, i);
                const auto [ca, cb] = spec.eval(rt.grid->mode(i));
                const cplx expect = -std::conj(cb) / cb * hat_f.q[i];
                w.update(rel_dev(hat_f.p[i], expect, 1.0), *rt.grid, i);
            }
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_phase_conjugation(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("phase_conjugation");
    Worst w;
    CheckOutcome out;
    for (int pass = 0; pass < 3; ++pass) {
        const VacuumSpec spec = pass == 0 ? rt.spec : random_spec(rt, fs);
        for (double tau : rt.taus) {
            const PairingContext ctx =
                make_context(rt.family, spec, rt.grid, tau);
            for (std::size_t i = 0; i < rt.grid->size(); ++i) {
                const AbdcEigs e = abdc_operators(ctx, i);
                const Mat2 F = f_matrix(ctx, i);
                const Mat2 M{e.A, e.B, e.D, e.C};
                const double raw = conjugation_residual_with(ctx, i, e);
                const double r =
                    raw / (F.frobenius_norm() * (1.0 + M.frobenius_norm()));
                w.update(r, *rt.grid, i);
                if (pass == 0 && tau == rt.taus.front())
                    out.mode_residuals.emplace_back(
                        mode_label(rt.grid->mode(i)), r);
            }
        }
    }
    out.residual = w.residual;
    out.worst_mode = w.mode;
    return out;
}

CheckOutcome check_phase_negative_control(const ScenarioRuntime& rt) {
    const PairingContext& ctx = rt.context0();
    double best = 0.0;
    std::string at;
    for (std::size_t i = 0; i < rt.grid->size(); ++i) {
        AbdcEigs e = abdc_operators(ctx, i);
        e.C += 0.1;  // corrupt C only
        const Mat2 F = f_matrix(ctx, i);
        const Mat2 M{e.A, e.B, e.D, e.C};
        const double r = conjugation_residual_with(ctx, i, e) /
                         (F.frobenius_norm() * (1.0 + M.frobenius_norm()));
        if (r > best) {
            best = r;
            at = mode_label(rt.grid->mode(i));
        }
    }
    const double threshold = 1e-2;
    CheckOutcome out;
    out.residual = std::max(0.0, threshold - best);
    out.worst_mode = at;
    out.note = "perturbed-C residual = " + std::to_string(best);
    return out;
}

CheckOutcome check_phase_subspaces(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("phase_subspaces");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (std::size_t i = 0; i < rt.grid->size(); ++i) {
        const PhaseSubspaceResiduals r =
            phase_subspace_relations(ctx, i, fs.cgauss(), fs.cgauss());
        w.update(r.worst(), *rt.grid, i);
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_phase_compatibility(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("phase_compatibility");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 16; ++trial) {
        PhasePoint x, y;
        x.grid = y.grid = rt.grid;
        x.vph.resize(rt.grid->size());
        x.pi.resize(rt.grid->size());
        y.vph.resize(rt.grid->size());
        y.pi.resize(rt.grid->size());
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            x.vph[i] = fs.cgauss();
            x.pi[i] = fs.cgauss();
            y.vph[i] = fs.cgauss();
            y.pi[i] = fs.cgauss();
        }
        const cplx om = phase_symplectic_form(ctx, x, y);
        const cplx omj = phase_symplectic_form(ctx, apply_j_phase(ctx, x),
                                               apply_j_phase(ctx, y));
        w.update(rel_dev(om, omj, 1.0), "phase-space compatibility");
        // F carries the phase-space point to frequency coefficients;
        // J must commute with the transport.
        FreqCoeffs fx = FreqCoeffs::zeros(rt.grid);
        FreqCoeffs fjx = FreqCoeffs::zeros(rt.grid);
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const Mat2 F = f_matrix(ctx, i);
            std::tie(fx.p[i], fx.q[i]) = F.apply(x.vph[i], x.pi[i]);
            const PhasePoint jx = apply_j_phase(ctx, x);
            std::tie(fjx.p[i], fjx.q[i]) = F.apply(jx.vph[i], jx.pi[i]);
        }
        const FreqCoeffs jfx = apply_j_freq(fx);
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const double scale =
                std::abs(fx.p[i]) + std::abs(fx.q[i]) + 1.0;
            w.update(std::abs(jfx.p[i] - fjx.p[i]) / scale, *rt.grid, i);
            w.update(std::abs(jfx.q[i] - fjx.q[i]) / scale, *rt.grid, i);
        }
    }
    return {w.residual, w.mode, {}, {}};
}

CheckOutcome check_correspondence_kernel(const ScenarioRuntime& rt) {
    FieldSampler fs = rt.sampler("correspondence_kernel");
    const PairingContext& ctx = rt.context0();
    Worst w;
    for (int trial = 0; trial < 16; ++trial) {
        const LeafConfig phi = fs.real_config(rt.grid);
        const LeafConfig eta = scaled_config(fs, rt.grid, 0.6);
        const FreqCoeffs xi = characterizing_solution(ctx, eta);
        const FreqCoeffs zero_xi = FreqCoeffs::zeros(rt.grid);
        const LeafConfig zero_cfg = LeafConfig::zeros(rt.grid);

        // xi = 0: the conjugated kernel exponent is the vacuum Gaussian.
        const cplx vac = std::conj(correspondence_kernel_log(ctx, zero_xi, phi));
        const cplx viaOmega = -0.5 * omega_vacuum_form(ctx, phi, phi);
        w.update(rel_dev(vac, viaOmega, 1.0), "vacuum specialization");

        // vph = 0: only the last term survives.
        const cplx at0 = correspondence_kernel_log(ctx, xi, zero_cfg);
        const FreqCoeffs jqxi = j_sigma_map(ctx, restrict_to_leaf(ctx, xi));
        const cplx expect0 = -0.5 * complex_inner_product(ctx, jqxi, xi);
        w.update(rel_dev(at0, expect0, 1.0), "vph = 0 specialization");

        // Coherent specialization: subtracting the vacuum part leaves the
        // Schroedinger coherent exponent.
        const cplx coh =
            std::conj(correspondence_kernel_log(ctx, xi, phi)) - vac;
        std::vector<cplx> terms(rt.grid->size());
        for (std::size_t i = 0; i < rt.grid->size(); ++i) {
            const std::size_t r = rt.grid->reflect(i);
            const double kd = kd_eig(ctx, i);
            const cplx u = ctx.U[i];
            terms[i] = rt.grid->weight(i) *
                       (phi.v[i] * eta.v[r] / std::conj(u) -
                        0.5 * kd *
                            (eta.v[i] * eta.v[r] * u / std::conj(u) +
                             std::norm(eta.v[i])));
        }
        w.update(rel_dev(coh, pairwise_sum(terms), 1.0),
                 "coherent specialization");
    }
    return {w.residual, w.mode, {}, {}};
}

std::set<RegionKind> all_regions() {
    return {RegionKind::Interval, RegionKind::Tube, RegionKind::Rod};
}
std::set<RegionKind> two_leaf_regions() {
    return {RegionKind::Interval, RegionKind::Tube};
}
std::set<RegionKind> rod_only() { return {RegionKind::Rod}; }

std::vector<CheckDef> build_registry() {
    std::vector<CheckDef> defs;
    auto add = [&defs](std::string id, std::string desc, double tol,
                       std::set<RegionKind> regions,
                       CheckOutcome (*fn)(const ScenarioRuntime&)) {
        defs.push_back({std::move(id), std::move(desc), tol,
                        std::move(regions), fn});
    };

    add("mode_reflection_symmetry",
        "mode samples invariant under momentum reflection", 1e-12,
        all_regions(), check_mode_reflection);
    add("wronskian_nonzero",
        "Wronskian nonvanishing over random (mode, tau)", 0.0, all_regions(),
        check_wronskian_nonzero);
    add("weighted_wronskian_constancy",
        "wtilde * W independent of the leaf parameter (64-point grids)",
        1e-9, all_regions(), check_weighted_wronskian);
    add("mode_derivative_consistency",
        "analytic derivatives match central differences (h = 1e-4)", 1e-6,
        all_regions(), check_derivative_consistency);
    add("vacuum_admissibility",
        "spec reflection-symmetric, nondegenerate, positive", 1e-12,
        all_regions(), check_vacuum_admissibility);
    add("j_squared_real", "J^2 = -1 for the real-expansion matrix", 1e-12,
        all_regions(), check_j_squared_real);
    add("j_squared_freq", "J^2 = -1 for the frequency action", 1e-12,
        all_regions(), check_j_squared_freq);
    add("j_squared_phase",
        "phase-space ABDC constraints (relative per mode)", 1e-12,
        all_regions(), check_j_squared_phase);
    add("j_conjugacy_real_freq",
        "real_to_freq intertwines the two J actions", 1e-12, all_regions(),
        check_j_conjugacy);
    add("j_gauge_invariance",
        "J, (Q_r, dAlpha) and vacuum operator invariant under c -> f c",
        1e-12, all_regions(), check_j_gauge_invariance);
    add("vacuum_invariants_consistency",
        "(Q_r, dAlpha) parametrization gauge-stable", 1e-12, all_regions(),
        check_vacuum_invariants_examples);
    add("sympl_antisymmetry",
        "[xi,phi] - [phi,xi] = 2 omega; orientation flips signs", 1e-12,
        all_regions(), check_sympl_antisymmetry);
    add("sympl_tau_independence",
        "omega agrees across the sample leaves", 1e-10, all_regions(),
        check_sympl_tau_independence);
    add("sympl_compatibility", "omega(J xi, J zeta) = omega(xi, zeta)",
        1e-10, all_regions(), check_sympl_compatibility);
    add("sympl_rep_agreement",
        "frequency and ab representations of omega agree", 1e-12,
        all_regions(), check_sympl_rep_agreement);
    add("g_positive_definite",
        "g(xi, xi) > 0 on 10^3 random nonzero real fields", 0.0,
        all_regions(), check_g_positive_definite);
    add("g_properties",
        "g symmetric, orientation-invariant, equals 2 omega(xi, J zeta)",
        1e-12, all_regions(), check_g_properties);
    add("inner_product_consistency",
        "<.,.> = g + 2i omega, sesquilinear w.r.t. J, positive", 1e-12,
        all_regions(), check_inner_product);
    add("projector_algebra",
        "P_M, P_N idempotent, complete, reality-preserving (relative)",
        1e-10, all_regions(), check_projector_algebra);
    add("projector_images",
        "P_M image vanishes on the leaf; P_N image has flat derivative",
        1e-10, all_regions(), check_projector_images);
    add("projector_oblique_witness",
        "fixed witness: P_M not self-adjoint (gap above 1e-3)", 0.0,
        all_regions(), check_projector_oblique);
    add("n_neq_jm_witness",
        "P_N image violates the J M condition for a generic vacuum", 0.0,
        all_regions(), check_n_neq_jm);
    add("mn_isotropy", "omega vanishes on M x M and N x N images", 1e-12,
        all_regions(), check_mn_isotropy);
    add("roundtrip_real_freq", "real <-> frequency round trips", 1e-12,
        all_regions(), check_roundtrip_real_freq);
    add("roundtrip_initial_data",
        "initial data recovery inverts evaluation", 1e-12, all_regions(),
        check_roundtrip_initial_data);
    add("transform_linearity",
        "coefficient maps linear in their field argument", 1e-12,
        all_regions(), check_transform_linearity);
    add("tau_transport",
        "recover-evaluate-recover across leaves returns the coefficients",
        1e-10, all_regions(), check_tau_transport);
    add("j_map_roundtrip",
        "restriction inverts j_sigma_map; image in J M; reality kept",
        1e-12, all_regions(), check_j_map_roundtrip);
    add("xi_matrix_roundtrip", "Xi XiInv = 1 per mode", 1e-14, all_regions(),
        check_xi_roundtrip);
    add("vacuum_correspondence",
        "two-term Omega route equals the vacuum-operator pairing", 1e-10,
        all_regions(), check_vacuum_correspondence);
    add("vacuum_gauge_invariance",
        "vacuum operator invariant under 100 random gauge functions", 1e-12,
        all_regions(), check_vacuum_gauge_invariance);
    add("kd_consistency", "K^D positive and leaf-independent", 1e-10,
        all_regions(), check_kd_consistency);
    add("coherent_unitarity",
        "Schroedinger and holomorphic coherent inner products agree", 1e-10,
        all_regions(), check_coherent_unitarity);
    add("coherent_modulus_bound",
        "|<eta,kappa>| <= 1 with Gaussian-overlap oracle", 1e-12,
        all_regions(), check_coherent_modulus_bound);
    add("amplitude_equality_interval",
        "SFQ = HQ free amplitudes on 10^3 random coherent pairs", 1e-10,
        two_leaf_regions(), check_amplitude_equality_interval);
    add("amplitude_equality_rod",
        "SFQ = HQ rod amplitudes on 10^3 random coherent states", 1e-10,
        rod_only(), check_amplitude_equality_rod);
    add("amplitude_normalization",
        "coherent normalization and vacuum persistence amplitudes are 1",
        1e-12, all_regions(), check_amplitude_normalization);
    add("amplitude_modulus_bound", "|amplitude| <= 1", 1e-12, all_regions(),
        check_amplitude_modulus_bound);
    add("interval_asymptotic_consistency",
        "boundary decomposition and asymptotic-field splice agree", 1e-12,
        two_leaf_regions(), check_interval_asymptotic);
    add("rod_asymptotic_consistency",
        "rod asymptotic field: dual route and frequency relations", 1e-12,
        rod_only(), check_rod_asymptotic);
    add("phase_conjugation",
        "F M_ABDC = diag(-i, i) F per mode (relative)", 1e-12, all_regions(),
        check_phase_conjugation);
    add("phase_negative_control",
        "perturbing C by 0.1 breaks the conjugation identity", 0.0,
        all_regions(), check_phase_negative_control);
    add("phase_subspace_mapping",
        "A, B map into N and D, C into M through F", 1e-10, all_regions(),
        check_phase_subspaces);
    add("phase_compatibility",
        "phase-space omega and J compatible; F intertwines J", 1e-10,
        all_regions(), check_phase_compatibility);
    add("correspondence_kernel",
        "kernel exponent specializes to vacuum and coherent forms", 1e-10,
        all_regions(), check_correspondence_kernel);
    return defs;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> registry = build_registry();
    return registry;
}

}  // namespace gbfkg
