#include "gbfkg/random_fields.hpp"

#include <cmath>

namespace gbfkg {

std::uint64_t FieldSampler::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

FieldSampler FieldSampler::keyed(std::uint64_t seed, std::string_view label) {
    return FieldSampler(fnv1a64(label, seed ^ 0x9e3779b97f4a7c15ull));
}

double FieldSampler::uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double FieldSampler::gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
}

cplx FieldSampler::cgauss() {
    const double re = gauss();
    const double im = gauss();
    return {re, im};
}

FreqCoeffs FieldSampler::complex_field(GridPtr grid) {
    FreqCoeffs f = FreqCoeffs::zeros(std::move(grid));
    for (std::size_t i = 0; i < f.size(); ++i) {
        f.p[i] = cgauss();
        f.q[i] = cgauss();
    }
    return f;
}

LeafConfig FieldSampler::complex_config(GridPtr grid) {
    LeafConfig c = LeafConfig::zeros(std::move(grid));
    for (auto& v : c.v) v = cgauss();
    return c;
}

FreqCoeffs FieldSampler::real_field(GridPtr grid) {
    // Reality ties q to p across the involution and leaves p free.
    FreqCoeffs f = FreqCoeffs::zeros(grid);
    for (auto& v : f.p) v = cgauss();
    for (std::size_t i = 0; i < f.size(); ++i)
        f.q[i] = std::conj(f.p[grid->reflect(i)]);
    return f;
}

LeafConfig FieldSampler::real_config(GridPtr grid) {
    LeafConfig c = LeafConfig::zeros(grid);
    std::vector<cplx> draw(grid->size());
    for (auto& v : draw) v = cgauss();
    for (std::size_t i = 0; i < c.size(); ++i)
        c.v[i] = 0.5 * (draw[i] + std::conj(draw[grid->reflect(i)]));
    return c;
}

RealCoeffs FieldSampler::real_ab_field(GridPtr grid) {
    RealCoeffs rc = RealCoeffs::zeros(grid);
    std::vector<cplx> da(grid->size()), db(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        da[i] = cgauss();
        db[i] = cgauss();
    }
    for (std::size_t i = 0; i < rc.size(); ++i) {
        const std::size_t r = grid->reflect(i);
        rc.a[i] = 0.5 * (da[i] + std::conj(da[r]));
        rc.b[i] = 0.5 * (db[i] + std::conj(db[r]));
    }
    return rc;
}

VacuumSpec FieldSampler::random_admissible_spec(GridPtr grid, int sigma,
                                                double wronskian_sign) {
    // -sigma * Im(conj(ca) cb) * W > 0 fixes the sign of the phase
    // difference dAlpha = arg(cb) - arg(ca).
    const double im_sign = -double(sigma) * (wronskian_sign > 0 ? 1.0 : -1.0);
    std::vector<std::pair<cplx, cplx>> table(grid->size());
    std::vector<bool> done(grid->size(), false);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        if (done[i]) continue;
        const double ra = std::exp((uniform() - 0.5) * 2.0 * std::log(3.0));
        const double rb = std::exp((uniform() - 0.5) * 2.0 * std::log(3.0));
        const double alpha_a = (uniform() - 0.5) * 2.0 * M_PI;
        const double dalpha =
            im_sign * (0.15 + 0.7 * M_PI * uniform());  // away from {0, pi}
        const cplx ca = ra * std::exp(kI * alpha_a);
        const cplx cb = rb * std::exp(kI * (alpha_a + dalpha));
        table[i] = {ca, cb};
        table[grid->reflect(i)] = {ca, cb};
        done[i] = true;
        done[grid->reflect(i)] = true;
    }
    return table_spec(std::move(grid), std::move(table));
}

std::function<cplx(const ModeIndex&)> FieldSampler::random_gauge_factor(
    GridPtr grid) {
    std::vector<cplx> table(grid->size());
    std::vector<bool> done(grid->size(), false);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        if (done[i]) continue;
        const double mod = std::exp((uniform() - 0.5) * 2.0 * std::log(4.0));
        const double phase = (uniform() - 0.5) * 2.0 * M_PI;
        table[i] = mod * std::exp(kI * phase);
        table[grid->reflect(i)] = table[i];
        done[i] = true;
        done[grid->reflect(i)] = true;
    }
    auto shared = std::make_shared<std::vector<cplx>>(std::move(table));
    return [grid = std::move(grid), shared](const ModeIndex& idx) {
        return (*shared)[grid->find(idx)];
    };
}

}  // namespace gbfkg
