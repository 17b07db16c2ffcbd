#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace gbfkg {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// Tolerance bundle used by the verification checks. `scale` multiplies
/// both bounds (CLI --tolerance-scale).
struct Tolerances {
    double relative = 1e-10;
    double absolute = 1e-12;
    double scale = 1.0;

    double rel() const { return relative * scale; }
    double abs() const { return absolute * scale; }
};

/// 2x2 complex matrix acting on per-mode coefficient pairs. All the
/// per-mode linear maps in this library (projectors, recovery maps,
/// Xi matrices, F) are instances of this.
struct Mat2 {
    cplx a11{}, a12{}, a21{}, a22{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2 operator+(const Mat2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Mat2 operator-(const Mat2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Mat2 operator*(cplx s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

    std::pair<cplx, cplx> apply(cplx x, cplx y) const {
        return {a11 * x + a12 * y, a21 * x + a22 * y};
    }

    cplx det() const { return a11 * a22 - a12 * a21; }

    double frobenius_norm() const {
        return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) +
                         std::norm(a22));
    }
};

inline Mat2 operator*(cplx s, const Mat2& m) { return m * s; }

/// Deterministic pairwise summation. The reduction tree depends only on
/// the element count, so results are bit-for-bit reproducible.
template <typename T>
T pairwise_sum(std::span<const T> v) {
    const std::size_t n = v.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T acc = v[0];
        for (std::size_t i = 1; i < n; ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v));
}

/// Relative deviation |a-b| / max(|a|,|b|,floor).
inline double rel_dev(cplx a, cplx b, double floor = 1e-300) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return std::abs(a - b) / scale;
}

inline double rel_dev(double a, double b, double floor = 1e-300) {
    return rel_dev(cplx(a), cplx(b), floor);
}

/// FNV-1a 64-bit hash, used for scenario/report fingerprints and for
/// deriving per-check RNG streams from the scenario seed.
inline std::uint64_t fnv1a64(std::span<const unsigned char> bytes,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::string_view s,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
    return fnv1a64(
        std::span<const unsigned char>(
            reinterpret_cast<const unsigned char*>(s.data()), s.size()),
        seed);
}

}  // namespace gbfkg
