#pragma once

#include <cmath>
#include <cstdint>

#include "pdc/coupler.hpp"
#include "pdc/gaussian_dynamics.hpp"
#include "pdc/matkernel.hpp"

namespace testsupport {

// Deterministic draws, independent of any stdlib distribution details.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64()
    {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline pdc::CouplerParams random_params(Rng& rng, double mag_hi)
{
    const double two_pi = 2.0 * M_PI;
    return pdc::CouplerParams::make(rng.uniform(0.0, mag_hi), rng.uniform(0.0, mag_hi),
                                    rng.uniform(0.0, mag_hi), rng.uniform(0.0, two_pi),
                                    rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi));
}

// Fixed-step classic RK4 for dS/dz = M S, S(0) = I.
inline pdc::Mat4 rk4_propagator(const pdc::Mat4& m, double z, double step)
{
    pdc::Mat4 s = pdc::Mat4::identity();
    const long n = std::lround(z / step);
    const double h = z / static_cast<double>(n);
    for (long i = 0; i < n; ++i) {
        const pdc::Mat4 k1 = m * s;
        const pdc::Mat4 k2 = m * (s + k1 * (h / 2.0));
        const pdc::Mat4 k3 = m * (s + k2 * (h / 2.0));
        const pdc::Mat4 k4 = m * (s + k3 * h);
        s = s + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
    return s;
}

inline pdc::Mat4 mat4_from_blocks(const pdc::Mat2& a, const pdc::Mat2& b, const pdc::Mat2& c)
{
    pdc::Mat4 v;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            v(i, j) = a(i, j);
            v(i + 2, j + 2) = b(i, j);
            v(i, j + 2) = c(i, j);
            v(j + 2, i) = c(i, j);
        }
    return v;
}

inline pdc::CovarianceMatrix tmsv_covariance(double r)
{
    pdc::Mat2 a, c;
    a(0, 0) = a(1, 1) = 0.5 * std::cosh(2.0 * r);
    c(0, 0) = 0.5 * std::sinh(2.0 * r);
    c(1, 1) = -0.5 * std::sinh(2.0 * r);
    pdc::CovarianceMatrix v;
    v.v = mat4_from_blocks(a, a, c);
    return v;
}

// Elementary symplectic factors in the (x_A, p_A, x_B, p_B) ordering.
inline pdc::Mat4 local_rotation(double ta, double tb)
{
    pdc::Mat4 s;
    s(0, 0) = std::cos(ta);
    s(0, 1) = std::sin(ta);
    s(1, 0) = -std::sin(ta);
    s(1, 1) = std::cos(ta);
    s(2, 2) = std::cos(tb);
    s(2, 3) = std::sin(tb);
    s(3, 2) = -std::sin(tb);
    s(3, 3) = std::cos(tb);
    return s;
}

inline pdc::Mat4 local_squeeze(double ra, double rb)
{
    pdc::Mat4 s;
    s(0, 0) = std::exp(-ra);
    s(1, 1) = std::exp(ra);
    s(2, 2) = std::exp(-rb);
    s(3, 3) = std::exp(rb);
    return s;
}

inline pdc::Mat4 beamsplitter(double theta)
{
    pdc::Mat4 s;
    const double c = std::cos(theta), sn = std::sin(theta);
    for (int i = 0; i < 2; ++i) {
        s(i, i) = c;
        s(i, i + 2) = sn;
        s(i + 2, i) = -sn;
        s(i + 2, i + 2) = c;
    }
    return s;
}

inline pdc::Mat4 random_symplectic(Rng& rng, double max_squeeze)
{
    const double two_pi = 2.0 * M_PI;
    const pdc::Mat4 s = local_rotation(rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi)) *
                        beamsplitter(rng.uniform(0.0, two_pi)) *
                        local_squeeze(rng.uniform(-max_squeeze, max_squeeze),
                                      rng.uniform(-max_squeeze, max_squeeze)) *
                        local_rotation(rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi));
    return s;
}

// Random physical (generally mixed) two-mode covariance matrix.
inline pdc::CovarianceMatrix random_covariance(Rng& rng, double max_squeeze, double max_thermal)
{
    const pdc::Mat4 s = random_symplectic(rng, max_squeeze);
    pdc::Mat4 d;
    const double n1 = rng.uniform(0.5, max_thermal);
    const double n2 = rng.uniform(0.5, max_thermal);
    d(0, 0) = d(1, 1) = n1;
    d(2, 2) = d(3, 3) = n2;
    pdc::Mat4 raw = s * d * s.transposed();
    pdc::CovarianceMatrix v;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v.v(i, j) = 0.5 * (raw(i, j) + raw(j, i));
    return v;
}

inline double max_abs_diff(const pdc::Mat4& a, const pdc::Mat4& b)
{
    return (a - b).max_abs();
}

inline double circular_distance(double a, double b)
{
    const double two_pi = 2.0 * M_PI;
    double d = std::fabs(pdc::canonical_phase(a) - pdc::canonical_phase(b));
    return std::min(d, two_pi - d);
}

}  // namespace testsupport
