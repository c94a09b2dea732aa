#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace pdc {

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Mat2 {
    std::array<double, 4> e{};

    double& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    double operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    static Mat2 zero() { return {}; }
    static Mat2 identity()
    {
        Mat2 m;
        m(0, 0) = m(1, 1) = 1.0;
        return m;
    }

    bool finite() const;
    double max_abs() const;
};

struct Mat4 {
    std::array<double, 16> e{};

    double& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
    double operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

    static Mat4 zero() { return {}; }
    static Mat4 identity()
    {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    Mat4 operator+(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 operator*(const Mat4& o) const;
    Mat4 operator*(double s) const;

    Mat4 transposed() const;
    double trace() const;
    bool finite() const;
    double max_abs() const;
    double norm_inf() const;  // max absolute row sum
};

using Complex = std::complex<double>;

// Eigenvalue quadruple of a real 4x4 matrix, canonically sorted by
// (real part, imaginary part); conjugate pairs matched and symmetrized.
using ComplexQuad = std::array<Complex, 4>;

// e^M by scaling-and-squaring of a truncated Taylor series; tol is the
// elementwise truncation target relative to the largest entry magnitude,
// tol in (0, 1e-6].
Mat4 expm(const Mat4& m, double tol = 1e-13);

// All four eigenvalues of a symmetric matrix, nondecreasing (cyclic Jacobi).
// Input must be symmetric within 1e-10; it is symmetrized before use.
std::array<double, 4> sym_eigvals(const Mat4& v);

// Roots of the characteristic polynomial (Faddeev-LeVerrier coefficients,
// Durand-Kerner iteration with Newton polish, conjugate pairing).
ComplexQuad gen_eigvals(const Mat4& m);

double det(const Mat2& m);
double det(const Mat4& m);  // LU with partial pivoting

}  // namespace pdc
