#include "pdc/matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pdc {

bool Mat2::finite() const
{
    for (double x : e)
        if (!std::isfinite(x)) return false;
    return true;
}

double Mat2::max_abs() const
{
    double m = 0.0;
    for (double x : e) m = std::max(m, std::abs(x));
    return m;
}

Mat4 Mat4::operator+(const Mat4& o) const
{
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

Mat4 Mat4::operator-(const Mat4& o) const
{
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

Mat4 Mat4::operator*(const Mat4& o) const
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat4 Mat4::operator*(double s) const
{
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] * s;
    return r;
}

Mat4 Mat4::transposed() const
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
    return r;
}

double Mat4::trace() const { return e[0] + e[5] + e[10] + e[15]; }

bool Mat4::finite() const
{
    for (double x : e)
        if (!std::isfinite(x)) return false;
    return true;
}

double Mat4::max_abs() const
{
    double m = 0.0;
    for (double x : e) m = std::max(m, std::abs(x));
    return m;
}

double Mat4::norm_inf() const
{
    double m = 0.0;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += std::abs((*this)(i, j));
        m = std::max(m, s);
    }
    return m;
}

Mat4 expm(const Mat4& m, double tol)
{
    if (!m.finite()) throw InvalidInput("expm: non-finite matrix entry");
    if (!(tol > 0.0) || tol > 1e-6) throw InvalidInput("expm: tol outside (0, 1e-6]");

    const double n = m.norm_inf();
    if (n == 0.0) return Mat4::identity();

    // Scale so the series argument has norm <= 0.25, then square back.
    const double theta = 0.25;
    int s = 0;
    if (n > theta) s = static_cast<int>(std::ceil(std::log2(n / theta)));
    const Mat4 a = m * std::ldexp(1.0, -s);

    // Squaring roughly doubles the relative error per step; budget for it.
    const double term_tol = std::min(tol, 1e-16) * std::ldexp(1.0, -s);

    Mat4 sum = Mat4::identity();
    Mat4 term = a;
    for (int k = 1; k <= 30; ++k) {
        sum = sum + term;
        if (term.max_abs() <= term_tol * std::max(1.0, sum.max_abs())) break;
        term = (term * a) * (1.0 / (k + 1));
    }

    for (int i = 0; i < s; ++i) sum = sum * sum;
    return sum;
}

std::array<double, 4> sym_eigvals(const Mat4& v)
{
    if (!v.finite()) throw InvalidInput("sym_eigvals: non-finite matrix entry");
    double asym = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) asym = std::max(asym, std::abs(v(i, j) - v(j, i)));
    if (asym > 1e-10)
        throw InvalidInput("sym_eigvals: asymmetry " + std::to_string(asym) + " exceeds 1e-10");

    Mat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = 0.5 * (v(i, j) + v(j, i));

    double fro = 0.0;
    for (double x : a.e) fro += x * x;
    fro = std::sqrt(fro);
    const double off_target = 1e-13 * std::max(1.0, fro);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off += 2.0 * a(i, j) * a(i, j);
        if (std::sqrt(off) <= off_target) break;

        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }

    std::array<double, 4> ev{a(0, 0), a(1, 1), a(2, 2), a(3, 3)};
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {

// Characteristic polynomial x^4 + c[0]x^3 + c[1]x^2 + c[2]x + c[3]
// via the Faddeev-LeVerrier recursion.
std::array<double, 4> char_poly(const Mat4& m)
{
    std::array<double, 4> c{};
    Mat4 n = m;
    c[0] = -n.trace();
    for (int k = 2; k <= 4; ++k) {
        Mat4 shifted = n;
        for (int i = 0; i < 4; ++i) shifted(i, i) += c[k - 2];
        n = m * shifted;
        c[k - 1] = -n.trace() / k;
    }
    return c;
}

Complex poly_eval(const std::array<double, 4>& c, Complex x)
{
    return (((x + c[0]) * x + c[1]) * x + c[2]) * x + c[3];
}

Complex poly_deriv(const std::array<double, 4>& c, Complex x)
{
    return ((4.0 * x + 3.0 * c[0]) * x + 2.0 * c[1]) * x + c[2];
}

}  // namespace

ComplexQuad gen_eigvals(const Mat4& m)
{
    if (!m.finite()) throw InvalidInput("gen_eigvals: non-finite matrix entry");

    const auto c = char_poly(m);
    const double radius = 1.0 + m.norm_inf();
    const double norm4 = std::pow(m.norm_inf(), 4);
    const double residual_cap = 1e-12 * (1.0 + norm4);

    // Durand-Kerner from staggered points on a circle enclosing all roots.
    ComplexQuad r;
    for (int i = 0; i < 4; ++i) {
        const double ang = 2.0 * M_PI * i / 4.0 + 0.4;
        r[i] = radius * Complex(std::cos(ang), std::sin(ang));
    }
    for (int it = 0; it < 500; ++it) {
        double step = 0.0;
        for (int i = 0; i < 4; ++i) {
            Complex denom(1.0, 0.0);
            for (int j = 0; j < 4; ++j)
                if (j != i) denom *= r[i] - r[j];
            if (denom == Complex(0.0, 0.0)) {
                r[i] += Complex(1e-8 * radius, 1e-8 * radius);
                continue;
            }
            const Complex d = poly_eval(c, r[i]) / denom;
            r[i] -= d;
            step = std::max(step, std::abs(d));
        }
        if (step < 1e-15 * radius) break;
    }

    // Newton polish sharpens near-degenerate roots well past the DK cap.
    for (int i = 0; i < 4; ++i)
        for (int it = 0; it < 4; ++it) {
            const Complex dp = poly_deriv(c, r[i]);
            if (std::abs(dp) == 0.0) break;
            const Complex d = poly_eval(c, r[i]) / dp;
            if (!(std::abs(d) < 1.0)) break;
            r[i] -= d;
        }

    for (int i = 0; i < 4; ++i) {
        const double res = std::abs(poly_eval(c, r[i]));
        if (!(res < residual_cap))
            throw NumericalFailure("gen_eigvals: root residual " + std::to_string(res) +
                                   " exceeds cap " + std::to_string(residual_cap));
    }

    // Conjugate pairing: greedily match each root against the conjugate of
    // another; symmetrize matched pairs, snap near-real roots. The windows
    // sit above the ~sqrt(eps) noise floor of near-double roots but below
    // any imaginary part the physics can produce away from the threshold.
    const double snap_tol = 1e-6 * radius;
    const double pair_window = 1e-5 * radius;
    std::array<bool, 4> used{};
    ComplexQuad out{};
    int n_out = 0;
    for (int i = 0; i < 4; ++i) {
        if (used[i]) continue;
        used[i] = true;
        if (std::abs(r[i].imag()) <= snap_tol) {
            out[n_out++] = Complex(r[i].real(), 0.0);
            continue;
        }
        int best = -1;
        double best_d = pair_window;
        for (int j = 0; j < 4; ++j) {
            if (used[j]) continue;
            const double d = std::abs(r[j] - std::conj(r[i]));
            if (d <= best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best < 0)
            throw NumericalFailure("gen_eigvals: conjugate pairing defect exceeds tolerance");
        used[best] = true;
        const double re = 0.5 * (r[i].real() + r[best].real());
        const double im = 0.5 * (std::abs(r[i].imag()) + std::abs(r[best].imag()));
        out[n_out++] = Complex(re, im);
        out[n_out++] = Complex(re, -im);
    }

    std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

double det(const Mat2& m)
{
    if (!m.finite()) throw InvalidInput("det: non-finite matrix entry");
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

double det(const Mat4& m)
{
    if (!m.finite()) throw InvalidInput("det: non-finite matrix entry");
    Mat4 a = m;
    double d = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int k = 0; k < 4; ++k) std::swap(a(piv, k), a(col, k));
            d = -d;
        }
        d *= a(col, col);
        for (int r = col + 1; r < 4; ++r) {
            const double f = a(r, col) / a(col, col);
            for (int k = col; k < 4; ++k) a(r, k) -= f * a(col, k);
        }
    }
    return d;
}

}  // namespace pdc
