#include "pdc/entanglement.hpp"

#include <cmath>
#include <string>

#include "dd.hpp"

namespace pdc {

using detail::dd;

BlockDecomposition block_decompose(const CovarianceMatrix& v)
{
    if (!v.v.finite()) throw InvalidInput("block_decompose: non-finite covariance entry");
    BlockDecomposition d;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            d.a(i, j) = v.v(i, j);
            d.b(i, j) = v.v(i + 2, j + 2);
            d.c(i, j) = v.v(i, j + 2);
        }
    return d;
}

namespace {

void require_covariance_shape(const Mat4& m)
{
    if (!m.finite()) throw InvalidInput("pt spectrum: non-finite covariance entry");
    double asym = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
    if (asym > 1e-10 * std::max(1.0, m.max_abs()))
        throw InvalidInput("pt spectrum: covariance not symmetric");
}

struct PtInvariants {
    dd delta;  // detA + detB - 2 detC
    dd det_v;
    dd disc;   // delta^2 - 4 detV, clamped at tiny negatives
};

PtInvariants pt_invariants(const CovarianceMatrix& v)
{
    const Mat4& m = v.v;
    require_covariance_shape(m);

    const dd da = detail::det2_dd(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
    const dd db = detail::det2_dd(m(2, 2), m(2, 3), m(3, 2), m(3, 3));
    const dd dc = detail::det2_dd(m(0, 2), m(0, 3), m(1, 2), m(1, 3));
    const dd dv = detail::det4_dd(m);

    dd delta = detail::dd_sub(detail::dd_add(da, db), detail::dd_scale(dc, 2.0));
    dd disc = detail::dd_sub(detail::dd_mul(delta, delta), detail::dd_scale(dv, 4.0));

    if (detail::to_double(disc) < -1e-12)
        throw NumericalFailure("pt_symplectic_spectrum: discriminant " +
                               std::to_string(detail::to_double(disc)) +
                               " below -1e-12 (unphysical covariance)");
    if (detail::to_double(disc) < 0.0) disc = {};
    return {delta, dv, disc};
}

}  // namespace

std::pair<double, double> pt_symplectic_spectrum(const CovarianceMatrix& v)
{
    const PtInvariants inv = pt_invariants(v);

    // z2_max by the additive (cancellation-free) branch; z2_min via detV
    // to dodge the subtraction entirely.
    const double root = std::sqrt(std::max(0.0, detail::to_double(inv.disc)));
    const dd z2_max = detail::dd_scale(detail::dd_add(inv.delta, {root, 0.0}), 0.5);
    if (detail::to_double(z2_max) <= 0.0)
        throw NumericalFailure("pt_symplectic_spectrum: nonpositive z^2 root");
    const dd z2_min = detail::dd_div(inv.det_v, z2_max);

    const double z2m = detail::to_double(z2_min);
    if (z2m < -1e-12)
        throw NumericalFailure("pt_symplectic_spectrum: negative z^2 root " +
                               std::to_string(z2m));
    if (z2m <= 0.0)
        throw NumericalFailure("pt_symplectic_spectrum: degenerate zero root (unphysical)");

    return {std::sqrt(z2m), std::sqrt(detail::to_double(z2_max))};
}

std::pair<double, double> pt_spectrum_oracle(const CovarianceMatrix& v)
{
    require_covariance_shape(v.v);

    // Momentum flip on mode B, then the spectrum of Omega * Vt.
    Mat4 vt = v.v;
    for (int i = 0; i < 4; ++i) {
        vt(3, i) = -vt(3, i);
        vt(i, 3) = -vt(i, 3);
    }
    const Mat4 w = symplectic_form() * vt;
    const ComplexQuad ev = gen_eigvals(w);

    const double re_tol = 1e-8 * (1.0 + w.norm_inf());
    double c[2];
    int n = 0;
    for (const Complex& l : ev) {
        if (std::abs(l.real()) > re_tol)
            throw NumericalFailure("pt_spectrum_oracle: eigenvalue with |Re| = " +
                                   std::to_string(std::abs(l.real())) + " (unphysical input)");
        if (l.imag() > 0.0 && n < 2) c[n++] = l.imag();
    }
    if (n != 2)
        throw NumericalFailure("pt_spectrum_oracle: expected two +i c eigenvalues");
    if (c[0] > c[1]) std::swap(c[0], c[1]);
    return {c[0], c[1]};
}

namespace {

double f_of_c(double c)
{
    return (2.0 * c >= 1.0) ? 0.0 : -std::log2(2.0 * c);
}

}  // namespace

EntanglementReport log_negativity(const CovarianceMatrix& v)
{
    const auto [c1, c2] = pt_symplectic_spectrum(v);
    EntanglementReport r;
    r.c1 = c1;
    r.c2 = c2;
    r.log_neg = f_of_c(c1) + f_of_c(c2);
    r.negativity = 0.5 * (std::exp2(r.log_neg) - 1.0);
    return r;
}

}  // namespace pdc
