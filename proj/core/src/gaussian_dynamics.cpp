#include "pdc/gaussian_dynamics.hpp"

#include <cmath>
#include <string>

#include "dd.hpp"

namespace pdc {

Propagator propagator(const DriftMatrix& m, double z)
{
    if (!std::isfinite(z) || z < 0.0) throw InvalidInput("propagator: z must be finite and >= 0");
    return {expm(m.m * z), z};
}

CovarianceMatrix vacuum_covariance()
{
    CovarianceMatrix v;
    v.v = Mat4::identity() * 0.5;
    return v;
}

namespace {

// Williamson invariants of a two-mode covariance matrix: nu^2 are the
// roots of x^2 - (detA + detB + 2 detC) x + detV. For pure states the
// discriminant cancels exactly, so it is accumulated in double-double;
// nu^2_min comes from the cancellation-free detV / nu^2_max branch. The
// acceptance slack scales with max|V|^4 because that is the conditioning
// of detV itself.
void check_physical(const Mat4& v)
{
    using detail::dd;

    const double scale = std::max(1.0, v.max_abs());
    double asym = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) asym = std::max(asym, std::abs(v(i, j) - v(j, i)));
    if (asym > 1e-10 * scale)
        throw InvalidInput("covariance asymmetry " + std::to_string(asym) + " exceeds tolerance");

    const dd da = detail::det2_dd(v(0, 0), v(0, 1), v(1, 0), v(1, 1));
    const dd db = detail::det2_dd(v(2, 2), v(2, 3), v(3, 2), v(3, 3));
    const dd dc = detail::det2_dd(v(0, 2), v(0, 3), v(1, 2), v(1, 3));
    const dd dv = detail::det4_dd(v);
    const dd delta = detail::dd_add(detail::dd_add(da, db), detail::dd_scale(dc, 2.0));
    dd disc = detail::dd_sub(detail::dd_mul(delta, delta), detail::dd_scale(dv, 4.0));

    const double tol = 1e-9 * (1.0 + scale * scale * scale * scale);
    if (detail::to_double(disc) < 0.0) {
        if (detail::to_double(disc) < -tol)
            throw InvalidInput("covariance matrix is unphysical (complex Williamson roots)");
        disc = {};
    }
    const dd nu2_max = detail::dd_scale(
        detail::dd_add(delta, {std::sqrt(detail::to_double(disc)), 0.0}), 0.5);
    if (!(detail::to_double(nu2_max) > 0.0))
        throw InvalidInput("covariance matrix is unphysical (nonpositive Williamson root)");
    const double nu2_min = detail::to_double(detail::dd_div(dv, nu2_max));
    if (nu2_min < 0.25 - tol)
        throw InvalidInput("covariance matrix is unphysical (symplectic eigenvalue below 1/2)");
}

}  // namespace

CovarianceMatrix evolve(const CovarianceMatrix& v0, const Propagator& s)
{
    if (!v0.v.finite()) throw InvalidInput("evolve: non-finite covariance entry");
    check_physical(v0.v);

    const Mat4 raw = s.s * v0.v * s.s.transposed();
    double asym = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) asym = std::max(asym, std::abs(raw(i, j) - raw(j, i)));
    const double guard = 1e-10 * std::max(1.0, raw.max_abs());
    if (asym > guard)
        throw NumericalFailure("evolve: propagated covariance asymmetry " + std::to_string(asym));

    CovarianceMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.v(i, j) = 0.5 * (raw(i, j) + raw(j, i));
    return out;
}

double squeeze_variance(const CovarianceMatrix& v)
{
    return sym_eigvals(v.v)[0];
}

}  // namespace pdc
