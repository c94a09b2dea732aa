#pragma once

#include <cmath>

#include "pdc/matkernel.hpp"

// Compensated double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where a determinant difference cancels to ~eps^2 of its operands:
// the partial-transpose discriminant sits exactly at a double root on
// decoupled states, and plain doubles would leave ~1e-8 noise in E_N.
namespace pdc::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b)
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b)
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(const dd& a, const dd& b)
{
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_sub(const dd& a, const dd& b) { return dd_add(a, {-b.hi, -b.lo}); }

inline dd dd_mul(const dd& a, const dd& b)
{
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_scale(const dd& a, double s)
{
    dd p = two_prod(a.hi, s);
    p.lo += a.lo * s;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(const dd& a, const dd& b)
{
    const double q0 = a.hi / b.hi;
    dd r = dd_sub(a, dd_scale(b, q0));
    const double q1 = r.hi / b.hi;
    r = dd_sub(r, dd_scale(b, q1));
    const double q2 = r.hi / b.hi;
    dd q = quick_two_sum(q0, q1);
    q.lo += q2;
    return quick_two_sum(q.hi, q.lo);
}

inline double to_double(const dd& a) { return a.hi + a.lo; }

// 2x2 determinant a*d - b*c, fully compensated.
inline dd det2_dd(double a, double b, double c, double d)
{
    return dd_sub(two_prod(a, d), two_prod(b, c));
}

// det of a 4x4 by Laplace expansion along the first two rows, compensated:
// the six 2x2 minor pairs are each exact products accumulated in dd.
inline dd det4_dd(const Mat4& m)
{
    static constexpr int idx[6][3] = {
        // columns (i, j) of the top minor; sign of the term
        {0, 1, +1}, {0, 2, -1}, {0, 3, +1}, {1, 2, +1}, {1, 3, -1}, {2, 3, +1},
    };
    dd s{};
    for (const auto& t : idx) {
        const int i = t[0], j = t[1];
        int k = -1, l = -1;
        for (int c = 0; c < 4; ++c)
            if (c != i && c != j) (k < 0 ? k : l) = c;
        const dd top = det2_dd(m(0, i), m(0, j), m(1, i), m(1, j));
        const dd bot = det2_dd(m(2, k), m(2, l), m(3, k), m(3, l));
        dd term = dd_mul(top, bot);
        if (t[2] < 0) term = {-term.hi, -term.lo};
        s = dd_add(s, term);
    }
    return s;
}

}  // namespace pdc::detail
