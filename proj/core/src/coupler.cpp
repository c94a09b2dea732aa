#include "pdc/coupler.hpp"

#include <cmath>
#include <complex>

namespace pdc {

double canonical_phase(double phi)
{
    if (!std::isfinite(phi)) throw InvalidInput("canonical_phase: non-finite phase");
    const double two_pi = 2.0 * M_PI;
    double r = std::fmod(phi, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
}

CouplerParams CouplerParams::make(double gl, double ga, double gb,
                                  double pl, double pa, double pb)
{
    for (double m : {gl, ga, gb}) {
        if (!std::isfinite(m)) throw InvalidInput("CouplerParams: non-finite magnitude");
        if (m < 0.0) throw InvalidInput("CouplerParams: negative magnitude");
    }
    CouplerParams p;
    p.gl_mag = gl;
    p.ga_mag = ga;
    p.gb_mag = gb;
    p.phi_l = canonical_phase(pl);
    p.phi_a = canonical_phase(pa);
    p.phi_b = canonical_phase(pb);
    return p;
}

const char* regime_label(Regime r)
{
    switch (r) {
        case Regime::BelowThreshold: return "below-threshold";
        case Regime::AboveThreshold: return "above-threshold";
        case Regime::AtThreshold: return "at-threshold";
    }
    return "unknown";
}

Mat4 symplectic_form()
{
    Mat4 w;
    w(0, 1) = 1.0;
    w(1, 0) = -1.0;
    w(2, 3) = 1.0;
    w(3, 2) = -1.0;
    return w;
}

DriftMatrix build_drift(const CouplerParams& p)
{
    const double sa = 2.0 * p.ga_mag * std::sin(p.phi_a);
    const double ca = 2.0 * p.ga_mag * std::cos(p.phi_a);
    const double sb = 2.0 * p.gb_mag * std::sin(p.phi_b);
    const double cb = 2.0 * p.gb_mag * std::cos(p.phi_b);
    const double sl = 2.0 * p.gl_mag * std::sin(p.phi_l);
    const double cl = 2.0 * p.gl_mag * std::cos(p.phi_l);

    DriftMatrix d;
    d.params = p;
    Mat4& m = d.m;
    m(0, 0) = -sa; m(0, 1) = ca;  m(0, 2) = sl;  m(0, 3) = -cl;
    m(1, 0) = ca;  m(1, 1) = sa;  m(1, 2) = cl;  m(1, 3) = sl;
    m(2, 0) = -sl; m(2, 1) = -cl; m(2, 2) = -sb; m(2, 3) = cb;
    m(3, 0) = cl;  m(3, 1) = -sl; m(3, 2) = cb;  m(3, 3) = sb;
    return d;
}

double effective_phase(const CouplerParams& p)
{
    return canonical_phase(p.phi_a - p.phi_b + 2.0 * p.phi_l);
}

namespace {

double threshold_margin(const CouplerParams& p)
{
    const std::complex<double> ga = std::polar(p.ga_mag, p.phi_a);
    const std::complex<double> gb = std::polar(p.gb_mag, p.phi_b);
    return 2.0 * p.gl_mag - std::abs(ga + gb);
}

double threshold_band(const CouplerParams& p)
{
    return 1e-12 * (1.0 + 2.0 * p.gl_mag + p.ga_mag + p.gb_mag);
}

}  // namespace

RegimeReport classify_regime(const CouplerParams& p)
{
    const double margin = threshold_margin(p);
    const double band = threshold_band(p);
    Regime label = Regime::AtThreshold;
    if (margin > band)
        label = Regime::BelowThreshold;
    else if (margin < -band)
        label = Regime::AboveThreshold;
    return {label, margin};
}

RegimeReport classify_regime_spectral(const CouplerParams& p)
{
    const DriftMatrix d = build_drift(p);
    const ComplexQuad ev = gen_eigvals(d.m);
    const double tol = 1e-6 * (1.0 + d.m.norm_inf());

    bool all_zero = true;
    bool any_imag = false;
    for (const Complex& l : ev) {
        if (std::abs(l) > tol) all_zero = false;
        if (std::abs(l.imag()) > tol) any_imag = true;
    }

    Regime label;
    if (all_zero)
        label = Regime::AtThreshold;
    else if (any_imag)
        label = Regime::BelowThreshold;
    else
        label = Regime::AboveThreshold;
    return {label, threshold_margin(p)};
}

}  // namespace pdc
