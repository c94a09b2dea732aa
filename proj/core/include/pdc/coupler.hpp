#pragma once

#include "pdc/matkernel.hpp"

namespace pdc {

// Device parameters: coupling magnitudes (inverse length) and phases.
// Phases are canonicalized to [0, 2pi).
struct CouplerParams {
    double gl_mag = 0.0;
    double ga_mag = 0.0;
    double gb_mag = 0.0;
    double phi_l = 0.0;
    double phi_a = 0.0;
    double phi_b = 0.0;

    static CouplerParams make(double gl, double ga, double gb,
                              double pl, double pa, double pb);
};

// Reduce a phase to [0, 2pi); idempotent.
double canonical_phase(double phi);

struct DriftMatrix {
    Mat4 m;
    CouplerParams params;
};

enum class Regime { BelowThreshold, AboveThreshold, AtThreshold };

struct RegimeReport {
    Regime label;
    double margin;  // 2|g_L| - |g_A e^{i phi_A} + g_B e^{i phi_B}|
};

const char* regime_label(Regime r);

// Quadrature ordering xi = (x_A, p_A, x_B, p_B); Omega = J (+) J.
Mat4 symplectic_form();

DriftMatrix build_drift(const CouplerParams& p);

// Effective phase difference dphi = phi_A - phi_B + 2 phi_L, mod 2pi.
double effective_phase(const CouplerParams& p);

// Threshold classification from the margin sign, with a relative
// tolerance band |margin| <= 1e-12 (1 + 2|g_L| + |g_A| + |g_B|).
RegimeReport classify_regime(const CouplerParams& p);

// Independent cross-check: classify from the eigenvalues of the drift
// matrix (some imaginary part -> below threshold, all real -> above,
// fully degenerate at zero -> at threshold).
RegimeReport classify_regime_spectral(const CouplerParams& p);

}  // namespace pdc
