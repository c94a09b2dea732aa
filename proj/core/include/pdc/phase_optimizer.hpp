#pragma once

#include <vector>

#include "pdc/coupler.hpp"

namespace pdc {

struct Magnitudes {
    double gl = 0.0;
    double ga = 0.0;
    double gb = 0.0;
};

struct PhaseOptimum {
    double z = 0.0;
    double dphi_opt = 0.0;  // in [0, 2pi)
    double en_max = 0.0;    // bits
    int evaluations = 0;
};

// Log-negativity at length z with the effective phase realized canonically
// as phi_A = dphi, phi_B = phi_L = 0.
double en_of_phase(const Magnitudes& mags, double dphi, double z);

// Coarse grid over [0, 2pi) followed by golden-section refinement of the
// bracketing interval; deterministic, ties resolve to the smallest phase.
PhaseOptimum optimize_phase(const Magnitudes& mags, double z,
                            int coarse_n = 256, double refine_tol = 1e-6);

std::vector<PhaseOptimum> optimize_over_z(const Magnitudes& mags,
                                          const std::vector<double>& z_grid,
                                          int coarse_n = 256, double refine_tol = 1e-6);

}  // namespace pdc
