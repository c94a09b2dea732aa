#pragma once

#include "pdc/coupler.hpp"
#include "pdc/matkernel.hpp"

namespace pdc {

// S(z) = e^{Mz}, symplectic by construction of M.
struct Propagator {
    Mat4 s;
    double z = 0.0;
};

// Symmetric matrix of quadrature second moments; vacuum variance 1/2.
struct CovarianceMatrix {
    Mat4 v;
};

Propagator propagator(const DriftMatrix& m, double z);

CovarianceMatrix vacuum_covariance();

// V -> S V S^T, symmetrized (asymmetry guard 1e-10 relative). Throws
// InvalidInput if v0 is asymmetric or unphysical: minimum symplectic
// eigenvalue below 1/2, with slack 1e-9 (1 + max|V|^4) matching the
// conditioning of the Williamson invariants.
CovarianceMatrix evolve(const CovarianceMatrix& v0, const Propagator& s);

// Generalized squeeze variance: min eigenvalue of V. Nonclassical iff < 1/2.
double squeeze_variance(const CovarianceMatrix& v);

}  // namespace pdc
