#pragma once

#include <utility>

#include "pdc/gaussian_dynamics.hpp"
#include "pdc/matkernel.hpp"

namespace pdc {

// V = [[A, C], [C^T, B]] with A, B the local blocks.
struct BlockDecomposition {
    Mat2 a;
    Mat2 b;
    Mat2 c;
};

struct EntanglementReport {
    double c1 = 0.0;         // smaller PT symplectic eigenvalue
    double c2 = 0.0;         // larger PT symplectic eigenvalue
    double negativity = 0.0;
    double log_neg = 0.0;    // bits; entangled iff > 0
};

BlockDecomposition block_decompose(const CovarianceMatrix& v);

// Positive roots (ascending) of z^4 - (detA + detB - 2 detC) z^2 + detV = 0,
// the biquadratic for the partially transposed state. The z^2 coefficient
// carries a minus sign: the plus variant has no positive roots for the
// vacuum, so it cannot be the intended equation.
std::pair<double, double> pt_symplectic_spectrum(const CovarianceMatrix& v);

// Same spectrum via the transformation route: Vt = Lambda V Lambda with
// Lambda = diag(1,1,1,-1), eigenvalues of Omega*Vt come as +/- i c_j.
std::pair<double, double> pt_spectrum_oracle(const CovarianceMatrix& v);

// E_N = F(c1) + F(c2), F(c) = -log2(2c) for 2c < 1, else 0;
// negativity = (2^{E_N} - 1) / 2.
EntanglementReport log_negativity(const CovarianceMatrix& v);

}  // namespace pdc
