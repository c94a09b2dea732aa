#include "pdc/phase_optimizer.hpp"

#include <cmath>

#include "pdc/entanglement.hpp"
#include "pdc/gaussian_dynamics.hpp"

namespace pdc {

double en_of_phase(const Magnitudes& mags, double dphi, double z)
{
    const CouplerParams p =
        CouplerParams::make(mags.gl, mags.ga, mags.gb, 0.0, canonical_phase(dphi), 0.0);
    const Propagator s = propagator(build_drift(p), z);
    return log_negativity(evolve(vacuum_covariance(), s)).log_neg;
}

namespace {

struct Tracker {
    const Magnitudes& mags;
    double z;
    int evaluations = 0;
    double best_x = 0.0;
    double best_f = -1.0;

    double eval(double x)
    {
        const double f = en_of_phase(mags, x, z);
        ++evaluations;
        const double cx = canonical_phase(x);
        if (f > best_f || (f == best_f && cx < canonical_phase(best_x))) {
            best_f = f;
            best_x = cx;
        }
        return f;
    }
};

}  // namespace

PhaseOptimum optimize_phase(const Magnitudes& mags, double z, int coarse_n, double refine_tol)
{
    if (coarse_n < 16) throw InvalidInput("optimize_phase: coarse_n must be >= 16");
    if (!(refine_tol > 0.0) || refine_tol > 1e-3)
        throw InvalidInput("optimize_phase: refine_tol outside (0, 1e-3]");

    Tracker t{mags, z};
    const double step = 2.0 * M_PI / coarse_n;
    int best_k = 0;
    double best_fk = -1.0;
    for (int k = 0; k < coarse_n; ++k) {
        const double f = t.eval(k * step);
        if (f > best_fk) {  // strict: ties keep the smaller phase
            best_fk = f;
            best_k = k;
        }
    }

    // Golden-section on the bracketing interval around the best grid point.
    // On plateaus the kept interval is the lower one, biasing ties toward
    // the smaller phase.
    double lo = (best_k - 1) * step;
    double hi = (best_k + 1) * step;
    const double inv_gold = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_gold * (hi - lo);
    double x2 = lo + inv_gold * (hi - lo);
    double f1 = t.eval(x1);
    double f2 = t.eval(x2);
    while (hi - lo > refine_tol) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_gold * (hi - lo);
            f1 = t.eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_gold * (hi - lo);
            f2 = t.eval(x2);
        }
    }

    return {z, t.best_x, t.best_f, t.evaluations};
}

std::vector<PhaseOptimum> optimize_over_z(const Magnitudes& mags,
                                          const std::vector<double>& z_grid,
                                          int coarse_n, double refine_tol)
{
    if (z_grid.empty()) throw InvalidInput("optimize_over_z: empty z grid");
    for (std::size_t i = 1; i < z_grid.size(); ++i)
        if (!(z_grid[i] > z_grid[i - 1]))
            throw InvalidInput("optimize_over_z: z grid must be strictly ascending");

    std::vector<PhaseOptimum> out;
    out.reserve(z_grid.size());
    for (double z : z_grid) out.push_back(optimize_phase(mags, z, coarse_n, refine_tol));
    return out;
}

}  // namespace pdc
