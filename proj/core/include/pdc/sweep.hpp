#pragma once

#include <string>
#include <vector>

#include "pdc/coupler.hpp"

namespace pdc {

enum class Quantity { Lambda, En, Regime, DphiOpt };

// One z-sweep: device parameters (either a full phase triple or an
// effective phase difference realized canonically), a uniform z grid,
// and the quantities to evaluate.
struct SweepSpec {
    double gl_mag = 0.0;
    double ga_mag = 0.0;
    double gb_mag = 0.0;
    double phi_l = 0.0;
    double phi_a = 0.0;
    double phi_b = 0.0;
    bool use_dphi = false;
    double dphi = 0.0;
    double z_min = 0.0;
    double z_max = 3.0;
    int z_points = 301;
    std::vector<Quantity> quantities{Quantity::Lambda, Quantity::En};
    std::string out_path;
    int coarse_n = 256;      // used when DphiOpt is requested
    double refine_tol = 1e-6;
};

// 12 significant digits, scientific notation.
std::string format_real(double x);

std::vector<double> linspace(double lo, double hi, int n);

CouplerParams sweep_params(const SweepSpec& spec);

// CSV document: lowercase header, one row per grid point, '\n' line ends.
std::string run_sweep(const SweepSpec& spec);

struct FigureResult {
    std::string name;  // default output filename, e.g. "fig2.csv"
    std::string csv;
};

// fig2/fig3: lambda(z) at dphi in {0, pi/2, pi}; fig4/fig5: E_N(z) likewise;
// fig6: per-z optimal phase and maximal E_N. Grid defaults to the sweep
// defaults unless overridden.
std::vector<FigureResult> run_figure(const std::string& preset,
                                     double z_min = 0.0, double z_max = 3.0,
                                     int z_points = 301, int coarse_n = 256,
                                     double refine_tol = 1e-6);

// Plain-text `key = value` config with '#' comments.
SweepSpec parse_config(const std::string& text);
std::string serialize_config(const SweepSpec& spec);

// Companion plot script for a written CSV (convenience, not a contract).
std::string plot_script_for(const std::string& csv_path);

}  // namespace pdc
