#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pdc/entanglement.hpp"
#include "pdc/gaussian_dynamics.hpp"
#include "pdc/phase_optimizer.hpp"
#include "pdc/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pdc::InvalidInput("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw pdc::InvalidInput("cannot open output file: " + path);
    out << content;
    if (!out) throw pdc::InvalidInput("failed writing output file: " + path);
}

void deliver(const std::string& csv, const std::string& out_path, bool emit_plot)
{
    if (out_path.empty()) {
        std::cout << csv;
        return;
    }
    write_file(out_path, csv);
    if (emit_plot) write_file(out_path + ".plot.py", pdc::plot_script_for(out_path));
}

struct ParamFlags {
    double gl = 0.0, ga = 0.0, gb = 0.0;
    double phi_l = 0.0, phi_a = 0.0, phi_b = 0.0;
    double dphi = 0.0;
    CLI::Option* o_gl = nullptr;
    CLI::Option* o_ga = nullptr;
    CLI::Option* o_gb = nullptr;
    CLI::Option* o_phi_l = nullptr;
    CLI::Option* o_phi_a = nullptr;
    CLI::Option* o_phi_b = nullptr;
    CLI::Option* o_dphi = nullptr;
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf)
{
    pf.o_gl = cmd->add_option("--gl-mag", pf.gl, "linear coupling magnitude |g_L|");
    pf.o_ga = cmd->add_option("--ga-mag", pf.ga, "down-conversion magnitude |g_A|");
    pf.o_gb = cmd->add_option("--gb-mag", pf.gb, "down-conversion magnitude |g_B|");
    pf.o_phi_l = cmd->add_option("--phi-l", pf.phi_l, "coupling phase phi_L (rad)");
    pf.o_phi_a = cmd->add_option("--phi-a", pf.phi_a, "pump phase phi_A (rad)");
    pf.o_phi_b = cmd->add_option("--phi-b", pf.phi_b, "pump phase phi_B (rad)");
    pf.o_dphi = cmd->add_option(
        "--dphi", pf.dphi, "effective phase difference (realized as phi_A = dphi, others 0)");
    pf.o_dphi->excludes(pf.o_phi_l);
    pf.o_dphi->excludes(pf.o_phi_a);
    pf.o_dphi->excludes(pf.o_phi_b);
}

// Config file first, explicit flags override.
void apply_param_flags(const ParamFlags& pf, pdc::SweepSpec& spec)
{
    if (pf.o_gl->count()) spec.gl_mag = pf.gl;
    if (pf.o_ga->count()) spec.ga_mag = pf.ga;
    if (pf.o_gb->count()) spec.gb_mag = pf.gb;
    if (pf.o_phi_l->count() || pf.o_phi_a->count() || pf.o_phi_b->count()) spec.use_dphi = false;
    if (pf.o_phi_l->count()) spec.phi_l = pf.phi_l;
    if (pf.o_phi_a->count()) spec.phi_a = pf.phi_a;
    if (pf.o_phi_b->count()) spec.phi_b = pf.phi_b;
    if (pf.o_dphi->count()) {
        spec.use_dphi = true;
        spec.dphi = pf.dphi;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Gaussian-state simulator of parametric down-conversion in coupled waveguides"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate quantities over a z grid");
    ParamFlags sweep_pf;
    add_param_flags(sweep_cmd, sweep_pf);
    double z_min = 0.0, z_max = 3.0;
    int z_points = 301;
    std::string out_path, config_path;
    bool emit_plot = false;
    auto* o_zmin = sweep_cmd->add_option("--z-min", z_min, "grid start");
    auto* o_zmax = sweep_cmd->add_option("--z-max", z_max, "grid end");
    auto* o_zpts = sweep_cmd->add_option("--z-points", z_points, "grid size");
    auto* o_out_opt = sweep_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
    sweep_cmd->add_option("--config", config_path, "key = value config file");
    sweep_cmd->add_flag("--emit-plot", emit_plot, "write a companion plot script");

    // figure
    auto* fig_cmd = app.add_subcommand("figure", "run a named figure preset");
    std::string preset;
    fig_cmd->add_option("preset", preset, "one of fig2|fig3|fig4|fig5|fig6")->required();
    double f_zmin = 0.0, f_zmax = 3.0;
    int f_zpts = 301, f_coarse = 256;
    double f_refine = 1e-6;
    std::string f_out;
    bool f_plot = false;
    fig_cmd->add_option("--z-min", f_zmin, "grid start");
    fig_cmd->add_option("--z-max", f_zmax, "grid end");
    fig_cmd->add_option("--z-points", f_zpts, "grid size");
    fig_cmd->add_option("--coarse-n", f_coarse, "coarse phase grid size (fig6)");
    fig_cmd->add_option("--refine-tol", f_refine, "phase refinement tolerance (fig6)");
    fig_cmd->add_option("--out", f_out, "output CSV path (default <preset>.csv)");
    fig_cmd->add_flag("--emit-plot", f_plot, "write a companion plot script");

    // optimize-phase
    auto* opt_cmd = app.add_subcommand("optimize-phase",
                                       "per-z optimal effective phase and maximal E_N");
    ParamFlags opt_pf;
    add_param_flags(opt_cmd, opt_pf);
    double o_zmin_v = 0.0, o_zmax_v = 3.0;
    int o_zpts_v = 301, o_coarse = 256;
    double o_refine = 1e-6;
    std::string o_out, o_config;
    bool o_plot = false;
    auto* oo_zmin = opt_cmd->add_option("--z-min", o_zmin_v, "grid start");
    auto* oo_zmax = opt_cmd->add_option("--z-max", o_zmax_v, "grid end");
    auto* oo_zpts = opt_cmd->add_option("--z-points", o_zpts_v, "grid size");
    auto* oo_coarse = opt_cmd->add_option("--coarse-n", o_coarse, "coarse phase grid size");
    auto* oo_refine = opt_cmd->add_option("--refine-tol", o_refine, "refinement tolerance");
    opt_cmd->add_option("--out", o_out, "output CSV path (default stdout)");
    opt_cmd->add_option("--config", o_config, "key = value config file");
    opt_cmd->add_flag("--emit-plot", o_plot, "write a companion plot script");

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "report the operating regime");
    ParamFlags cls_pf;
    add_param_flags(cls_cmd, cls_pf);
    std::string c_config;
    cls_cmd->add_option("--config", c_config, "key = value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sweep_cmd) {
            pdc::SweepSpec spec;
            if (!config_path.empty()) spec = pdc::parse_config(read_file(config_path));
            apply_param_flags(sweep_pf, spec);
            if (o_zmin->count()) spec.z_min = z_min;
            if (o_zmax->count()) spec.z_max = z_max;
            if (o_zpts->count()) spec.z_points = z_points;
            if (o_out_opt->count()) spec.out_path = out_path;
            deliver(pdc::run_sweep(spec), spec.out_path, emit_plot);
        } else if (*fig_cmd) {
            for (const pdc::FigureResult& fr :
                 pdc::run_figure(preset, f_zmin, f_zmax, f_zpts, f_coarse, f_refine)) {
                const std::string path = f_out.empty() ? fr.name : f_out;
                write_file(path, fr.csv);
                if (f_plot) write_file(path + ".plot.py", pdc::plot_script_for(path));
            }
        } else if (*opt_cmd) {
            pdc::SweepSpec spec;
            if (!o_config.empty()) spec = pdc::parse_config(read_file(o_config));
            apply_param_flags(opt_pf, spec);
            if (oo_zmin->count()) spec.z_min = o_zmin_v;
            if (oo_zmax->count()) spec.z_max = o_zmax_v;
            if (oo_zpts->count()) spec.z_points = o_zpts_v;
            if (oo_coarse->count()) spec.coarse_n = o_coarse;
            if (oo_refine->count()) spec.refine_tol = o_refine;
            if (!o_out.empty()) spec.out_path = o_out;
            spec.quantities = {pdc::Quantity::DphiOpt};

            const pdc::CouplerParams params = pdc::sweep_params(spec);
            std::ostringstream csv;
            csv << "z,dphi_opt,en_max\n";
            for (const pdc::PhaseOptimum& o : pdc::optimize_over_z(
                     {params.gl_mag, params.ga_mag, params.gb_mag},
                     pdc::linspace(spec.z_min, spec.z_max, spec.z_points), spec.coarse_n,
                     spec.refine_tol))
                csv << pdc::format_real(o.z) << ',' << pdc::format_real(o.dphi_opt) << ','
                    << pdc::format_real(o.en_max) << '\n';
            deliver(csv.str(), spec.out_path, o_plot);
        } else if (*cls_cmd) {
            pdc::SweepSpec spec;
            if (!c_config.empty()) spec = pdc::parse_config(read_file(c_config));
            apply_param_flags(cls_pf, spec);
            const pdc::CouplerParams params = pdc::sweep_params(spec);
            const pdc::RegimeReport report = pdc::classify_regime(params);
            const pdc::ComplexQuad ev = pdc::gen_eigvals(pdc::build_drift(params).m);
            std::cout << "regime: " << pdc::regime_label(report.label) << '\n'
                      << "margin: " << pdc::format_real(report.margin) << '\n';
            std::cout << "eigenvalues:";
            for (const pdc::Complex& l : ev)
                std::cout << ' ' << pdc::format_real(l.real()) << (l.imag() < 0.0 ? "-" : "+")
                          << pdc::format_real(std::abs(l.imag())) << 'i';
            std::cout << '\n';
        }
    } catch (const pdc::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pdc::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}
