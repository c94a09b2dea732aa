#include "pdc/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pdc/entanglement.hpp"
#include "pdc/gaussian_dynamics.hpp"
#include "pdc/phase_optimizer.hpp"

namespace pdc {

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int n)
{
    if (n < 2) throw InvalidInput("linspace: require n >= 2");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return g;
}

CouplerParams sweep_params(const SweepSpec& spec)
{
    if (spec.use_dphi)
        return CouplerParams::make(spec.gl_mag, spec.ga_mag, spec.gb_mag, 0.0, spec.dphi, 0.0);
    return CouplerParams::make(spec.gl_mag, spec.ga_mag, spec.gb_mag, spec.phi_l, spec.phi_a,
                               spec.phi_b);
}

namespace {

void validate(const SweepSpec& spec)
{
    if (!(spec.z_min < spec.z_max)) throw InvalidInput("sweep: require z_min < z_max");
    if (spec.z_points < 2) throw InvalidInput("sweep: require z_points >= 2");
    if (spec.quantities.empty()) throw InvalidInput("sweep: no quantities requested");
}

// Canonical column order regardless of request order.
std::vector<Quantity> canonical_quantities(const SweepSpec& spec)
{
    std::vector<Quantity> q;
    for (Quantity want : {Quantity::Lambda, Quantity::En, Quantity::Regime, Quantity::DphiOpt})
        if (std::find(spec.quantities.begin(), spec.quantities.end(), want) !=
            spec.quantities.end())
            q.push_back(want);
    return q;
}

const char* quantity_name(Quantity q)
{
    switch (q) {
        case Quantity::Lambda: return "lambda";
        case Quantity::En: return "en";
        case Quantity::Regime: return "regime";
        case Quantity::DphiOpt: return "dphi_opt";
    }
    return "?";
}

}  // namespace

std::string run_sweep(const SweepSpec& spec)
{
    validate(spec);
    const CouplerParams params = sweep_params(spec);
    const DriftMatrix drift = build_drift(params);
    const std::vector<Quantity> cols = canonical_quantities(spec);
    const std::vector<double> grid = linspace(spec.z_min, spec.z_max, spec.z_points);
    const RegimeReport regime = classify_regime(params);
    const Magnitudes mags{params.gl_mag, params.ga_mag, params.gb_mag};

    std::ostringstream out;
    out << "z";
    for (Quantity q : cols) out << ',' << quantity_name(q);
    out << '\n';

    for (double z : grid) {
        CovarianceMatrix v;
        bool have_v = false;
        out << format_real(z);
        for (Quantity q : cols) {
            out << ',';
            switch (q) {
                case Quantity::Lambda:
                case Quantity::En:
                    if (!have_v) {
                        v = evolve(vacuum_covariance(), propagator(drift, z));
                        have_v = true;
                    }
                    out << format_real(q == Quantity::Lambda ? squeeze_variance(v)
                                                             : log_negativity(v).log_neg);
                    break;
                case Quantity::Regime:
                    out << regime_label(regime.label);
                    break;
                case Quantity::DphiOpt:
                    out << format_real(
                        optimize_phase(mags, z, spec.coarse_n, spec.refine_tol).dphi_opt);
                    break;
            }
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::string figure_curves(const Magnitudes& mags, bool want_lambda, double z_min, double z_max,
                          int z_points)
{
    const std::array<double, 3> dphis{0.0, M_PI / 2.0, M_PI};
    std::array<DriftMatrix, 3> drifts;
    for (int i = 0; i < 3; ++i)
        drifts[static_cast<std::size_t>(i)] = build_drift(CouplerParams::make(
            mags.gl, mags.ga, mags.gb, 0.0, dphis[static_cast<std::size_t>(i)], 0.0));

    std::ostringstream out;
    const char* base = want_lambda ? "lambda" : "en";
    out << 'z';
    for (const char* suffix : {"_0", "_halfpi", "_pi"}) out << ',' << base << suffix;
    out << '\n';

    for (double z : linspace(z_min, z_max, z_points)) {
        out << format_real(z);
        for (const DriftMatrix& d : drifts) {
            const CovarianceMatrix v = evolve(vacuum_covariance(), propagator(d, z));
            out << ','
                << format_real(want_lambda ? squeeze_variance(v) : log_negativity(v).log_neg);
        }
        out << '\n';
    }
    return out.str();
}

std::string figure_optimum(const Magnitudes& mags, double z_min, double z_max, int z_points,
                           int coarse_n, double refine_tol)
{
    std::ostringstream out;
    out << "z,dphi_opt,en_max\n";
    for (const PhaseOptimum& o :
         optimize_over_z(mags, linspace(z_min, z_max, z_points), coarse_n, refine_tol))
        out << format_real(o.z) << ',' << format_real(o.dphi_opt) << ','
            << format_real(o.en_max) << '\n';
    return out.str();
}

}  // namespace

std::vector<FigureResult> run_figure(const std::string& preset, double z_min, double z_max,
                                     int z_points, int coarse_n, double refine_tol)
{
    const Magnitudes below{2.0, 0.2, 0.2};
    const Magnitudes above{0.15, 0.2, 0.2};

    if (preset == "fig2")
        return {{"fig2.csv", figure_curves(below, true, z_min, z_max, z_points)}};
    if (preset == "fig3")
        return {{"fig3.csv", figure_curves(above, true, z_min, z_max, z_points)}};
    if (preset == "fig4")
        return {{"fig4.csv", figure_curves(below, false, z_min, z_max, z_points)}};
    if (preset == "fig5")
        return {{"fig5.csv", figure_curves(above, false, z_min, z_max, z_points)}};
    if (preset == "fig6")
        return {{"fig6.csv",
                 figure_optimum(below, z_min, z_max, z_points, coarse_n, refine_tol)}};
    throw InvalidInput("unknown figure preset: " + preset);
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value)
{
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw InvalidInput("config: bad numeric value for " + key + ": '" + value + "'");
    }
    if (pos != value.size())
        throw InvalidInput("config: trailing characters in value for " + key);
    return x;
}

}  // namespace

SweepSpec parse_config(const std::string& text)
{
    SweepSpec spec;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "gl_mag") spec.gl_mag = parse_double(key, value);
        else if (key == "ga_mag") spec.ga_mag = parse_double(key, value);
        else if (key == "gb_mag") spec.gb_mag = parse_double(key, value);
        else if (key == "phi_l") spec.phi_l = parse_double(key, value);
        else if (key == "phi_a") spec.phi_a = parse_double(key, value);
        else if (key == "phi_b") spec.phi_b = parse_double(key, value);
        else if (key == "dphi") {
            spec.dphi = parse_double(key, value);
            spec.use_dphi = true;
        } else if (key == "z_min") spec.z_min = parse_double(key, value);
        else if (key == "z_max") spec.z_max = parse_double(key, value);
        else if (key == "z_points") spec.z_points = static_cast<int>(parse_double(key, value));
        else if (key == "coarse_n") spec.coarse_n = static_cast<int>(parse_double(key, value));
        else if (key == "refine_tol") spec.refine_tol = parse_double(key, value);
        else if (key == "out") spec.out_path = value;
        else if (key == "quantities") {
            spec.quantities.clear();
            std::istringstream qs(value);
            std::string item;
            while (std::getline(qs, item, ',')) {
                item = trim(item);
                if (item == "lambda") spec.quantities.push_back(Quantity::Lambda);
                else if (item == "en") spec.quantities.push_back(Quantity::En);
                else if (item == "regime") spec.quantities.push_back(Quantity::Regime);
                else if (item == "dphi_opt") spec.quantities.push_back(Quantity::DphiOpt);
                else throw InvalidInput("config: unknown quantity '" + item + "'");
            }
        } else {
            throw InvalidInput("config: unknown key '" + key + "'");
        }
    }
    return spec;
}

std::string serialize_config(const SweepSpec& spec)
{
    char buf[64];
    std::ostringstream out;
    auto emit = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << key << " = " << buf << '\n';
    };
    emit("gl_mag", spec.gl_mag);
    emit("ga_mag", spec.ga_mag);
    emit("gb_mag", spec.gb_mag);
    if (spec.use_dphi) {
        emit("dphi", spec.dphi);
    } else {
        emit("phi_l", spec.phi_l);
        emit("phi_a", spec.phi_a);
        emit("phi_b", spec.phi_b);
    }
    emit("z_min", spec.z_min);
    emit("z_max", spec.z_max);
    out << "z_points = " << spec.z_points << '\n';
    out << "quantities = ";
    bool first = true;
    for (Quantity q : spec.quantities) {
        if (!first) out << ',';
        out << quantity_name(q);
        first = false;
    }
    out << '\n';
    if (!spec.out_path.empty()) out << "out = " << spec.out_path << '\n';
    out << "coarse_n = " << spec.coarse_n << '\n';
    emit("refine_tol", spec.refine_tol);
    return out.str();
}

std::string plot_script_for(const std::string& csv_path)
{
    std::ostringstream out;
    out << "#!/usr/bin/env python3\n"
           "# Plots every column of the companion CSV against z.\n"
           "import csv\n"
           "import matplotlib.pyplot as plt\n"
           "\n"
           "path = "
        << '"' << csv_path << '"'
        << "\n"
           "with open(path) as fh:\n"
           "    rows = list(csv.reader(fh))\n"
           "header, data = rows[0], rows[1:]\n"
           "z = [float(r[0]) for r in data]\n"
           "for i, name in enumerate(header[1:], start=1):\n"
           "    try:\n"
           "        y = [float(r[i]) for r in data]\n"
           "    except ValueError:\n"
           "        continue  # non-numeric column\n"
           "    plt.plot(z, y, label=name)\n"
           "plt.xlabel(\"z\")\n"
           "plt.legend()\n"
           "plt.tight_layout()\n"
           "plt.savefig(path + \".png\", dpi=160)\n";
    return out.str();
}

}  // namespace pdc
