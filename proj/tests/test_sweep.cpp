#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pdc/entanglement.hpp"
#include "pdc/gaussian_dynamics.hpp"
#include "pdc/sweep.hpp"
#include "support.hpp"

using namespace pdc;

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<double> column_of(const std::string& csv, std::size_t col)
{
    std::vector<double> out;
    const auto lines = split(csv, '\n');
    for (std::size_t i = 1; i < lines.size(); ++i)
        out.push_back(std::stod(split(lines[i], ',')[col]));
    return out;
}

}  // namespace

TEST_CASE("format_real pins 12 significant digits")
{
    CHECK(format_real(0.0) == "0.00000000000e+00");
    CHECK(format_real(1.0) == "1.00000000000e+00");
    CHECK(format_real(-1.5) == "-1.50000000000e+00");
    CHECK(format_real(0.5) == "5.00000000000e-01");
    CHECK(format_real(12345.6789) == "1.23456789000e+04");
    CHECK(format_real(M_PI) == "3.14159265359e+00");
}

TEST_CASE("linspace hits both endpoints uniformly")
{
    const auto g = linspace(0.0, 3.0, 301);
    REQUIRE(g.size() == 301);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 3.0);
    CHECK(g[50] == 0.5);
    CHECK(g[100] == 1.0);
    for (std::size_t i = 1; i < g.size(); ++i)
        CHECK(g[i] - g[i - 1] == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("linspace rejects degenerate grids")
{
    CHECK_THROWS_AS(linspace(0.0, 1.0, 1), InvalidInput);
    CHECK_THROWS_AS(linspace(0.0, 1.0, 0), InvalidInput);
    CHECK_THROWS_AS(linspace(0.0, 1.0, -3), InvalidInput);
}

TEST_CASE("sweep_params realizes dphi canonically")
{
    SweepSpec spec;
    spec.gl_mag = 1.0;
    spec.ga_mag = 0.5;
    spec.gb_mag = 0.25;
    spec.use_dphi = true;
    spec.dphi = 2.2;
    const CouplerParams p = sweep_params(spec);
    CHECK(p.phi_l == 0.0);
    CHECK(p.phi_a == 2.2);
    CHECK(p.phi_b == 0.0);
    CHECK(effective_phase(p) == doctest::Approx(2.2));
}

TEST_CASE("run_sweep validates its spec")
{
    SweepSpec spec;
    spec.z_min = 1.0;
    spec.z_max = 1.0;
    CHECK_THROWS_AS(run_sweep(spec), InvalidInput);
    spec.z_max = 2.0;
    spec.z_points = 1;
    CHECK_THROWS_AS(run_sweep(spec), InvalidInput);
    spec.z_points = 2;
    spec.quantities.clear();
    CHECK_THROWS_AS(run_sweep(spec), InvalidInput);
}

TEST_CASE("free propagation sweep is byte-exact")
{
    SweepSpec spec;
    spec.z_points = 3;
    const std::string expect =
        "z,lambda,en\n"
        "0.00000000000e+00,5.00000000000e-01,0.00000000000e+00\n"
        "1.50000000000e+00,5.00000000000e-01,0.00000000000e+00\n"
        "3.00000000000e+00,5.00000000000e-01,0.00000000000e+00\n";
    CHECK(run_sweep(spec) == expect);
}

TEST_CASE("columns appear in canonical order regardless of request order")
{
    SweepSpec spec;
    spec.gl_mag = 2.0;
    spec.ga_mag = spec.gb_mag = 0.2;
    spec.z_points = 2;
    spec.quantities = {Quantity::Regime, Quantity::En, Quantity::Lambda};
    const auto lines = split(run_sweep(spec), '\n');
    CHECK(lines[0] == "z,lambda,en,regime");
    CHECK(split(lines[1], ',')[3] == "below-threshold");
    CHECK(split(lines[2], ',')[3] == "below-threshold");
}

TEST_CASE("run_sweep is deterministic, including the optimizer column")
{
    SweepSpec spec;
    spec.gl_mag = 2.0;
    spec.ga_mag = spec.gb_mag = 0.2;
    spec.z_min = 0.1;
    spec.z_max = 0.7;
    spec.z_points = 4;
    spec.coarse_n = 64;
    spec.refine_tol = 1e-5;
    spec.quantities = {Quantity::Lambda, Quantity::En, Quantity::DphiOpt};
    const std::string a = run_sweep(spec);
    const std::string b = run_sweep(spec);
    CHECK(a == b);
    CHECK(split(a, '\n')[0] == "z,lambda,en,dphi_opt");
}

TEST_CASE("sweep values match the library pipeline")
{
    SweepSpec spec;
    spec.gl_mag = 2.0;
    spec.ga_mag = spec.gb_mag = 0.2;
    spec.use_dphi = true;
    spec.dphi = M_PI / 2.0;
    spec.z_min = 0.0;
    spec.z_max = 1.0;
    spec.z_points = 5;
    const auto lines = split(run_sweep(spec), '\n');
    const DriftMatrix d = build_drift(sweep_params(spec));
    const auto grid = linspace(0.0, 1.0, 5);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const CovarianceMatrix v = evolve(vacuum_covariance(), propagator(d, grid[i]));
        const std::string expect = format_real(grid[i]) + "," +
                                   format_real(squeeze_variance(v)) + "," +
                                   format_real(log_negativity(v).log_neg);
        CHECK(lines[i + 1] == expect);
    }
}

TEST_CASE("figure presets: names, headers, and anchor values")
{
    const auto fig2 = run_figure("fig2");
    REQUIRE(fig2.size() == 1);
    CHECK(fig2[0].name == "fig2.csv");
    const auto lines = split(fig2[0].csv, '\n');
    CHECK(lines[0] == "z,lambda_0,lambda_halfpi,lambda_pi");
    REQUIRE(lines.size() == 302);

    // z = 0 row: vacuum everywhere.
    CHECK(lines[1] ==
          "0.00000000000e+00,5.00000000000e-01,5.00000000000e-01,5.00000000000e-01");

    // z = 0.5 row, decoupled column: lambda = exp(-0.4)/2.
    const auto row = split(lines[51], ',');
    CHECK(row[0] == "5.00000000000e-01");
    CHECK(std::stod(row[3]) == doctest::Approx(0.5 * std::exp(-0.4)).epsilon(1e-11));

    CHECK(run_figure("fig3")[0].name == "fig3.csv");
    CHECK(split(run_figure("fig3")[0].csv, '\n')[0] == "z,lambda_0,lambda_halfpi,lambda_pi");

    CHECK_THROWS_AS(run_figure("fig7"), InvalidInput);
}

TEST_CASE("fig4: the decoupling column carries no entanglement")
{
    const auto fig4 = run_figure("fig4");
    CHECK(split(fig4[0].csv, '\n')[0] == "z,en_0,en_halfpi,en_pi");
    for (double en : column_of(fig4[0].csv, 3)) CHECK(en < 1e-9);
    // while the in-phase column does entangle
    const auto en0 = column_of(fig4[0].csv, 1);
    CHECK(*std::max_element(en0.begin(), en0.end()) > 0.1);
}

TEST_CASE("fig5: above-threshold E_N grows with z")
{
    const auto fig5 = run_figure("fig5", 0.0, 2.0, 21);
    CHECK(split(fig5[0].csv, '\n')[0] == "z,en_0,en_halfpi,en_pi");
    const auto en0 = column_of(fig5[0].csv, 1);
    REQUIRE(en0.size() == 21);
    for (std::size_t i = 0; i + 1 < en0.size(); ++i) CHECK(en0[i + 1] >= en0[i] - 1e-6);
    CHECK(en0.back() > en0.front());
}

TEST_CASE("fig6 emits the per-z phase optimum")
{
    const auto fig6 = run_figure("fig6", 0.1, 0.6, 6, 64, 1e-4);
    REQUIRE(fig6.size() == 1);
    CHECK(fig6[0].name == "fig6.csv");
    const auto lines = split(fig6[0].csv, '\n');
    CHECK(lines[0] == "z,dphi_opt,en_max");
    REQUIRE(lines.size() == 7);
    for (double en : column_of(fig6[0].csv, 2)) CHECK(en >= 0.0);
    for (double ph : column_of(fig6[0].csv, 1)) {
        CHECK(ph >= 0.0);
        CHECK(ph < 2.0 * M_PI);
    }
}

TEST_CASE("config round-trips to an identical sweep")
{
    SweepSpec spec;
    spec.gl_mag = 1.3;
    spec.ga_mag = 0.4;
    spec.gb_mag = 0.15;
    spec.phi_l = 0.3;
    spec.phi_a = 1.9;
    spec.phi_b = 5.1;
    spec.z_min = 0.2;
    spec.z_max = 1.4;
    spec.z_points = 7;
    spec.quantities = {Quantity::Lambda, Quantity::En, Quantity::Regime};
    spec.out_path = "out.csv";

    const SweepSpec back = parse_config(serialize_config(spec));
    CHECK(back.gl_mag == spec.gl_mag);
    CHECK(back.phi_b == spec.phi_b);
    CHECK(back.z_points == spec.z_points);
    CHECK(back.out_path == spec.out_path);
    CHECK(back.use_dphi == false);
    CHECK(run_sweep(back) == run_sweep(spec));

    SweepSpec dspec;
    dspec.gl_mag = 2.0;
    dspec.ga_mag = dspec.gb_mag = 0.2;
    dspec.use_dphi = true;
    dspec.dphi = 0.123456789012345;
    dspec.z_points = 4;
    const SweepSpec dback = parse_config(serialize_config(dspec));
    CHECK(dback.use_dphi);
    CHECK(dback.dphi == dspec.dphi);
    CHECK(run_sweep(dback) == run_sweep(dspec));
}

TEST_CASE("config parsing: comments, spacing, and errors")
{
    const SweepSpec spec = parse_config(
        "# device\n"
        "gl_mag = 2.0   # strong coupler\n"
        "\n"
        "  dphi=3.14\n"
        "quantities = en , lambda\n");
    CHECK(spec.gl_mag == 2.0);
    CHECK(spec.use_dphi);
    CHECK(spec.dphi == 3.14);
    REQUIRE(spec.quantities.size() == 2);

    CHECK_THROWS_AS(parse_config("gl_mag : 2.0\n"), InvalidInput);
    CHECK_THROWS_AS(parse_config("coupling = 2.0\n"), InvalidInput);
    CHECK_THROWS_AS(parse_config("gl_mag = two\n"), InvalidInput);
    CHECK_THROWS_AS(parse_config("gl_mag = 2.0x\n"), InvalidInput);
    CHECK_THROWS_AS(parse_config("quantities = lambda,entropy\n"), InvalidInput);

    try {
        parse_config("gl_mag = 1.0\nbogus_key = 2\n");
        CHECK(false);
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
    }
    try {
        parse_config("gl_mag = 1.0\nga_mag 0.2\n");
        CHECK(false);
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("plot script references its CSV")
{
    const std::string script = plot_script_for("fig2.csv");
    CHECK(script.rfind("#!/usr/bin/env python3", 0) == 0);
    CHECK(script.find("\"fig2.csv\"") != std::string::npos);
    CHECK(script.find("matplotlib") != std::string::npos);
    // deterministic
    CHECK(plot_script_for("fig2.csv") == script);
}
