#include <benchmark/benchmark.h>

#include "pdc/coupler.hpp"
#include "pdc/entanglement.hpp"
#include "pdc/gaussian_dynamics.hpp"
#include "pdc/matkernel.hpp"
#include "pdc/phase_optimizer.hpp"
#include "pdc/sweep.hpp"

namespace {

const pdc::CouplerParams kParams = pdc::CouplerParams::make(2.0, 0.2, 0.2, 0.0, 0.7, 0.0);
const pdc::DriftMatrix kDrift = pdc::build_drift(kParams);

void bm_expm(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(pdc::expm(kDrift.m * 1.3));
}
BENCHMARK(bm_expm);

void bm_evolve(benchmark::State& state)
{
    const pdc::Propagator pr = pdc::propagator(kDrift, 1.3);
    for (auto _ : state) benchmark::DoNotOptimize(pdc::evolve(pdc::vacuum_covariance(), pr));
}
BENCHMARK(bm_evolve);

void bm_sym_eigvals(benchmark::State& state)
{
    const pdc::CovarianceMatrix v =
        pdc::evolve(pdc::vacuum_covariance(), pdc::propagator(kDrift, 1.3));
    for (auto _ : state) benchmark::DoNotOptimize(pdc::sym_eigvals(v.v));
}
BENCHMARK(bm_sym_eigvals);

void bm_gen_eigvals(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(pdc::gen_eigvals(kDrift.m));
}
BENCHMARK(bm_gen_eigvals);

void bm_log_negativity(benchmark::State& state)
{
    const pdc::CovarianceMatrix v =
        pdc::evolve(pdc::vacuum_covariance(), pdc::propagator(kDrift, 1.3));
    for (auto _ : state) benchmark::DoNotOptimize(pdc::log_negativity(v));
}
BENCHMARK(bm_log_negativity);

void bm_optimize_phase(benchmark::State& state)
{
    const pdc::Magnitudes mags{2.0, 0.2, 0.2};
    for (auto _ : state) benchmark::DoNotOptimize(pdc::optimize_phase(mags, 1.0, 64, 1e-4));
}
BENCHMARK(bm_optimize_phase);

void bm_run_sweep(benchmark::State& state)
{
    pdc::SweepSpec spec;
    spec.gl_mag = 2.0;
    spec.ga_mag = spec.gb_mag = 0.2;
    spec.use_dphi = true;
    spec.z_points = 101;
    for (auto _ : state) benchmark::DoNotOptimize(pdc::run_sweep(spec));
}
BENCHMARK(bm_run_sweep);

}  // namespace

BENCHMARK_MAIN();
