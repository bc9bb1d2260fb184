// Serial reference kernels against their OpenMP counterparts, plus the
// full nonlinear term for scale. Shape argument: n_theta = n_r = N.

#include "vvdisk/kernels.hpp"
#include "vvdisk/solver.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace {

using namespace vvdisk::kernels;

struct Data {
    Shape s;
    std::vector<double> cos_tab, sin_tab, prof, prof2, weights, field, out;
    std::vector<cplx> g, spectrum;

    explicit Data(int n) {
        s = {n, n, 4 * n + 16, 3 * n + 2};
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int m = 0; m <= s.n_theta; ++m) {
            for (int p = 0; p < s.na; ++p) {
                const double t = 2.0 * std::numbers::pi * ((m * p) % s.na) / s.na;
                cos_tab.push_back(std::cos(t));
                sin_tab.push_back(std::sin(t));
            }
        }
        const std::size_t modes = static_cast<std::size_t>(s.n_theta + 1) * s.n_r;
        for (std::size_t i = 0; i < modes * s.nq; ++i) {
            prof.push_back(u(rng));
            prof2.push_back(u(rng));
        }
        for (int q = 0; q < s.nq; ++q) weights.push_back(0.5 + 0.5 * u(rng));
        field.resize(static_cast<std::size_t>(s.nq) * s.na);
        for (double& f : field) f = u(rng);
        for (std::size_t i = 0; i < modes; ++i) g.emplace_back(u(rng), i < static_cast<std::size_t>(s.n_r) ? 0.0 : u(rng));
        spectrum.resize(static_cast<std::size_t>(s.n_theta + 1) * s.nq);
        out.resize(static_cast<std::size_t>(s.n_theta + 1) * s.n_r * s.n_r);
    }
    TrigTable trig() const { return {cos_tab.data(), sin_tab.data()}; }
};

template <auto Fn>
void BM_synthesize(benchmark::State& state) {
    Data d(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Fn(d.s, d.trig(), d.g.data(), d.prof.data(), false, d.field.data());
        benchmark::DoNotOptimize(d.field.data());
    }
}

template <auto Fn>
void BM_analyze(benchmark::State& state) {
    Data d(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Fn(d.s, d.trig(), d.field.data(), d.spectrum.data());
        benchmark::DoNotOptimize(d.spectrum.data());
    }
}

template <auto Fn>
void BM_gram(benchmark::State& state) {
    Data d(static_cast<int>(state.range(0)));
    const double* profs[2] = {d.prof.data(), d.prof2.data()};
    for (auto _ : state) {
        Fn(d.s, d.weights.data(), profs, 2, d.out.data());
        benchmark::DoNotOptimize(d.out.data());
    }
}

void BM_nonlinear(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    static const vvdisk::Eigenbasis basis(33, 33);
    const vvdisk::GalerkinModel model(basis, n, n);
    const vvdisk::SpectralCoeffs c = vvdisk::make_preset("generic", n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(model.nonlinear_coeffs(c));
}

} // namespace

BENCHMARK(BM_synthesize<serial::synthesize>)->Name("synthesize/serial")->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_synthesize<omp::synthesize>)->Name("synthesize/omp")->Arg(8)->Arg(16)->Arg(32)->UseRealTime();
BENCHMARK(BM_analyze<serial::analyze>)->Name("analyze/serial")->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_analyze<omp::analyze>)->Name("analyze/omp")->Arg(8)->Arg(16)->Arg(32)->UseRealTime();
BENCHMARK(BM_gram<serial::gram>)->Name("gram/serial")->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_gram<omp::gram>)->Name("gram/omp")->Arg(8)->Arg(16)->Arg(32)->UseRealTime();
BENCHMARK(BM_nonlinear)->Name("nonlinear_term")->Arg(8)->Arg(16)->Arg(32)->UseRealTime();

BENCHMARK_MAIN();
