#include "vvdisk/kernels.hpp"

#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace vvdisk::kernels;

namespace {

struct Data {
    Shape s;
    std::vector<double> cos_tab, sin_tab, prof, prof2, weights, field;
    std::vector<cplx> g;

    explicit Data(Shape shape) : s(shape) {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int n = 0; n <= s.n_theta; ++n) {
            for (int p = 0; p < s.na; ++p) {
                const double t = 2.0 * std::numbers::pi * ((n * p) % s.na) / s.na;
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
        for (std::size_t i = 0; i < static_cast<std::size_t>(s.nq) * s.na; ++i) field.push_back(u(rng));
        for (std::size_t i = 0; i < modes; ++i) g.emplace_back(u(rng), i < static_cast<std::size_t>(s.n_r) ? 0.0 : u(rng));
    }
    TrigTable trig() const { return {cos_tab.data(), sin_tab.data()}; }
};

} // namespace

TEST_CASE("OpenMP kernels are bitwise identical to the serial reference") {
    omp_set_num_threads(4);
    for (Shape shape : {Shape{0, 3, 17, 8}, Shape{7, 5, 33, 24}, Shape{16, 16, 64, 50}}) {
        const Data d(shape);
        const std::size_t npts = static_cast<std::size_t>(shape.nq) * shape.na;
        for (bool imag : {false, true}) {
            std::vector<double> a(npts), b(npts);
            serial::synthesize(shape, d.trig(), d.g.data(), d.prof.data(), imag, a.data());
            omp::synthesize(shape, d.trig(), d.g.data(), d.prof.data(), imag, b.data());
            CHECK(a == b);
        }
        const std::size_t ns = static_cast<std::size_t>(shape.n_theta + 1) * shape.nq;
        std::vector<cplx> sa(ns), sb(ns);
        serial::analyze(shape, d.trig(), d.field.data(), sa.data());
        omp::analyze(shape, d.trig(), d.field.data(), sb.data());
        CHECK(sa == sb);
        for (bool imag : {false, true}) {
            std::vector<cplx> pa(d.g.size()), pb(d.g.size());
            serial::project_accumulate(shape, d.weights.data(), d.prof.data(), imag, sa.data(), pa.data());
            omp::project_accumulate(shape, d.weights.data(), d.prof.data(), imag, sa.data(), pb.data());
            CHECK(pa == pb);
        }
        const double* profs[2] = {d.prof.data(), d.prof2.data()};
        const std::size_t nb = static_cast<std::size_t>(shape.n_theta + 1) * shape.n_r * shape.n_r;
        std::vector<double> ga(nb), gb(nb);
        serial::gram(shape, d.weights.data(), profs, 2, ga.data());
        omp::gram(shape, d.weights.data(), profs, 2, gb.data());
        CHECK(ga == gb);
    }
}

TEST_CASE("analyze inverts synthesize on the resolved band") {
    const Shape shape{5, 1, 3, 16};
    Data d(shape);
    // one radial profile equal to 1 everywhere makes synthesis a pure Fourier sum
    std::vector<double> ones(static_cast<std::size_t>(shape.n_theta + 1) * shape.nq, 1.0);
    std::vector<double> f(static_cast<std::size_t>(shape.nq) * shape.na);
    serial::synthesize(shape, d.trig(), d.g.data(), ones.data(), false, f.data());
    std::vector<cplx> spec(static_cast<std::size_t>(shape.n_theta + 1) * shape.nq);
    serial::analyze(shape, d.trig(), f.data(), spec.data());
    const double two_pi = 2.0 * std::numbers::pi;
    for (int n = 0; n <= shape.n_theta; ++n) {
        const cplx expect = two_pi * d.g[static_cast<std::size_t>(n)];
        for (int q = 0; q < shape.nq; ++q) {
            CHECK(std::abs(spec[static_cast<std::size_t>(n) * shape.nq + q] - expect) < 1e-12);
        }
    }
}

TEST_CASE("gram blocks are symmetric") {
    const Shape shape{3, 6, 20, 8};
    const Data d(shape);
    const double* profs[1] = {d.prof.data()};
    std::vector<double> out(static_cast<std::size_t>(shape.n_theta + 1) * shape.n_r * shape.n_r);
    serial::gram(shape, d.weights.data(), profs, 1, out.data());
    for (int n = 0; n <= shape.n_theta; ++n) {
        for (int j = 0; j < shape.n_r; ++j) {
            for (int k = 0; k < shape.n_r; ++k) {
                const std::size_t b = static_cast<std::size_t>(n) * shape.n_r * shape.n_r;
                CHECK(out[b + j * shape.n_r + k] == out[b + k * shape.n_r + j]);
            }
        }
    }
}
