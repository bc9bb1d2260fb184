#include "oracles.hpp"
#include "vvdisk/errors.hpp"
#include "vvdisk/field.hpp"
#include "vvdisk/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace vvdisk;

namespace {

constexpr double kPi = std::numbers::pi;

const Eigenbasis& basis() {
    static const Eigenbasis b(16, 16);
    return b;
}

SpectralCoeffs random_coeffs(int nt, int nr, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SpectralCoeffs c(nt, nr);
    for (int n = 0; n <= nt; ++n) {
        for (int k = 1; k <= nr; ++k) c.at(n, k) = cplx(u(rng), n == 0 ? 0.0 : u(rng));
    }
    return c;
}

// Disk of radius rho: the unit-disk grid scaled by rho.
PolarGrid inner_disk(int nq, int na, double rho) {
    PolarGrid g = build_grid(nq, na, 0.0);
    for (auto& r : g.r) r *= rho;
    for (auto& w : g.w) w *= rho * rho;
    return g;
}

double sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

} // namespace

TEST_CASE("gauss_legendre integrates polynomials") {
    const GaussRule g = gauss_legendre(10);
    double s = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * std::pow(g.x[i], 18);
    CHECK(s == doctest::Approx(2.0 / 19.0).epsilon(1e-14));
}

TEST_CASE("build_grid masses") {
    CHECK(std::abs(sum(build_grid(32, 64, 0.0).w) - 0.5) < 1e-14);
    CHECK(std::abs(sum(build_grid(32, 64, 0.9).w) - 0.095) < 1e-14);
    CHECK_THROWS_AS(build_grid(3, 64, 0.0), DomainError);
    CHECK_THROWS_AS(build_grid(32, 7, 0.0), DomainError);
    CHECK_THROWS_AS(build_grid(32, 2, 0.0), DomainError);
    CHECK_THROWS_AS(build_grid(32, 8, 1.0), DomainError);
    CHECK_THROWS_AS(build_grid(32, 8, -0.1), DomainError);
}

TEST_CASE("auto grid reproduces the Bessel square integral") {
    const PolarGrid g = build_grid_auto(basis(), 0, 1, 64, 0.0);
    const double a = basis()(0, 1).alpha;
    double q = 0.0;
    for (int i = 0; i < g.n_radial(); ++i) {
        q += g.w[static_cast<std::size_t>(i)] * std::pow(bessel_j(0, a * g.r[static_cast<std::size_t>(i)]), 2);
    }
    CHECK(std::abs(q - 0.5 * std::pow(bessel_j(0, a), 2)) < 1e-10);
    CHECK(bessel_square_integral(0, a, 0.0) == doctest::Approx(0.5 * std::pow(bessel_j(0, a), 2)).epsilon(1e-13));
    // cross integrals of distinct modes also converge on the auto grid
    const PolarGrid ann = build_grid_auto(basis(), 16, 16, 8, 0.8);
    const PolarGrid fine = build_grid(4 * ann.n_radial(), 8, 0.8);
    auto cross = [&](const PolarGrid& gr) {
        double s = 0.0;
        for (int i = 0; i < gr.n_radial(); ++i) {
            const double r = gr.r[static_cast<std::size_t>(i)];
            s += gr.w[static_cast<std::size_t>(i)] * bessel_j(5, basis()(5, 3).alpha * r) *
                 bessel_j(5, basis()(5, 16).alpha * r);
        }
        return s;
    };
    CHECK(std::abs(cross(ann) - cross(fine)) < 1e-10);
}

TEST_CASE("synthesize single modes") {
    const PolarGrid g = build_grid(24, 16, 0.0);
    SpectralCoeffs c(2, 3);
    c.at(0, 1) = 1.0;
    const FieldSample s = synthesize(c, g, basis(), Quantity::Vorticity);
    const EigenPair& p01 = basis()(0, 1);
    for (int q = 0; q < g.n_radial(); ++q) {
        for (int a = 0; a < g.n_angular; ++a) {
            CHECK(std::abs(s(0, q, a) - vorticity_eval(p01, g.r[static_cast<std::size_t>(q)], g.theta(a)).real()) < 1e-13);
        }
    }
    const FieldSample z = synthesize(SpectralCoeffs(2, 3), g, basis(), Quantity::Gradient);
    for (const auto& comp : z.values) {
        for (double v : comp) CHECK(v == 0.0);
    }
    SpectralCoeffs ci(2, 3);
    ci.at(1, 1) = cplx(0.0, 1.0);
    const FieldSample si = synthesize(ci, g, basis(), Quantity::Vorticity);
    const EigenPair& p11 = basis()(1, 1);
    double worst = 0.0;
    for (int q = 0; q < g.n_radial(); ++q) {
        const double r = g.r[static_cast<std::size_t>(q)];
        for (int a = 0; a < g.n_angular; ++a) {
            const double ref = -2.0 / (std::sqrt(kPi) * p11.j_n_alpha) * bessel_j(1, p11.alpha * r) * std::sin(g.theta(a));
            worst = std::max(worst, std::abs(si(0, q, a) - ref));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("synthesized velocity, gradient and tangential components match pointwise evaluation") {
    const PolarGrid g = build_grid(20, 24, 0.6);
    const SpectralCoeffs c = random_coeffs(5, 4, 11);
    const FieldSample u = synthesize(c, g, basis(), Quantity::Velocity);
    const FieldSample gr = synthesize(c, g, basis(), Quantity::Gradient);
    const FieldSample tt = synthesize(c, g, basis(), Quantity::TangentialTau);
    const FieldSample tn = synthesize(c, g, basis(), Quantity::TangentialNormal);
    double worst = 0.0;
    for (int q = 0; q < g.n_radial(); q += 3) {
        const double r = g.r[static_cast<std::size_t>(q)];
        for (int a = 0; a < g.n_angular; a += 5) {
            double ur = 0, ut = 0, rr = 0, rt = 0, tr = 0, tht = 0, dtut = 0, dtur = 0;
            for (int n = 0; n <= 5; ++n) {
                for (int k = 1; k <= 4; ++k) {
                    const double m = n == 0 ? 1.0 : 2.0;
                    const cplx gk = c.at(n, k);
                    const PolarVector v = velocity_eval(basis()(n, k), r, g.theta(a));
                    const PolarGradient d = velocity_gradient_eval(basis()(n, k), r, g.theta(a));
                    ur += m * (gk * v.r).real();
                    ut += m * (gk * v.theta).real();
                    rr += m * (gk * d.rr()).real();
                    rt += m * (gk * d.rt()).real();
                    tr += m * (gk * d.tr()).real();
                    tht += m * (gk * d.tt()).real();
                    dtut += m * (gk * d.d_theta_ut).real();
                    dtur += m * (gk * d.d_theta_ur).real();
                }
            }
            worst = std::max({worst, std::abs(u(0, q, a) - ur), std::abs(u(1, q, a) - ut),
                              std::abs(gr(0, q, a) - rr), std::abs(gr(1, q, a) - rt),
                              std::abs(gr(2, q, a) - tr), std::abs(gr(3, q, a) - tht),
                              std::abs(tt(0, q, a) - dtut), std::abs(tn(0, q, a) - dtur)});
        }
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("project inverts synthesize") {
    const PolarGrid g = build_grid_auto(basis(), 6, 6, 16, 0.0);
    const ProfileTable t(basis(), g, 6, 6);
    SpectralCoeffs e(6, 6);
    e.at(2, 3) = 1.0;
    const SpectralCoeffs back = project(synthesize(e, g, t, Quantity::Vorticity), g, t);
    for (int n = 0; n <= 6; ++n) {
        for (int k = 1; k <= 6; ++k) {
            CHECK(std::abs(back.at(n, k) - e.at(n, k)) < 1e-9);
        }
    }
    SpectralCoeffs lin(6, 6);
    lin.at(0, 1) = 1.0;
    lin.at(1, 2) = 0.5;
    const SpectralCoeffs lb = project(synthesize(lin, g, t, Quantity::Vorticity), g, t);
    CHECK(std::abs(lb.at(0, 1) - 1.0) < 1e-9);
    CHECK(std::abs(lb.at(1, 2) - 0.5) < 1e-9);
    const SpectralCoeffs rnd = random_coeffs(6, 6, 20240611);
    const SpectralCoeffs rb = project(synthesize(rnd, g, t, Quantity::Vorticity), g, t);
    double worst = 0.0;
    for (std::size_t i = 0; i < rnd.size(); ++i) worst = std::max(worst, std::abs(rnd.data()[i] - rb.data()[i]));
    CHECK(worst < 1e-9);
    const PolarGrid ann = build_grid(16, 16, 0.5);
    CHECK_THROWS_AS(project(synthesize(rnd, ann, basis(), Quantity::Vorticity), ann, ProfileTable(basis(), ann, 6, 6)),
                    UnsupportedError);
}

TEST_CASE("coefficient norms") {
    SpectralCoeffs c(0, 1);
    c.at(0, 1) = 1.0;
    CHECK(norm_l2_squared(c, basis(), Quantity::Vorticity) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm_l2_squared(c, basis(), Quantity::Velocity) == doctest::Approx(0.068111).epsilon(1e-5));
    CHECK(norm_l2_squared(c, basis(), Quantity::Velocity) == doctest::Approx(1.0 / basis()(0, 1).lambda).epsilon(1e-15));
    CHECK_THROWS_AS(norm_l2_squared(c, basis(), Quantity::TangentialTau), UnsupportedError);
    const PolarGrid g = build_grid(40, 8, 1.0 - 0.1 / basis()(0, 1).alpha);
    const double strip = norm_l2_squared(synthesize(c, g, basis(), Quantity::Vorticity), g);
    CHECK(strip <= 2.0 * 0.1 / basis()(0, 1).alpha);
}

TEST_CASE("Parseval: coefficient and quadrature norms agree") {
    const PolarGrid g = build_grid_auto(basis(), 8, 8, 28, 0.0);
    const ProfileTable t(basis(), g, 8, 8);
    double worst = 0.0;
    for (unsigned seed = 1; seed <= 100; ++seed) {
        const SpectralCoeffs c = random_coeffs(8, 8, seed);
        for (Quantity q : {Quantity::Vorticity, Quantity::Velocity, Quantity::Gradient}) {
            const double a = norm_l2_squared(c, basis(), q);
            const double b = norm_l2_squared(synthesize(c, g, t, q), g);
            worst = std::max(worst, std::abs(a - b) / a);
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("synthesized vorticity has zero mean") {
    const PolarGrid g = build_grid_auto(basis(), 8, 8, 28, 0.0);
    for (unsigned seed = 1; seed <= 10; ++seed) {
        const FieldSample s = synthesize(random_coeffs(8, 8, seed), g, basis(), Quantity::Vorticity);
        double total = 0.0;
        for (int q = 0; q < g.n_radial(); ++q) {
            for (int a = 0; a < g.n_angular; ++a) total += g.w[static_cast<std::size_t>(q)] * s(0, q, a);
        }
        CHECK(std::abs(total * 2 * kPi / g.n_angular) < 1e-9);
    }
}

TEST_CASE("annulus additivity and monotonicity") {
    const SpectralCoeffs c = random_coeffs(6, 6, 5);
    const double full = norm_l2_squared(c, basis(), Quantity::Vorticity);
    double prev = 0.0;
    for (double delta : {0.02, 0.05, 0.1, 0.2, 0.4, 0.7}) {
        const PolarGrid ann = build_grid_auto(basis(), 6, 6, 16, 1.0 - delta);
        const PolarGrid in = inner_disk(ann.n_radial() * 2, 16, 1.0 - delta);
        const double a = norm_l2_squared(synthesize(c, ann, basis(), Quantity::Vorticity), ann);
        const double b = norm_l2_squared(synthesize(c, in, basis(), Quantity::Vorticity), in);
        CHECK(std::abs(a + b - full) < 1e-8);
        CHECK(a >= prev);
        prev = a;
    }
}

TEST_CASE("inner products") {
    const Eigenbasis& B = basis();
    const PolarGrid g01 = build_grid(40, 16, 0.9);
    const cplx z = inner_product(sample_mode(B(1, 1), g01, Quantity::Vorticity),
                                 sample_mode(B(2, 1), g01, Quantity::Vorticity), g01);
    CHECK(std::abs(z) < 1e-12);
    const PolarGrid disk = build_grid_auto(B, 0, 1, 8, 0.0);
    const ModeSample w01 = sample_mode(B(0, 1), disk, Quantity::Vorticity);
    CHECK(std::abs(inner_product(w01, w01, disk) - 1.0) < 1e-9);
    // against a trapezoid oracle on the strip
    const PolarGrid g005 = build_grid(40, 8, 0.95);
    const cplx v = inner_product(sample_mode(B(0, 1), g005, Quantity::Vorticity),
                                 sample_mode(B(0, 2), g005, Quantity::Vorticity), g005);
    const EigenPair& a = B(0, 1);
    const EigenPair& b = B(0, 2);
    const double ref = 2 * kPi * oracle::trapezoid(
                                     [&](double r) {
                                         return r * bessel_j(0, a.alpha * r) * bessel_j(0, b.alpha * r) /
                                                (kPi * a.j_n_alpha * b.j_n_alpha);
                                     },
                                     0.95, 1.0, 20000);
    CHECK(std::abs(v.real() - ref) < 1e-8);
    CHECK(std::abs(v.imag()) < 1e-14);
    CHECK(std::abs(ref) > 1e-3);
    // conjugate symmetry
    const ModeSample x = sample_mode(B(3, 2), g005, Quantity::Velocity);
    const ModeSample y = sample_mode(B(3, 4), g005, Quantity::Velocity);
    CHECK(std::abs(inner_product(x, y, g005) - std::conj(inner_product(y, x, g005))) < 1e-15);
    CHECK_THROWS_AS(inner_product(x, sample_mode(B(3, 4), g01, Quantity::Velocity), g005), DomainError);
}

TEST_CASE("Gram blocks reproduce quadrature norms, including tangential quantities") {
    const PolarGrid g = build_grid_auto(basis(), 6, 5, 20, 0.85);
    const ProfileTable t(basis(), g, 6, 5);
    const SpectralCoeffs c = random_coeffs(6, 5, 99);
    for (Quantity q : {Quantity::Vorticity, Quantity::Velocity, Quantity::Gradient, Quantity::TangentialTau,
                       Quantity::TangentialNormal}) {
        const GramBlocks gb(t, g, q);
        const double direct = norm_l2_squared(synthesize(c, g, t, q), g);
        CHECK(gb.quadratic(c) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("coefficient JSON round trip") {
    SpectralCoeffs c = random_coeffs(3, 4, 8);
    c.set_time(0.125);
    const SpectralCoeffs d = coeffs_from_json(nlohmann::json::parse(to_json(c).dump()));
    CHECK(d.time() == 0.125);
    CHECK(d.n_theta() == 3);
    CHECK(d.n_r() == 4);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c.data()[i] == d.data()[i]);
    auto j = to_json(c);
    j["im"][0][0] = 1.0;
    CHECK_THROWS_AS(coeffs_from_json(j), ConfigError);
    CHECK_THROWS_AS(coeffs_from_json(nlohmann::json{{"n_theta", 1}}), ConfigError);
}

TEST_CASE("coefficient bounds") {
    SpectralCoeffs c(2, 2);
    CHECK_THROWS_AS(c.at(3, 1), DomainError);
    CHECK_THROWS_AS(c.at(0, 0), DomainError);
    CHECK_THROWS_AS(SpectralCoeffs(-1, 2), DomainError);
    const PolarGrid g = build_grid(8, 8, 0.0);
    CHECK_THROWS_AS(synthesize(SpectralCoeffs(17, 2), g, basis(), Quantity::Vorticity), DomainError);
}
