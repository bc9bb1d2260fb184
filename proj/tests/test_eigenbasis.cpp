#include "vvdisk/eigenbasis.hpp"
#include "vvdisk/errors.hpp"
#include "vvdisk/field.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace vvdisk;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

double bj(int n, double x) {
    return boost::math::cyl_bessel_j(n, x);
}

// Velocity from the stream function psi = C/lambda (J_n(alpha r) - J_n(alpha) r^n) e^{in theta},
// u^r = (1/r) d_theta psi, u^theta = -d_r psi, C = 1/(sqrt(pi) J_n(alpha)).
PolarVector stream_velocity(int n, double alpha, double r, double theta) {
    const double ja = bj(n, alpha);
    const double c = 1.0 / (std::sqrt(kPi) * ja);
    const double lam = alpha * alpha;
    const cplx e = std::exp(I * static_cast<double>(n) * theta);
    const double psi = c / lam * (bj(n, alpha * r) - ja * std::pow(r, n));
    const double dpsi = c / lam *
                        (alpha * boost::math::cyl_bessel_j_prime(n, alpha * r) -
                         (n == 0 ? 0.0 : n * ja * std::pow(r, n - 1)));
    return {I * static_cast<double>(n) / r * psi * e, -dpsi * e};
}

} // namespace

TEST_CASE("eigen_pair (0,1)") {
    const EigenPair p = eigen_pair(0, 1);
    CHECK(p.lambda == doctest::Approx(14.681970642124).epsilon(1e-12));
    CHECK(p.alpha == doctest::Approx(3.831705970208).epsilon(1e-12));
    CHECK(p.beta == doctest::Approx(2.404825557695773).epsilon(1e-14));
    CHECK(bj(0, p.alpha) == doctest::Approx(-0.402759).epsilon(1e-6));
    CHECK(p.c_norm == doctest::Approx(1.0 / (std::sqrt(kPi) * 0.4027593957025531)).epsilon(1e-12));
    CHECK(p.c_norm == doctest::Approx(1.4009).epsilon(1e-4));
    CHECK_FALSE(p.d_const.has_value());
}

TEST_CASE("eigenpair invariants over a table") {
    const Eigenbasis basis(20, 20);
    for (int n = 0; n <= 20; ++n) {
        for (int k = 1; k <= 20; ++k) {
            const EigenPair& p = basis(n, k);
            CHECK(p.lambda == doctest::Approx(p.alpha * p.alpha).epsilon(1e-15));
            const double root = p.alpha * boost::math::cyl_bessel_j_prime(n, p.alpha) - n * bj(n, p.alpha);
            CHECK(std::abs(root) < 1e-9);
            CHECK(p.c_norm > 0.0);
            CHECK(p.c_norm == doctest::Approx(1.0 / (std::sqrt(kPi) * std::abs(bj(n, p.alpha)))).epsilon(1e-11));
            CHECK(p.beta < p.alpha);
            CHECK(p.alpha < basis.zeros()(n, k + 1));
            if (n >= 1) {
                REQUIRE(p.d_const.has_value());
                CHECK(*p.d_const == doctest::Approx(-p.alpha * p.alpha * bj(n, p.alpha) / n).epsilon(1e-11));
            }
        }
    }
    CHECK_THROWS_AS(basis(21, 1), DomainError);
}

TEST_CASE("vorticity_eval") {
    const EigenPair p01 = eigen_pair(0, 1);
    CHECK(std::abs(vorticity_eval(p01, 1.0, 0.0)) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-13));
    // sign convention: omega_nk(1, 0) > 0
    CHECK(vorticity_eval(p01, 1.0, 0.0).real() > 0.0);
    CHECK(std::abs(vorticity_eval(eigen_pair(3, 2), 0.0, 1.234)) == 0.0);
    const EigenPair p11 = eigen_pair(1, 1);
    const cplx v = vorticity_eval(p11, 0.5, kPi / 2);
    const cplx ref = I / (std::sqrt(kPi) * bj(1, p11.alpha)) * bj(1, p11.alpha / 2);
    CHECK(std::abs(v - ref) < 1e-13);
    CHECK_THROWS_AS(vorticity_eval(p11, 1.1, 0.0), DomainError);
    CHECK_THROWS_AS(vorticity_eval(p11, -0.1, 0.0), DomainError);
}

TEST_CASE("velocity_eval against the stream-function evaluator") {
    const Eigenbasis basis(12, 12);
    for (int n = 0; n <= 12; n += 3) {
        for (int k = 1; k <= 12; k += 4) {
            for (double r : {0.1, 0.5, 0.93}) {
                const PolarVector u = velocity_eval(basis(n, k), r, 0.7);
                const PolarVector ref = stream_velocity(n, basis(n, k).alpha, r, 0.7);
                CHECK(std::abs(u.r - ref.r) < 1e-12);
                CHECK(std::abs(u.theta - ref.theta) < 1e-12);
            }
        }
    }
    const PolarVector u = velocity_eval(eigen_pair(1, 1), 0.5, 0.0);
    const PolarVector ref = stream_velocity(1, eigen_pair(1, 1).alpha, 0.5, 0.0);
    CHECK(std::abs(u.r - ref.r) < 1e-12);
    CHECK(std::abs(u.theta - ref.theta) < 1e-12);
}

TEST_CASE("velocity boundary and origin values") {
    const Eigenbasis basis(12, 12);
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) {
        for (int k = 1; k <= 12; ++k) {
            for (double th : {0.0, 1.0, 2.5}) {
                const PolarVector u = velocity_eval(basis(n, k), 1.0, th);
                worst = std::max({worst, std::abs(u.r), std::abs(u.theta)});
            }
        }
    }
    CHECK(worst < 1e-10);
    const PolarVector u0 = velocity_eval(eigen_pair(0, 1), 0.0, 0.3);
    CHECK(std::abs(u0.r) == 0.0);
    CHECK(std::abs(u0.theta) == 0.0);
    // n = 1 has a nonzero but finite velocity at the centre; continuity from r > 0
    const EigenPair p = eigen_pair(1, 2);
    const PolarVector a = velocity_eval(p, 0.0, 0.0);
    const PolarVector b = velocity_eval(p, 1e-6, 0.0);
    CHECK(std::abs(a.r - b.r) < 1e-8);
    CHECK(std::abs(a.theta - b.theta) < 1e-8);
}

TEST_CASE("velocity gradient against finite differences") {
    const EigenPair p = eigen_pair(2, 3);
    const double r = 0.7;
    const double th = 0.3;
    const double h = 1e-6;
    const PolarGradient g = velocity_gradient_eval(p, r, th);
    const PolarVector rp = velocity_eval(p, r + h, th);
    const PolarVector rm = velocity_eval(p, r - h, th);
    const PolarVector tp = velocity_eval(p, r, th + h);
    const PolarVector tm = velocity_eval(p, r, th - h);
    const PolarVector u = velocity_eval(p, r, th);
    CHECK(std::abs(g.d_r_ur - (rp.r - rm.r) / (2 * h)) < 1e-7);
    CHECK(std::abs(g.d_r_ut - (rp.theta - rm.theta) / (2 * h)) < 1e-7);
    CHECK(std::abs(g.d_theta_ur - (tp.r - tm.r) / (2 * h * r)) < 1e-7);
    CHECK(std::abs(g.d_theta_ut - (tp.theta - tm.theta) / (2 * h * r)) < 1e-7);
    CHECK(std::abs(g.ur_over_r - u.r / r) < 1e-14);
    CHECK(std::abs(g.ut_over_r - u.theta / r) < 1e-14);
    CHECK_THROWS_AS(velocity_gradient_eval(p, 0.0, 0.0), DomainError);
}

TEST_CASE("divergence vanishes and curl equals vorticity") {
    const Eigenbasis basis(12, 12);
    double div = 0.0;
    double curl = 0.0;
    for (int n = 0; n <= 12; ++n) {
        for (int k = 1; k <= 12; ++k) {
            for (double r : {0.05, 0.3, 0.77, 1.0}) {
                for (double th : {0.0, 2.0}) {
                    const PolarGradient g = velocity_gradient_eval(basis(n, k), r, th);
                    div = std::max(div, std::abs(g.divergence()));
                    curl = std::max(curl, std::abs(g.curl() - vorticity_eval(basis(n, k), r, th)));
                }
            }
        }
    }
    CHECK(div < 1e-9);
    CHECK(curl < 1e-9);
}

TEST_CASE("eigen-equation residual") {
    const Eigenbasis basis(10, 10);
    for (int n = 0; n <= 10; n += 2) {
        for (int k = 1; k <= 10; k += 3) {
            const EigenPair& p = basis(n, k);
            for (double r : {0.2, 0.6, 0.95}) {
                const double a = p.alpha;
                const double x = a * r;
                const double j = bj(n, x);
                const double jp = boost::math::cyl_bessel_j_prime(n, x);
                const double jpp = (bj(n - 2, x) - 2 * j + bj(n + 2, x)) / 4;
                const double c = 1.0 / (std::sqrt(kPi) * bj(n, a));
                // radial part of Laplacian of c J_n(a r) e^{in theta}
                const double lap = c * (a * a * jpp + a * jp / r - n * n * j / (r * r));
                const double w = vorticity_eval(p, r, 0.0).real();
                CHECK(std::abs(lap + p.lambda * w) < 1e-7 * std::max(1.0, p.lambda));
            }
        }
    }
}

TEST_CASE("V-orthonormality and the H-norm identity by quadrature") {
    const Eigenbasis basis(12, 12);
    const PolarGrid grid = build_grid_auto(basis, 12, 12, 32, 0.0);
    std::vector<ModeSample> w;
    std::vector<ModeSample> u;
    for (int n = 0; n <= 12; ++n) {
        for (int k = 1; k <= 12; ++k) {
            w.push_back(sample_mode(basis(n, k), grid, Quantity::Vorticity));
            u.push_back(sample_mode(basis(n, k), grid, Quantity::Velocity));
        }
    }
    double worst = 0.0;
    for (std::size_t a = 0; a < w.size(); ++a) {
        for (std::size_t b = a; b < w.size(); ++b) {
            const cplx ip = inner_product(w[a], w[b], grid);
            worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
        }
    }
    CHECK(worst < 1e-9);
    double hnorm = 0.0;
    for (int n = 0; n <= 12; ++n) {
        for (int k = 1; k <= 12; ++k) {
            const std::size_t i = static_cast<std::size_t>(n) * 12 + k - 1;
            hnorm = std::max(hnorm, std::abs(inner_product(u[i], u[i], grid).real() - 1.0 / basis(n, k).lambda));
        }
    }
    CHECK(hnorm < 1e-9);
}

TEST_CASE("zero total vorticity") {
    const Eigenbasis basis(6, 10);
    const PolarGrid grid = build_grid(96, 16, 0.0);
    for (int n = 0; n <= 6; ++n) {
        for (int k = 1; k <= 10; ++k) {
            const ModeSample s = sample_mode(basis(n, k), grid, Quantity::Vorticity);
            cplx total = 0.0;
            for (int q = 0; q < grid.n_radial(); ++q) {
                for (int pp = 0; pp < grid.n_angular; ++pp) {
                    total += grid.w[static_cast<std::size_t>(q)] * (2 * kPi / grid.n_angular) * s(0, q, pp);
                }
            }
            CHECK(std::abs(total) < 1e-10);
        }
    }
}
