#include "oracles.hpp"
#include "vvdisk/errors.hpp"
#include "vvdisk/special_functions.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace vvdisk;

TEST_CASE("bessel_j at the origin") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(3, 0.0) == 0.0);
    CHECK(bessel_j_prime(0, 0.0) == 0.0);
    CHECK(bessel_j_prime(1, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("bessel_j matches the ascending series") {
    CHECK(std::abs(bessel_j(1, 1.0) - oracle::series_j(1, 1.0, 50)) < 1e-13);
    for (int n = 0; n <= 12; ++n) {
        for (double x = 0.05; x <= 10.0; x += 0.37) {
            const double ref = oracle::series_j(n, x);
            CHECK(std::abs(bessel_j(n, x) - ref) <= 1e-12 * std::abs(ref) + 1e-14);
        }
    }
}

TEST_CASE("bessel_j vanishes at the series-bisection zero of J_0") {
    const double z = oracle::bisect_series_zero(0, 2.0, 3.0);
    CHECK(std::abs(z - 2.404825557695773) < 1e-14);
    CHECK(std::abs(bessel_j(0, 2.404825557695773)) < 1e-12);
}

TEST_CASE("bessel_j matches boost over a wide range") {
    double worst = 0.0;
    for (int n : {0, 1, 2, 5, 17, 40, 100, 250}) {
        for (double x : {0.3, 1.0, 7.5, 33.0, 99.9, 240.0, 511.0, 1500.0, 4000.0, 9999.0}) {
            const double ref = boost::math::cyl_bessel_j(n, x);
            const double got = bessel_j(n, x);
            worst = std::max(worst, std::abs(got - ref));
            CHECK(std::abs(got - ref) <= 1e-12 * std::abs(ref) + 1e-14);
        }
    }
    MESSAGE("worst absolute difference against boost: " << worst);
}

TEST_CASE("sequence and window agree with single evaluations") {
    const double x = 37.25;
    const auto seq = bessel_j_sequence(60, x);
    for (int n = 0; n <= 60; ++n) CHECK(seq[static_cast<std::size_t>(n)] == doctest::Approx(bessel_j(n, x)).epsilon(1e-13));
    double w[5];
    bessel_j_window(-2, 2, x, w);
    CHECK(w[0] == doctest::Approx(bessel_j(2, x)).epsilon(1e-14));
    CHECK(w[1] == doctest::Approx(-bessel_j(1, x)).epsilon(1e-14));
    CHECK(w[2] == doctest::Approx(bessel_j(0, x)).epsilon(1e-14));
}

TEST_CASE("bessel_j domain errors") {
    CHECK_THROWS_AS(bessel_j(0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0, kBesselMaxArgument * 2), DomainError);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(kBesselMaxOrder + 1, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j_prime(0, std::nan("")), DomainError);
}

TEST_CASE("derivative matches a central difference") {
    const double h = 1e-6;
    const double fd = (bessel_j(2, 5.0 + h) - bessel_j(2, 5.0 - h)) / (2 * h);
    CHECK(std::abs(bessel_j_prime(2, 5.0) - fd) < 1e-8);
    CHECK(bessel_j_prime(2, 5.0) == doctest::Approx((bessel_j(1, 5.0) - bessel_j(3, 5.0)) / 2).epsilon(1e-15));
}

TEST_CASE("three-term recurrence") {
    for (int n = 1; n <= 60; n += 3) {
        for (double x = 0.5; x <= 200.0; x *= 1.7) {
            const double r = 2 * n * bessel_j(n, x) - x * bessel_j(n - 1, x) - x * bessel_j(n + 1, x);
            CHECK(std::abs(r) <= 1e-10 * (1 + x));
        }
    }
}

TEST_CASE("derivative relations") {
    for (int n = 1; n <= 30; n += 4) {
        for (double x = 0.1; x <= 150.0; x *= 1.9) {
            const double j = bessel_j(n, x);
            const double jp = bessel_j_prime(n, x);
            CHECK(std::abs(bessel_j(n - 1, x) - (n / x * j + jp)) < 1e-10);
            CHECK(std::abs(bessel_j(n + 1, x) - (n / x * j - jp)) < 1e-10);
        }
    }
}

TEST_CASE("Bessel ODE residual") {
    const double h = 1e-4;
    for (int n : {0, 2, 7}) {
        for (double x : {1.3, 4.0, 11.0}) {
            const double jpp = (bessel_j(n, x + h) - 2 * bessel_j(n, x) + bessel_j(n, x - h)) / (h * h);
            const double res = x * x * jpp + x * bessel_j_prime(n, x) + (x * x - n * n) * bessel_j(n, x);
            CHECK(std::abs(res) < 1e-5 * x * x);
        }
    }
}

TEST_CASE("integral of r J_n(ar)^2 against its closed form") {
    for (int n : {0, 1, 4}) {
        for (double a : {2.0, 7.3}) {
            const double q = oracle::trapezoid([&](double r) { return r * std::pow(bessel_j(n, a * r), 2); },
                                               0.0, 1.0, 4000);
            const double closed =
                0.5 * (std::pow(bessel_j(n, a), 2) - (n == 0 ? -bessel_j(1, a) : bessel_j(n - 1, a)) * bessel_j(n + 1, a));
            CHECK(std::abs(q - closed) < 1e-6);
        }
    }
}

TEST_CASE("zeros against the series oracle and boost") {
    CHECK(std::abs(bessel_zero(0, 1) - oracle::series_zero(0, 1)) < 1e-13);
    CHECK(std::abs(bessel_zero(1, 1) - oracle::series_zero(1, 1)) < 1e-13);
    CHECK(std::abs(bessel_zero(0, 1) - 2.404825557695773) < 1e-13);
    CHECK(std::abs(bessel_zero(1, 1) - 3.831705970207512) < 1e-13);
    const ZeroTable z(40, 40);
    double worst = 0.0;
    for (int n = 0; n <= 40; n += 3) {
        for (int k = 1; k <= 40; k += 3) {
            const double ref = boost::math::cyl_bessel_j_zero(static_cast<double>(n), k);
            worst = std::max(worst, std::abs(z(n, k) - ref));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("zero table invariants") {
    const int nm = 200;
    const ZeroTable z(nm, nm);
    bool interlace = true;
    bool increasing = true;
    bool spacing = true;
    bool range = true;
    double residual = 0.0;
    for (int n = 0; n <= nm; ++n) {
        for (int k = 1; k <= nm; ++k) {
            const double j = z(n, k);
            if (k > 1 && !(j > z(n, k - 1))) increasing = false;
            if (n < nm) {
                const double d = z(n + 1, k) - j;
                if (!(d > 1.0 && d < std::numbers::pi / 2)) spacing = false;
                if (k < nm && !(j < z(n + 1, k) && z(n + 1, k) < z(n, k + 1))) interlace = false;
            }
            if (!(n + k < j && j < std::numbers::pi * (n / 2.0 + k))) range = false;
            if (n % 20 == 0 && k % 20 == 0) residual = std::max(residual, std::abs(bessel_j(n, j)));
        }
    }
    CHECK(increasing);
    CHECK(interlace);
    CHECK(spacing);
    CHECK(range);
    CHECK(residual < 1e-13);
    CHECK_THROWS_AS(z(nm + 1, 1), DomainError);
    CHECK_THROWS_AS(z(0, 0), DomainError);
}

TEST_CASE("g_alpha") {
    CHECK(g_alpha(0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(g_alpha(0.5, 1e6) - std::exp(-0.5)) < 1e-6);
    CHECK(g_alpha(0.9, 2.0) == doctest::Approx(0.3025).epsilon(1e-14));
    for (double a = 0.05; a < 1.0; a += 0.05) {
        for (double x = 1.0; x < 1e7; x *= 1.3) {
            const double g = g_alpha(a, x);
            CHECK(g >= 1 - a - 1e-15);
            CHECK(g < std::exp(-a));
        }
    }
    CHECK_THROWS_AS(g_alpha(0.0, 2.0), DomainError);
    CHECK_THROWS_AS(g_alpha(1.0, 2.0), DomainError);
    CHECK_THROWS_AS(g_alpha(0.5, 0.5), DomainError);
}
