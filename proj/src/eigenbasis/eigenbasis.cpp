#include "vvdisk/eigenbasis.hpp"

#include "vvdisk/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace vvdisk {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSmallR = 1e-8;

void check_radius(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw DomainError("eigenbasis: radius " + std::to_string(r) + " outside [0,1]");
    }
}

cplx phase(int n, double theta) {
    return std::polar(1.0, n * theta);
}

} // namespace

EigenPair make_eigen_pair(const ZeroTable& zeros, int n, int k) {
    EigenPair p;
    p.index = {n, k};
    p.alpha = zeros(n + 1, k);
    p.beta = zeros(n, k);
    p.lambda = p.alpha * p.alpha;
    p.j_n_alpha = bessel_j(n, p.alpha);
    p.c_norm = 1.0 / (kSqrtPi * std::abs(p.j_n_alpha));
    if (n >= 1) p.d_const = -p.lambda * p.j_n_alpha / n;
    return p;
}

EigenPair eigen_pair(int n, int k) {
    if (n < 0 || k < 1) throw DomainError("eigen_pair: need n >= 0, k >= 1");
    return make_eigen_pair(ZeroTable(n + 1, k), n, k);
}

Eigenbasis::Eigenbasis(int max_n, int max_k)
    : max_n_(max_n), max_k_(max_k), zeros_(max_n + 1, max_k + 1) {
    if (max_n < 0 || max_k < 1) throw DomainError("Eigenbasis: need max_n >= 0, max_k >= 1");
    pairs_.resize(static_cast<std::size_t>(max_n + 1) * static_cast<std::size_t>(max_k));
#pragma omp parallel for schedule(dynamic, 4)
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 1; k <= max_k; ++k) {
            pairs_[static_cast<std::size_t>(n) * max_k + (k - 1)] = make_eigen_pair(zeros_, n, k);
        }
    }
}

const EigenPair& Eigenbasis::operator()(int n, int k) const {
    if (n < 0 || n > max_n_ || k < 1 || k > max_k_) {
        throw DomainError("Eigenbasis: mode (" + std::to_string(n) + "," + std::to_string(k) +
                          ") outside table bounds");
    }
    return pairs_[static_cast<std::size_t>(n) * max_k_ + (k - 1)];
}

RadialProfile radial_profile(const EigenPair& pair, double r) {
    check_radius(r);
    const int n = pair.index.n;
    const double a = pair.alpha;
    const double inv = 1.0 / pair.j_n_alpha;
    const double s = 1.0 / (kSqrtPi * a * a);

    double j[5];
    bessel_j_window(n - 2, n + 2, a * r, j);
    const double jn = j[2] * inv;
    const double jp = 0.5 * (j[1] - j[3]) * inv;
    const double jpp = 0.25 * (j[0] - 2.0 * j[2] + j[4]) * inv;

    const double rn = std::pow(r, n);
    const double rn1 = n >= 1 ? std::pow(r, n - 1) : 0.0;
    const double rn2 = n >= 2 ? std::pow(r, n - 2) : 0.0;

    RadialProfile out;
    out.w = jn / kSqrtPi;
    out.T = (-a * jp + n * rn1) * s;
    out.dT = (-a * a * jpp + n * (n - 1.0) * rn2) * s;
    if (n == 0) {
        out.R = 0.0;
        out.dR = 0.0;
    } else {
        const double p = jn - rn;
        const double dp = a * jp - n * rn1;
        if (r < kSmallR) {
            out.R = (n == 1) ? s * (0.5 * a * inv - 1.0) : 0.0;
        } else {
            out.R = n * p / r * s;
        }
        out.dR = n * s * (dp / r - p / (r * r));
    }
    if (r == 0.0) {
        out.dR = std::numeric_limits<double>::quiet_NaN();
        out.dT = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

cplx vorticity_eval(const EigenPair& pair, double r, double theta) {
    check_radius(r);
    const double w = bessel_j(pair.index.n, pair.alpha * r) / (kSqrtPi * pair.j_n_alpha);
    return w * phase(pair.index.n, theta);
}

PolarVector velocity_eval(const EigenPair& pair, double r, double theta) {
    const RadialProfile p = radial_profile(pair, r);
    const cplx e = phase(pair.index.n, theta);
    return {cplx(0.0, p.R) * e, p.T * e};
}

PolarGradient velocity_gradient_eval(const EigenPair& pair, double r, double theta) {
    check_radius(r);
    if (r == 0.0) throw DomainError("velocity_gradient_eval: polar gradient is singular at r = 0");
    const RadialProfile p = radial_profile(pair, r);
    const int n = pair.index.n;
    const cplx e = phase(n, theta);
    const cplx i(0.0, 1.0);
    PolarGradient g;
    g.d_r_ur = i * p.dR * e;
    g.d_theta_ur = -n * p.R / r * e;
    g.d_r_ut = p.dT * e;
    g.d_theta_ut = i * (n * p.T / r) * e;
    g.ur_over_r = i * (p.R / r) * e;
    g.ut_over_r = p.T / r * e;
    return g;
}

} // namespace vvdisk
