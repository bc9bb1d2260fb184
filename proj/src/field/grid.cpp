#include "vvdisk/field.hpp"

#include "vvdisk/errors.hpp"
#include "vvdisk/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vvdisk {

double PolarGrid::theta(int p) const {
    return 2.0 * std::numbers::pi * p / n_angular;
}

PolarGrid build_grid(int n_radial, int n_angular, double r_lo) {
    if (n_radial < 4) throw DomainError("build_grid: n_radial must be >= 4");
    if (n_angular < 4 || n_angular % 2 != 0) {
        throw DomainError("build_grid: n_angular must be even and >= 4");
    }
    if (!(r_lo >= 0.0 && r_lo < 1.0)) throw DomainError("build_grid: r_lo must lie in [0,1)");
    const GaussRule rule = gauss_legendre(n_radial);
    PolarGrid g;
    g.n_angular = n_angular;
    g.r_lo = r_lo;
    g.r.resize(static_cast<std::size_t>(n_radial));
    g.w.resize(static_cast<std::size_t>(n_radial));
    const double half = 0.5 * (1.0 - r_lo);
    for (int i = 0; i < n_radial; ++i) {
        const double r = r_lo + half * (rule.x[static_cast<std::size_t>(i)] + 1.0);
        g.r[static_cast<std::size_t>(i)] = r;
        g.w[static_cast<std::size_t>(i)] = rule.w[static_cast<std::size_t>(i)] * half * r;
    }
    return g;
}

double bessel_square_integral(int n, double a, double r_lo) {
    auto antiderivative = [n, a](double rho) {
        if (rho == 0.0) return 0.0;
        double j[3];
        bessel_j_window(n - 1, n + 1, a * rho, j);
        return 0.5 * rho * rho * (j[1] * j[1] - j[0] * j[2]);
    };
    return antiderivative(1.0) - antiderivative(r_lo);
}

PolarGrid build_grid_auto(const Eigenbasis& basis, int n_theta, int n_r, int n_angular, double r_lo,
                          int start, int max_nodes) {
    if (n_theta < 0 || n_r < 1 || n_theta > basis.max_n() || n_r > basis.max_k()) {
        throw DomainError("build_grid_auto: truncation exceeds eigenbasis table");
    }
    const EigenPair* checks[3] = {&basis(0, n_r), &basis(n_theta, n_r), &basis(n_theta, 1)};
    double exact[3];
    for (int i = 0; i < 3; ++i) {
        const EigenPair& p = *checks[i];
        exact[i] = bessel_square_integral(p.index.n, p.alpha, r_lo) / (p.j_n_alpha * p.j_n_alpha);
    }
    for (int nodes = std::max(start, 4); nodes <= max_nodes; nodes *= 2) {
        PolarGrid g = build_grid(nodes, n_angular, r_lo);
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            const EigenPair& p = *checks[i];
            double sum = 0.0;
            for (int q = 0; q < nodes; ++q) {
                const double v = bessel_j(p.index.n, p.alpha * g.r[static_cast<std::size_t>(q)]) /
                                 p.j_n_alpha;
                sum += g.w[static_cast<std::size_t>(q)] * v * v;
            }
            ok = std::abs(sum - exact[i]) <= 1e-10 * std::max(1.0, std::abs(exact[i]));
        }
        if (ok) return g;
    }
    throw ResolutionError("build_grid_auto: radial quadrature not converged with " +
                          std::to_string(max_nodes) + " nodes on r_lo = " + std::to_string(r_lo));
}

} // namespace vvdisk
