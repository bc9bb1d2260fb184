#include "vvdisk/solver.hpp"

#include "vvdisk/errors.hpp"
#include "vvdisk/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace vvdisk {

namespace {

constexpr int kNodes = 8;
constexpr double kPanelDecay = 4.0;
constexpr int kMaxPanels = 256;

const GaussRule& rule8() {
    static const GaussRule r = gauss_legendre(kNodes);
    return r;
}

} // namespace

TimeIntegrator::TimeIntegrator(std::vector<double> decay) : decay_(std::move(decay)) {
    for (const double c : decay_) {
        if (!(c >= 0.0)) throw DomainError("TimeIntegrator: decay rates must be >= 0");
    }
}

void TimeIntegrator::integrate_interval(const SpectralCoeffs& a, const SpectralCoeffs& b,
                                        int n_values, const Functional& evaluate,
                                        double* acc) const {
    if (!a.same_shape(b) || a.size() != decay_.size()) {
        throw DomainError("TimeIntegrator: sample shape mismatch");
    }
    const double h = b.time() - a.time();
    if (!(h > 0.0)) throw DomainError("TimeIntegrator: sample times must increase");
    const std::size_t m = decay_.size();

    double x_max = 0.0;
    for (const double c : decay_) x_max = std::max(x_max, c * h);
    const int panels = std::clamp(static_cast<int>(std::ceil(x_max / kPanelDecay)), 1, kMaxPanels);

    std::vector<double> x(m);
    std::vector<double> denom(m);
    std::vector<cplx> d(m);
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = decay_[i] * h;
        denom[i] = std::expm1(-x[i]);
        d[i] = b.data()[i] - a.data()[i] * std::exp(-x[i]);
    }

    const GaussRule& gl = rule8();
    std::vector<cplx> g(m);
    std::vector<double> vals(static_cast<std::size_t>(n_values));
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double lo = static_cast<double>(pnl) / panels;
        const double width = 1.0 / panels;
        for (int j = 0; j < kNodes; ++j) {
            const double tau = lo + 0.5 * width * (gl.x[static_cast<std::size_t>(j)] + 1.0);
            const double wt = 0.5 * width * gl.w[static_cast<std::size_t>(j)] * h;
            for (std::size_t i = 0; i < m; ++i) {
                const double phi = x[i] > 0.0 ? std::expm1(-x[i] * tau) / denom[i] : tau;
                g[i] = a.data()[i] * std::exp(-x[i] * tau) + d[i] * phi;
            }
            evaluate(g.data(), vals.data());
            for (int v = 0; v < n_values; ++v) acc[v] += wt * vals[static_cast<std::size_t>(v)];
        }
    }
}

std::vector<double> TimeIntegrator::integrate(const std::vector<SpectralCoeffs>& samples,
                                              int n_values, const Functional& evaluate,
                                              int stride) const {
    if (stride < 1) throw DomainError("TimeIntegrator: stride must be >= 1");
    std::vector<double> acc(static_cast<std::size_t>(n_values), 0.0);
    if (samples.size() < 2) return acc;
    const std::size_t last = samples.size() - 1;
    std::size_t i = 0;
    while (i < last) {
        const std::size_t j = std::min(last, i + static_cast<std::size_t>(stride));
        integrate_interval(samples[i], samples[j], n_values, evaluate, acc.data());
        i = j;
    }
    return acc;
}

} // namespace vvdisk
