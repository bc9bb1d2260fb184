#include "vvdisk/solver.hpp"

#include "../field/trig.hpp"
#include "vvdisk/errors.hpp"
#include "vvdisk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vvdisk {

namespace {

int default_angular(int n_theta) {
    int na = 3 * n_theta + 1;
    na += na % 2;
    return std::max(na, 8);
}

// The nonlinear integrand is a triple product of modes; the auto grid is
// validated on squares, so take twice its radial nodes.
PolarGrid nonlinear_grid(const Eigenbasis& basis, int n_theta, int n_r, int n_angular) {
    const PolarGrid base = build_grid_auto(basis, n_theta, n_r, n_angular, 0.0);
    return build_grid(2 * base.n_radial(), n_angular, 0.0);
}

} // namespace

GalerkinModel::GalerkinModel(const Eigenbasis& basis, int n_theta, int n_r, int n_angular)
    : n_theta_(n_theta),
      n_r_(n_r),
      grid_(nonlinear_grid(basis, n_theta, n_r, n_angular > 0 ? n_angular : default_angular(n_theta))),
      profiles_(basis, grid_, n_theta, n_r) {
    if (grid_.n_angular <= 3 * n_theta) {
        throw DomainError("GalerkinModel: " + std::to_string(grid_.n_angular) +
                          " angular nodes alias the quadratic term for n_theta = " +
                          std::to_string(n_theta) + " (need more than 3 n_theta)");
    }
}

std::vector<cplx> GalerkinModel::nonlinear_coeffs(const SpectralCoeffs& coeffs) const {
    if (coeffs.n_theta() != n_theta_ || coeffs.n_r() != n_r_) {
        throw DomainError("nonlinear_coeffs: truncation does not match the model");
    }
    const kernels::Shape shape{n_theta_, n_r_, grid_.n_radial(), grid_.n_angular};
    const detail::Trig trig(grid_.n_angular, n_theta_);
    const std::size_t npts = static_cast<std::size_t>(shape.nq) * shape.na;
    const cplx* g = coeffs.data().data();

    auto field = [&](Component c) {
        std::vector<double> f(npts);
        kernels::omp::synthesize(shape, trig.table(), g, profiles_.component(c),
                                 component_is_imaginary(c), f.data());
        return f;
    };
    const auto ur = field(Component::UR);
    const auto ut = field(Component::UT);
    const auto dr_ur = field(Component::DrUr);
    const auto dth_ur = field(Component::DthUr);
    const auto dr_ut = field(Component::DrUt);
    const auto dth_ut = field(Component::DthUt);

    std::vector<double> ar(npts);
    std::vector<double> at(npts);
    for (int q = 0; q < shape.nq; ++q) {
        const double inv_r = 1.0 / grid_.r[static_cast<std::size_t>(q)];
        for (int p = 0; p < shape.na; ++p) {
            const std::size_t i = static_cast<std::size_t>(q) * shape.na + p;
            ar[i] = ur[i] * dr_ur[i] + ut[i] * dth_ur[i] - ut[i] * ut[i] * inv_r;
            at[i] = ur[i] * dr_ut[i] + ut[i] * dth_ut[i] + ur[i] * ut[i] * inv_r;
        }
    }

    std::vector<cplx> spec_r(static_cast<std::size_t>(n_theta_ + 1) * shape.nq);
    std::vector<cplx> spec_t(spec_r.size());
    kernels::omp::analyze(shape, trig.table(), ar.data(), spec_r.data());
    kernels::omp::analyze(shape, trig.table(), at.data(), spec_t.data());

    std::vector<cplx> out(coeffs.size(), cplx(0.0, 0.0));
    kernels::omp::project_accumulate(shape, grid_.w.data(), profiles_.component(Component::UR), true,
                                     spec_r.data(), out.data());
    kernels::omp::project_accumulate(shape, grid_.w.data(), profiles_.component(Component::UT), false,
                                     spec_t.data(), out.data());
    for (int k = 0; k < n_r_; ++k) out[static_cast<std::size_t>(k)].imag(0.0);
    return out;
}

double GalerkinModel::flux(const SpectralCoeffs& coeffs, const std::vector<cplx>& n_coeffs) const {
    double sum = 0.0;
    for (int n = 0; n <= coeffs.n_theta(); ++n) {
        for (int k = 1; k <= coeffs.n_r(); ++k) {
            const std::size_t i = coeffs.offset(n, k);
            const double v = (std::conj(coeffs.data()[i]) * n_coeffs[i]).real();
            sum += (n == 0 ? 1.0 : 2.0) * v;
        }
    }
    return sum;
}

double GalerkinModel::max_speed(const SpectralCoeffs& coeffs) const {
    const FieldSample u = synthesize(coeffs, grid_, profiles_, Quantity::Velocity);
    double m = 0.0;
    for (std::size_t i = 0; i < u.values[0].size(); ++i) {
        m = std::max(m, std::hypot(u.values[0][i], u.values[1][i]));
    }
    return m;
}

} // namespace vvdisk
