#include "vvdisk/field.hpp"

#include "vvdisk/errors.hpp"

namespace vvdisk {

bool component_is_imaginary(Component c) {
    switch (c) {
    case Component::UR:
    case Component::DrUr:
    case Component::DthUt:
    case Component::GradTT:
        return true;
    default:
        return false;
    }
}

std::vector<Component> components_of(Quantity q) {
    switch (q) {
    case Quantity::Vorticity:
        return {Component::W};
    case Quantity::Velocity:
        return {Component::UR, Component::UT};
    case Quantity::Gradient:
        return {Component::DrUr, Component::GradRT, Component::DrUt, Component::GradTT};
    case Quantity::TangentialTau:
        return {Component::DthUt};
    case Quantity::TangentialNormal:
        return {Component::DthUr};
    }
    throw UnsupportedError("components_of: unknown quantity");
}

std::string to_string(Quantity q) {
    switch (q) {
    case Quantity::Vorticity:
        return "vorticity";
    case Quantity::Velocity:
        return "velocity";
    case Quantity::Gradient:
        return "gradient";
    case Quantity::TangentialTau:
        return "tangential_tau";
    case Quantity::TangentialNormal:
        return "tangential_normal";
    }
    return "unknown";
}

Quantity quantity_from_string(const std::string& s) {
    for (Quantity q : {Quantity::Vorticity, Quantity::Velocity, Quantity::Gradient,
                       Quantity::TangentialTau, Quantity::TangentialNormal}) {
        if (to_string(q) == s) return q;
    }
    throw ConfigError("unknown quantity '" + s + "'");
}

ProfileTable::ProfileTable(const Eigenbasis& basis, const PolarGrid& grid, int n_theta, int n_r)
    : n_theta_(n_theta), n_r_(n_r), nq_(grid.n_radial()) {
    if (n_theta < 0 || n_r < 1 || n_theta > basis.max_n() || n_r > basis.max_k()) {
        throw DomainError("ProfileTable: truncation (" + std::to_string(n_theta) + "," +
                          std::to_string(n_r) + ") exceeds eigenbasis table");
    }
    for (const double r : grid.r) {
        if (!(r > 0.0)) throw DomainError("ProfileTable: grid nodes must satisfy r > 0");
    }
    const std::size_t modes = static_cast<std::size_t>(n_theta + 1) * n_r;
    lambda_.resize(modes);
    for (auto& p : profiles_) p.assign(modes * nq_, 0.0);

#pragma omp parallel for schedule(dynamic, 1)
    for (int m = 0; m < static_cast<int>(modes); ++m) {
        const int n = m / n_r;
        const int k = m % n_r + 1;
        const EigenPair& pair = basis(n, k);
        lambda_[static_cast<std::size_t>(m)] = pair.lambda;
        for (int q = 0; q < nq_; ++q) {
            const double r = grid.r[static_cast<std::size_t>(q)];
            const RadialProfile p = radial_profile(pair, r);
            const std::size_t i = static_cast<std::size_t>(m) * nq_ + q;
            auto set = [&](Component c, double v) { profiles_[static_cast<std::size_t>(c)][i] = v; };
            set(Component::W, p.w);
            set(Component::UR, p.R);
            set(Component::UT, p.T);
            set(Component::DrUr, p.dR);
            set(Component::DthUr, -n * p.R / r);
            set(Component::DrUt, p.dT);
            set(Component::DthUt, n * p.T / r);
            set(Component::GradRT, -(n * p.R + p.T) / r);
            set(Component::GradTT, (n * p.T + p.R) / r);
        }
    }
}

} // namespace vvdisk
