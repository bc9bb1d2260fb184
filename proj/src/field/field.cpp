#include "vvdisk/field.hpp"

#include "trig.hpp"
#include "vvdisk/errors.hpp"
#include "vvdisk/kernels.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

namespace vvdisk {

// ============================================================================
// SpectralCoeffs
// ============================================================================

SpectralCoeffs::SpectralCoeffs(int n_theta, int n_r, double time)
    : n_theta_(n_theta), n_r_(n_r), time_(time) {
    if (n_theta < 0 || n_r < 1) throw DomainError("SpectralCoeffs: need n_theta >= 0, n_r >= 1");
    g_.assign(static_cast<std::size_t>(n_theta + 1) * n_r, cplx(0.0, 0.0));
}

cplx& SpectralCoeffs::at(int n, int k) {
    if (n < 0 || n > n_theta_ || k < 1 || k > n_r_) {
        throw DomainError("SpectralCoeffs: mode (" + std::to_string(n) + "," + std::to_string(k) +
                          ") outside truncation");
    }
    return g_[offset(n, k)];
}

const cplx& SpectralCoeffs::at(int n, int k) const {
    if (n < 0 || n > n_theta_ || k < 1 || k > n_r_) {
        throw DomainError("SpectralCoeffs: mode (" + std::to_string(n) + "," + std::to_string(k) +
                          ") outside truncation");
    }
    return g_[offset(n, k)];
}

void SpectralCoeffs::enforce_reality() {
    for (int k = 0; k < n_r_; ++k) g_[static_cast<std::size_t>(k)].imag(0.0);
}

nlohmann::json to_json(const SpectralCoeffs& c) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (int n = 0; n <= c.n_theta(); ++n) {
        nlohmann::json rr = nlohmann::json::array();
        nlohmann::json ii = nlohmann::json::array();
        for (int k = 1; k <= c.n_r(); ++k) {
            rr.push_back(c.at(n, k).real());
            ii.push_back(c.at(n, k).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    return nlohmann::json{{"time", c.time()}, {"n_theta", c.n_theta()}, {"n_r", c.n_r()},
                          {"re", re},         {"im", im}};
}

SpectralCoeffs coeffs_from_json(const nlohmann::json& j) {
    try {
        const int n_theta = j.at("n_theta").get<int>();
        const int n_r = j.at("n_r").get<int>();
        SpectralCoeffs c(n_theta, n_r, j.value("time", 0.0));
        const auto& re = j.at("re");
        const auto& im = j.at("im");
        if (re.size() != static_cast<std::size_t>(n_theta + 1) || im.size() != re.size()) {
            throw ConfigError("coefficient JSON: re/im must have n_theta + 1 rows");
        }
        for (int n = 0; n <= n_theta; ++n) {
            const auto& rr = re[static_cast<std::size_t>(n)];
            const auto& ii = im[static_cast<std::size_t>(n)];
            if (rr.size() != static_cast<std::size_t>(n_r) || ii.size() != rr.size()) {
                throw ConfigError("coefficient JSON: each row must have n_r entries");
            }
            for (int k = 1; k <= n_r; ++k) {
                c.at(n, k) = cplx(rr[static_cast<std::size_t>(k - 1)].get<double>(),
                                  ii[static_cast<std::size_t>(k - 1)].get<double>());
            }
        }
        for (int k = 1; k <= n_r; ++k) {
            if (c.at(0, k).imag() != 0.0) {
                throw ConfigError("coefficient JSON: g_{0k} must be real");
            }
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("coefficient JSON: ") + e.what());
    }
}

// ============================================================================
// Synthesis / projection
// ============================================================================

namespace {

void check_table(const SpectralCoeffs& coeffs, const PolarGrid& grid, const ProfileTable& table) {
    if (coeffs.n_theta() > table.n_theta() || coeffs.n_r() > table.n_r()) {
        throw DomainError("synthesize: truncation exceeds profile table");
    }
    if (grid.n_radial() != table.n_radial()) {
        throw DomainError("synthesize: profile table built for a different grid");
    }
}

// Coefficients embedded into the table's truncation.
std::vector<cplx> embed(const SpectralCoeffs& coeffs, const ProfileTable& table) {
    std::vector<cplx> g(static_cast<std::size_t>(table.n_theta() + 1) * table.n_r(), cplx(0, 0));
    for (int n = 0; n <= coeffs.n_theta(); ++n) {
        for (int k = 1; k <= coeffs.n_r(); ++k) {
            g[static_cast<std::size_t>(n) * table.n_r() + k - 1] = coeffs.at(n, k);
        }
    }
    return g;
}

} // namespace

FieldSample synthesize(const SpectralCoeffs& coeffs, const PolarGrid& grid,
                       const ProfileTable& table, Quantity quantity) {
    check_table(coeffs, grid, table);
    const std::vector<cplx> g = embed(coeffs, table);
    const detail::Trig trig(grid.n_angular, table.n_theta());
    const kernels::Shape shape{table.n_theta(), table.n_r(), grid.n_radial(), grid.n_angular};

    FieldSample out;
    out.quantity = quantity;
    out.n_radial = grid.n_radial();
    out.n_angular = grid.n_angular;
    for (const Component c : components_of(quantity)) {
        std::vector<double> f(static_cast<std::size_t>(shape.nq) * shape.na);
        kernels::omp::synthesize(shape, trig.table(), g.data(), table.component(c),
                                 component_is_imaginary(c), f.data());
        out.values.push_back(std::move(f));
    }
    return out;
}

FieldSample synthesize(const SpectralCoeffs& coeffs, const PolarGrid& grid,
                       const Eigenbasis& basis, Quantity quantity) {
    const ProfileTable table(basis, grid, coeffs.n_theta(), coeffs.n_r());
    return synthesize(coeffs, grid, table, quantity);
}

SpectralCoeffs project(const FieldSample& vorticity, const PolarGrid& grid, const ProfileTable& table) {
    if (vorticity.quantity != Quantity::Vorticity || vorticity.values.size() != 1) {
        throw UnsupportedError("project: expects a vorticity sample");
    }
    if (vorticity.n_radial != grid.n_radial() || vorticity.n_angular != grid.n_angular ||
        table.n_radial() != grid.n_radial()) {
        throw DomainError("project: sample, grid and profile table disagree");
    }
    if (grid.r_lo != 0.0) throw UnsupportedError("project: requires a full-disk grid");
    if (2 * table.n_theta() >= grid.n_angular) {
        std::cerr << "warning: project: angular band " << table.n_theta()
                  << " is not resolved by " << grid.n_angular << " angular nodes (aliasing)\n";
    }
    const kernels::Shape shape{table.n_theta(), table.n_r(), grid.n_radial(), grid.n_angular};
    const detail::Trig trig(grid.n_angular, table.n_theta());
    std::vector<cplx> spectrum(static_cast<std::size_t>(shape.n_theta + 1) * shape.nq);
    kernels::omp::analyze(shape, trig.table(), vorticity.values[0].data(), spectrum.data());
    SpectralCoeffs out(table.n_theta(), table.n_r());
    kernels::omp::project_accumulate(shape, grid.w.data(), table.component(Component::W), false,
                                     spectrum.data(), out.data().data());
    out.enforce_reality();
    return out;
}

ModeSample sample_mode(const EigenPair& pair, const PolarGrid& grid, Quantity quantity) {
    ModeSample out;
    out.quantity = quantity;
    out.n_radial = grid.n_radial();
    out.n_angular = grid.n_angular;
    const auto comps = components_of(quantity);
    out.values.assign(comps.size(), std::vector<cplx>(static_cast<std::size_t>(grid.n_radial()) *
                                                      grid.n_angular));
    const int n = pair.index.n;
    for (int q = 0; q < grid.n_radial(); ++q) {
        const double r = grid.r[static_cast<std::size_t>(q)];
        const RadialProfile p = radial_profile(pair, r);
        for (int a = 0; a < grid.n_angular; ++a) {
            const cplx e = std::polar(1.0, n * grid.theta(a));
            const cplx i(0.0, 1.0);
            for (std::size_t c = 0; c < comps.size(); ++c) {
                cplx v;
                switch (comps[c]) {
                case Component::W: v = p.w * e; break;
                case Component::UR: v = i * p.R * e; break;
                case Component::UT: v = p.T * e; break;
                case Component::DrUr: v = i * p.dR * e; break;
                case Component::DthUr: v = -n * p.R / r * e; break;
                case Component::DrUt: v = p.dT * e; break;
                case Component::DthUt: v = i * (n * p.T / r) * e; break;
                case Component::GradRT: v = -(n * p.R + p.T) / r * e; break;
                case Component::GradTT: v = i * ((n * p.T + p.R) / r) * e; break;
                }
                out(static_cast<int>(c), q, a) = v;
            }
        }
    }
    return out;
}

// ============================================================================
// Norms
// ============================================================================

double norm_l2_squared(const SpectralCoeffs& coeffs, const Eigenbasis& basis, Quantity quantity) {
    if (quantity == Quantity::TangentialTau || quantity == Quantity::TangentialNormal) {
        throw UnsupportedError("norm_l2_squared: tangential gradients need a quadrature grid");
    }
    if (coeffs.n_theta() > basis.max_n() || coeffs.n_r() > basis.max_k()) {
        throw DomainError("norm_l2_squared: truncation exceeds eigenbasis table");
    }
    const bool velocity = quantity == Quantity::Velocity;
    double sum = 0.0;
    for (int n = 0; n <= coeffs.n_theta(); ++n) {
        const double mult = n == 0 ? 1.0 : 2.0;
        for (int k = 1; k <= coeffs.n_r(); ++k) {
            const double a = std::norm(coeffs.at(n, k));
            sum += mult * (velocity ? a / basis(n, k).lambda : a);
        }
    }
    return sum;
}

double norm_l2_squared(const FieldSample& sample, const PolarGrid& grid) {
    if (sample.n_radial != grid.n_radial() || sample.n_angular != grid.n_angular) {
        throw DomainError("norm_l2_squared: sample does not match grid");
    }
    const double da = 2.0 * std::numbers::pi / grid.n_angular;
    double sum = 0.0;
    for (int q = 0; q < grid.n_radial(); ++q) {
        double ring = 0.0;
        for (const auto& comp : sample.values) {
            const double* row = comp.data() + static_cast<std::size_t>(q) * grid.n_angular;
            for (int p = 0; p < grid.n_angular; ++p) ring += row[p] * row[p];
        }
        sum += grid.w[static_cast<std::size_t>(q)] * ring;
    }
    return da * sum;
}

template <class T>
cplx inner_product(const BasicFieldSample<T>& a, const BasicFieldSample<T>& b, const PolarGrid& grid) {
    if (a.n_radial != grid.n_radial() || b.n_radial != grid.n_radial() ||
        a.n_angular != grid.n_angular || b.n_angular != grid.n_angular ||
        a.values.size() != b.values.size()) {
        throw DomainError("inner_product: samples do not match the grid");
    }
    const double da = 2.0 * std::numbers::pi / grid.n_angular;
    cplx sum(0.0, 0.0);
    for (int q = 0; q < grid.n_radial(); ++q) {
        cplx ring(0.0, 0.0);
        for (std::size_t c = 0; c < a.values.size(); ++c) {
            for (int p = 0; p < grid.n_angular; ++p) {
                ring += cplx(a(static_cast<int>(c), q, p)) * std::conj(cplx(b(static_cast<int>(c), q, p)));
            }
        }
        sum += grid.w[static_cast<std::size_t>(q)] * ring;
    }
    return da * sum;
}

template cplx inner_product<double>(const FieldSample&, const FieldSample&, const PolarGrid&);
template cplx inner_product<cplx>(const ModeSample&, const ModeSample&, const PolarGrid&);

// ============================================================================
// Gram blocks
// ============================================================================

GramBlocks::GramBlocks(const ProfileTable& table, const PolarGrid& grid, Quantity quantity)
    : n_theta_(table.n_theta()), n_r_(table.n_r()) {
    if (table.n_radial() != grid.n_radial()) {
        throw DomainError("GramBlocks: profile table built for a different grid");
    }
    std::vector<const double*> profs;
    for (const Component c : components_of(quantity)) profs.push_back(table.component(c));
    const kernels::Shape shape{n_theta_, n_r_, grid.n_radial(), grid.n_angular};
    blocks_.assign(static_cast<std::size_t>(n_theta_ + 1) * n_r_ * n_r_, 0.0);
    kernels::omp::gram(shape, grid.w.data(), profs.data(), static_cast<int>(profs.size()),
                       blocks_.data());
}

double GramBlocks::quadratic(const cplx* g, const unsigned char* mask) const {
    double total = 0.0;
    std::vector<cplx> v(static_cast<std::size_t>(n_r_));
    for (int n = 0; n <= n_theta_; ++n) {
        bool any = false;
        for (int k = 0; k < n_r_; ++k) {
            const std::size_t i = static_cast<std::size_t>(n) * n_r_ + k;
            v[static_cast<std::size_t>(k)] = (mask == nullptr || mask[i]) ? g[i] : cplx(0.0, 0.0);
            any = any || v[static_cast<std::size_t>(k)] != cplx(0.0, 0.0);
        }
        if (!any) continue;
        const double* m = block(n);
        double q = 0.0;
        for (int j = 0; j < n_r_; ++j) {
            const cplx vj = v[static_cast<std::size_t>(j)];
            double row_re = 0.0;
            double row_im = 0.0;
            for (int k = 0; k < n_r_; ++k) {
                row_re += m[j * n_r_ + k] * v[static_cast<std::size_t>(k)].real();
                row_im += m[j * n_r_ + k] * v[static_cast<std::size_t>(k)].imag();
            }
            q += vj.real() * row_re + vj.imag() * row_im;
        }
        total += (n == 0 ? 1.0 : 2.0) * q;
    }
    return total;
}

double GramBlocks::quadratic(const SpectralCoeffs& coeffs) const {
    if (coeffs.n_theta() != n_theta_ || coeffs.n_r() != n_r_) {
        throw DomainError("GramBlocks::quadratic: truncation mismatch");
    }
    return quadratic(coeffs.data().data(), nullptr);
}

} // namespace vvdisk
