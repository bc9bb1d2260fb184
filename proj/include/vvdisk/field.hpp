#pragma once

/// @file field.hpp
/// Spectral coefficients, polar quadrature grids, synthesis/projection and
/// L2 norms over the disk and over boundary strips Gamma_delta = {1-delta < r < 1}.
///
/// Reality convention: coefficients g_{nk} are stored for n >= 0 with g_{0k}
/// real; the physical field is sum_k g_{0k} phi_{0k} + sum_{n>=1,k} 2 Re(g_{nk} phi_{nk}).

#include "vvdisk/eigenbasis.hpp"

#include <json.hpp>

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace vvdisk {

// ============================================================================
// Coefficients
// ============================================================================

class SpectralCoeffs {
public:
    SpectralCoeffs() = default;
    SpectralCoeffs(int n_theta, int n_r, double time = 0.0);

    int n_theta() const { return n_theta_; }
    int n_r() const { return n_r_; }
    double time() const { return time_; }
    void set_time(double t) { time_ = t; }

    cplx& at(int n, int k);
    const cplx& at(int n, int k) const;

    std::vector<cplx>& data() { return g_; }
    const std::vector<cplx>& data() const { return g_; }
    std::size_t size() const { return g_.size(); }

    /// Zeroes the imaginary part of g_{0k}.
    void enforce_reality();
    bool same_shape(const SpectralCoeffs& other) const {
        return n_theta_ == other.n_theta_ && n_r_ == other.n_r_;
    }

    /// Index of (n,k) in data(): row-major in n, then k.
    std::size_t offset(int n, int k) const {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(n_r_) +
               static_cast<std::size_t>(k - 1);
    }

private:
    int n_theta_ = 0;
    int n_r_ = 0;
    double time_ = 0.0;
    std::vector<cplx> g_;
};

/// {time, n_theta, n_r, re[n][k-1], im[n][k-1]}
nlohmann::json to_json(const SpectralCoeffs& c);
SpectralCoeffs coeffs_from_json(const nlohmann::json& j);

// ============================================================================
// Grids
// ============================================================================

struct PolarGrid {
    std::vector<double> r; ///< Gauss-Legendre nodes mapped to (r_lo, 1)
    std::vector<double> w; ///< weights including the Jacobian r
    int n_angular = 0;     ///< theta_p = 2 pi p / n_angular
    double r_lo = 0.0;

    int n_radial() const { return static_cast<int>(r.size()); }
    double theta(int p) const;
    bool same_as(const PolarGrid& o) const {
        return n_angular == o.n_angular && r == o.r && w == o.w;
    }
};

PolarGrid build_grid(int n_radial, int n_angular, double r_lo);

/// Closed form of int_{r_lo}^1 r J_n(a r)^2 dr.
double bessel_square_integral(int n, double a, double r_lo);

/// Grid whose radial node count doubles (from `start`) until the quadrature
/// of r J_n(alpha r)^2 matches its closed form within 1e-10 (normalised by
/// J_n(alpha)^2) for the extreme modes of the truncation. Throws
/// ResolutionError beyond `max_nodes`.
PolarGrid build_grid_auto(const Eigenbasis& basis, int n_theta, int n_r, int n_angular, double r_lo,
                          int start = 16, int max_nodes = 4096);

// ============================================================================
// Sampled fields
// ============================================================================

enum class Quantity { Vorticity, Velocity, Gradient, TangentialTau, TangentialNormal };

std::string to_string(Quantity q);
Quantity quantity_from_string(const std::string& s);

/// Real radial factor of one field component; the complex factor is 1 or i.
enum class Component { W, UR, UT, DrUr, DthUr, DrUt, DthUt, GradRT, GradTT };
inline constexpr int kComponentCount = 9;

bool component_is_imaginary(Component c);
/// Components of a quantity, in output order. Gradient is (rr, r theta, theta r, theta theta).
std::vector<Component> components_of(Quantity q);

/// Values on grid points [q * n_angular + p] for each component.
template <class T>
struct BasicFieldSample {
    Quantity quantity = Quantity::Vorticity;
    int n_radial = 0;
    int n_angular = 0;
    std::vector<std::vector<T>> values;

    T& operator()(int c, int q, int p) {
        return values[static_cast<std::size_t>(c)][static_cast<std::size_t>(q) * n_angular + p];
    }
    const T& operator()(int c, int q, int p) const {
        return values[static_cast<std::size_t>(c)][static_cast<std::size_t>(q) * n_angular + p];
    }
};

using FieldSample = BasicFieldSample<double>;
using ModeSample = BasicFieldSample<cplx>;

/// Radial factors of every mode of a truncation on a grid.
class ProfileTable {
public:
    ProfileTable(const Eigenbasis& basis, const PolarGrid& grid, int n_theta, int n_r);

    int n_theta() const { return n_theta_; }
    int n_r() const { return n_r_; }
    int n_radial() const { return nq_; }
    const std::vector<double>& lambda() const { return lambda_; }

    /// Pointer to [(n * n_r + k - 1) * n_radial + q].
    const double* component(Component c) const {
        return profiles_[static_cast<std::size_t>(c)].data();
    }

private:
    int n_theta_;
    int n_r_;
    int nq_;
    std::vector<double> lambda_;
    std::array<std::vector<double>, kComponentCount> profiles_;
};

FieldSample synthesize(const SpectralCoeffs& coeffs, const PolarGrid& grid,
                       const ProfileTable& table, Quantity quantity);
FieldSample synthesize(const SpectralCoeffs& coeffs, const PolarGrid& grid,
                       const Eigenbasis& basis, Quantity quantity);

/// g_{nk} = <omega, omega_nk> by quadrature. Warns on stderr when
/// n_theta >= n_angular / 2.
SpectralCoeffs project(const FieldSample& vorticity, const PolarGrid& grid, const ProfileTable& table);

/// Complex samples of one basis mode.
ModeSample sample_mode(const EigenPair& pair, const PolarGrid& grid, Quantity quantity);

// ============================================================================
// Norms and inner products
// ============================================================================

/// Full-disk coefficient identities. Gradient uses ||grad u|| = ||omega||.
/// Tangential quantities are not available on this path.
double norm_l2_squared(const SpectralCoeffs& coeffs, const Eigenbasis& basis, Quantity quantity);

/// Quadrature of sum over components of |value|^2 on the grid's region.
double norm_l2_squared(const FieldSample& sample, const PolarGrid& grid);

template <class T>
cplx inner_product(const BasicFieldSample<T>& a, const BasicFieldSample<T>& b, const PolarGrid& grid);

/// Per-n Gram matrices M^n_{jk} = 2 pi sum_q w_q sum_c P_c(n,j) P_c(n,k) of a
/// quantity over a grid region; cross-n blocks vanish by angular orthogonality.
class GramBlocks {
public:
    GramBlocks(const ProfileTable& table, const PolarGrid& grid, Quantity quantity);

    int n_theta() const { return n_theta_; }
    int n_r() const { return n_r_; }
    const double* block(int n) const {
        return blocks_.data() + static_cast<std::size_t>(n) * n_r_ * n_r_;
    }
    /// Squared L2 norm of the field with these coefficients.
    double quadratic(const SpectralCoeffs& coeffs) const;
    /// Same with coefficients multiplied by a 0/1 mask of equal layout.
    double quadratic(const cplx* g, const unsigned char* mask) const;

private:
    int n_theta_;
    int n_r_;
    std::vector<double> blocks_;
};

} // namespace vvdisk
