#pragma once

/// @file eigenbasis.hpp
/// Stokes eigenpairs of the unit disk, normalised to be orthonormal in V.
///
/// Mode (n,k): alpha = j_{n+1,k}, lambda = alpha^2, and
///   omega_nk = w(r) e^{in theta}
///   u_nk     = i R(r) e^{in theta} e_r + T(r) e^{in theta} e_theta.
/// The sign is fixed so that omega_nk(1, 0) > 0.

#include "vvdisk/special_functions.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace vvdisk {

using cplx = std::complex<double>;

/// Default table bounds for eigenpairs.
inline constexpr int kDefaultBasisMaxN = 128;
inline constexpr int kDefaultBasisMaxK = 128;

struct EigenIndex {
    int n = 0; ///< angular frequency >= 0
    int k = 1; ///< radial index >= 1
};

struct EigenPair {
    EigenIndex index;
    double lambda = 0.0;
    double alpha = 0.0; ///< j_{n+1,k}
    double beta = 0.0;  ///< j_{n,k}
    double c_norm = 0.0; ///< 1 / (sqrt(pi) |J_n(alpha)|)
    std::optional<double> d_const; ///< -alpha^2 J_n(alpha) / n, n >= 1
    double j_n_alpha = 0.0; ///< signed J_n(alpha)
};

EigenPair make_eigen_pair(const ZeroTable& zeros, int n, int k);

/// Eigenpair (n,k) computed from a private zero table.
EigenPair eigen_pair(int n, int k);

/// Immutable table of eigenpairs for 0 <= n <= max_n, 1 <= k <= max_k.
class Eigenbasis {
public:
    Eigenbasis(int max_n = kDefaultBasisMaxN, int max_k = kDefaultBasisMaxK);

    const EigenPair& operator()(int n, int k) const;
    int max_n() const { return max_n_; }
    int max_k() const { return max_k_; }
    /// Zeros j_{n,k} for n <= max_n + 1, k <= max_k + 1.
    const ZeroTable& zeros() const { return zeros_; }

private:
    int max_n_;
    int max_k_;
    ZeroTable zeros_;
    std::vector<EigenPair> pairs_;
};

/// Real radial factors of a mode at one radius.
struct RadialProfile {
    double w = 0.0;  ///< vorticity
    double R = 0.0;  ///< u^r = i R e^{in theta}
    double T = 0.0;  ///< u^theta = T e^{in theta}
    double dR = 0.0; ///< dR/dr (NaN at r = 0)
    double dT = 0.0; ///< dT/dr (NaN at r = 0)
};

RadialProfile radial_profile(const EigenPair& pair, double r);

struct PolarVector {
    cplx r;
    cplx theta;
};

/// Polar velocity gradient. d_theta_* are (1/r) d/dtheta.
struct PolarGradient {
    cplx d_r_ur;
    cplx d_theta_ur;
    cplx d_r_ut;
    cplx d_theta_ut;
    cplx ur_over_r;
    cplx ut_over_r;

    cplx rr() const { return d_r_ur; }
    cplx rt() const { return d_theta_ur - ut_over_r; }
    cplx tr() const { return d_r_ut; }
    cplx tt() const { return d_theta_ut + ur_over_r; }
    cplx divergence() const { return rr() + tt(); }
    cplx curl() const { return tr() - rt(); }
};

cplx vorticity_eval(const EigenPair& pair, double r, double theta);
PolarVector velocity_eval(const EigenPair& pair, double r, double theta);
/// Requires 0 < r <= 1.
PolarGradient velocity_gradient_eval(const EigenPair& pair, double r, double theta);

} // namespace vvdisk
