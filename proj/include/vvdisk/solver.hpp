#pragma once

/// @file solver.hpp
/// Galerkin Navier-Stokes in the Stokes eigenbasis:
///   g_p' = -nu lambda_p g_p + lambda_p (F_p - N_p),
/// with N_p = <u.grad u, u_p> and F_p = <f, u_p>.

#include "vvdisk/field.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vvdisk {

// ============================================================================
// Nonlinear term
// ============================================================================

class GalerkinModel {
public:
    /// n_angular = 0 picks the smallest even count above 3 n_theta (at least 8).
    GalerkinModel(const Eigenbasis& basis, int n_theta, int n_r, int n_angular = 0);

    int n_theta() const { return n_theta_; }
    int n_r() const { return n_r_; }
    const PolarGrid& grid() const { return grid_; }
    const ProfileTable& profiles() const { return profiles_; }

    /// N_{nk} = <u.grad u, u_nk> with u.grad u formed pointwise in polar
    /// components (curvature terms included) and projected by quadrature.
    std::vector<cplx> nonlinear_coeffs(const SpectralCoeffs& coeffs) const;

    /// <u.grad u, u> from coefficients and N: sum_k g_0k N_0k + 2 Re sum conj(g) N.
    double flux(const SpectralCoeffs& coeffs, const std::vector<cplx>& n_coeffs) const;

    /// max |u| over the grid.
    double max_speed(const SpectralCoeffs& coeffs) const;

private:
    int n_theta_;
    int n_r_;
    PolarGrid grid_;
    ProfileTable profiles_;
};

// ============================================================================
// Configuration
// ============================================================================

/// Forcing as a piecewise-linear time series of in-band coefficients,
/// clamped outside its time range. Empty means f = 0.
struct ForcingSeries {
    std::vector<SpectralCoeffs> frames;

    bool empty() const { return frames.empty(); }
    SpectralCoeffs at(double t, int n_theta, int n_r) const;
};

struct SimConfig {
    double nu = 0.05;
    double t_end = 1.0;
    double dt = 0.0; ///< 0 selects dt_auto
    int n_theta = 0;
    int n_r = 8;
    SpectralCoeffs initial;
    ForcingSeries forcing;
    bool nonlinear = true;
    int sample_every = 1; ///< keep every m-th step in the trace
    int n_angular = 0;    ///< 0 = automatic
    std::int64_t max_steps = 20'000'000;
};

/// Named initial conditions: "radial-1", "radial-mix", "generic".
/// generic: g_nk = z_nk / (n + k) with seeded complex normal z (real for
/// n = 0), scaled so that ||omega||_{L2} = amplitude.
SpectralCoeffs make_preset(const std::string& name, int n_theta, int n_r, std::uint64_t seed,
                           double amplitude = 0.1);
std::vector<std::string> preset_names();

// ============================================================================
// Time stepping
// ============================================================================

/// Per-step state needed by step().
struct StepContext {
    const SimConfig* config = nullptr;
    const GalerkinModel* model = nullptr; ///< null for linear runs
    std::vector<double> lambda;           ///< per mode, coefficient layout
};

StepContext make_step_context(const SimConfig& config, const Eigenbasis& basis,
                              const GalerkinModel* model);

/// One integrating-factor Heun step from time state.time() to time + dt:
///   g*  = E (g + dt K(g, t)),
///   g'  = E g + dt/2 (E K(g, t) + K(g*, t + dt)),
/// E = exp(-nu lambda dt), K = lambda (F - N). Throws InstabilityError if
/// the coefficient norm grows more than 10x. `flux_out` (optional) receives
/// <u.grad u, u> at the start state.
SpectralCoeffs step(const SpectralCoeffs& state, const StepContext& ctx, double dt,
                    double* flux_out = nullptr);

/// g_nk(t) = g_nk(0) exp(-nu lambda_nk t).
SpectralCoeffs exact_linear_solution(const SpectralCoeffs& init, const Eigenbasis& basis, double nu,
                                     double t);

/// min(0.25 / (nu lambda_max), 0.5 h_min / max|u|), h_min = lambda_max^{-1/2}.
double auto_time_step(double nu, double lambda_max, double max_speed);

struct TraceRow {
    double time = 0.0;
    double u_l2sq = 0.0;
    double omega_l2sq = 0.0;
    double energy_input = 0.0; ///< cumulative 2 int <f, u>
    double dissipation = 0.0;  ///< cumulative nu int ||omega||^2
    double flux = 0.0;         ///< <u.grad u, u> at the step start
};

struct SimTrace {
    double nu = 0.0;
    int n_theta = 0;
    int n_r = 0;
    double dt = 0.0;
    std::vector<double> lambda; ///< per mode, coefficient layout
    std::vector<SpectralCoeffs> samples;
    std::vector<TraceRow> rows; ///< row 0 is t = 0, then one per step
    bool aborted = false;
    std::string failure;
};

SimTrace simulate(const SimConfig& config, const Eigenbasis& basis);

std::string trace_csv(const SimTrace& trace);

// ============================================================================
// Time quadrature between samples
// ============================================================================

/// Integrates functionals of the coefficient path over a trace. Between
/// samples each coefficient follows g(s) = a e^{-c s} + D phi(s), with
/// c = nu lambda, phi(s) = (1 - e^{-c s}) / (1 - e^{-c h}) and D fixed by
/// the end value. This is exact for free viscous decay and for constant
/// forcing; integrals use 8-point Gauss-Legendre panels of width <= 4/c.
class TimeIntegrator {
public:
    /// evaluate(g, out) writes n_values functional values of the coefficient vector g.
    using Functional = std::function<void(const cplx* g, double* out)>;

    explicit TimeIntegrator(std::vector<double> decay);

    /// Integral of each functional over [samples.front().time, samples.back().time],
    /// using samples with stride `stride`.
    std::vector<double> integrate(const std::vector<SpectralCoeffs>& samples, int n_values,
                                  const Functional& evaluate, int stride = 1) const;

    /// Integral over one interval [a.time, b.time].
    void integrate_interval(const SpectralCoeffs& a, const SpectralCoeffs& b, int n_values,
                            const Functional& evaluate, double* acc) const;

private:
    std::vector<double> decay_;
};

} // namespace vvdisk
