#include "vvdisk/solver.hpp"

#include "vvdisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <cstdio>
#include <sstream>
#include <string>

namespace vvdisk {

namespace {

double sum_sq(const SpectralCoeffs& c) {
    double s = 0.0;
    for (const cplx& v : c.data()) s += std::norm(v);
    return s;
}

struct Norms {
    double u2 = 0.0;
    double w2 = 0.0;
};

Norms norms(const SpectralCoeffs& c, const std::vector<double>& lambda) {
    Norms out;
    for (int n = 0; n <= c.n_theta(); ++n) {
        const double mult = n == 0 ? 1.0 : 2.0;
        for (int k = 1; k <= c.n_r(); ++k) {
            const std::size_t i = c.offset(n, k);
            const double a = std::norm(c.data()[i]);
            out.w2 += mult * a;
            out.u2 += mult * a / lambda[i];
        }
    }
    return out;
}

// <f, u> = sum mult Re(conj(g) F).
double forcing_power(const SpectralCoeffs& g, const SpectralCoeffs& f) {
    double s = 0.0;
    for (int n = 0; n <= g.n_theta(); ++n) {
        for (int k = 1; k <= g.n_r(); ++k) {
            const std::size_t i = g.offset(n, k);
            s += (n == 0 ? 1.0 : 2.0) * (std::conj(g.data()[i]) * f.data()[i]).real();
        }
    }
    return s;
}

void validate(const SimConfig& c, const Eigenbasis& basis) {
    if (!(c.nu > 0.0) || !std::isfinite(c.nu)) throw ConfigError("simulate: nu must be > 0");
    if (!(c.t_end > 0.0) || !std::isfinite(c.t_end)) throw ConfigError("simulate: t_end must be > 0");
    if (!(c.dt >= 0.0)) throw ConfigError("simulate: dt must be >= 0 (0 = auto)");
    if (c.n_theta < 0 || c.n_r < 1 || c.n_theta > basis.max_n() || c.n_r > basis.max_k()) {
        throw ConfigError("simulate: truncation outside eigenbasis table");
    }
    if (c.initial.n_theta() != c.n_theta || c.initial.n_r() != c.n_r) {
        throw ConfigError("simulate: initial coefficients do not match the truncation");
    }
    for (int k = 1; k <= c.n_r; ++k) {
        if (c.initial.at(0, k).imag() != 0.0) throw ConfigError("simulate: g_{0k} must be real");
    }
    if (c.sample_every < 1) throw ConfigError("simulate: sample_every must be >= 1");
    for (std::size_t i = 0; i < c.forcing.frames.size(); ++i) {
        const auto& f = c.forcing.frames[i];
        if (f.n_theta() > c.n_theta || f.n_r() > c.n_r) {
            throw ConfigError("simulate: forcing frames must lie within the truncation");
        }
        if (i > 0 && !(f.time() > c.forcing.frames[i - 1].time())) {
            throw ConfigError("simulate: forcing frame times must increase");
        }
    }
}

} // namespace

SpectralCoeffs ForcingSeries::at(double t, int n_theta, int n_r) const {
    SpectralCoeffs out(n_theta, n_r, t);
    if (frames.empty()) return out;
    std::size_t hi = 0;
    while (hi < frames.size() && frames[hi].time() < t) ++hi;
    const SpectralCoeffs* a = nullptr;
    const SpectralCoeffs* b = nullptr;
    double s = 0.0;
    if (hi == 0) {
        a = b = &frames.front();
    } else if (hi == frames.size()) {
        a = b = &frames.back();
    } else {
        a = &frames[hi - 1];
        b = &frames[hi];
        s = (t - a->time()) / (b->time() - a->time());
    }
    for (int n = 0; n <= std::min(n_theta, a->n_theta()); ++n) {
        for (int k = 1; k <= std::min(n_r, a->n_r()); ++k) {
            out.at(n, k) = (1.0 - s) * a->at(n, k) + s * b->at(n, k);
        }
    }
    return out;
}

StepContext make_step_context(const SimConfig& config, const Eigenbasis& basis,
                              const GalerkinModel* model) {
    StepContext ctx;
    ctx.config = &config;
    ctx.model = model;
    ctx.lambda.resize(static_cast<std::size_t>(config.n_theta + 1) * config.n_r);
    for (int n = 0; n <= config.n_theta; ++n) {
        for (int k = 1; k <= config.n_r; ++k) {
            ctx.lambda[static_cast<std::size_t>(n) * config.n_r + k - 1] = basis(n, k).lambda;
        }
    }
    if (config.nonlinear && model == nullptr) {
        throw DomainError("step context: nonlinear run needs a Galerkin model");
    }
    return ctx;
}

SpectralCoeffs step(const SpectralCoeffs& state, const StepContext& ctx, double dt, double* flux_out) {
    const SimConfig& cfg = *ctx.config;
    if (state.n_theta() != cfg.n_theta || state.n_r() != cfg.n_r) {
        throw DomainError("step: state truncation does not match the configuration");
    }
    if (!(dt > 0.0)) throw DomainError("step: dt must be > 0");
    const std::size_t m = state.size();
    const double t0 = state.time();
    const bool nonlinear = cfg.nonlinear && ctx.model != nullptr;
    const bool forced = !cfg.forcing.empty();

    std::vector<double> e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = std::exp(-cfg.nu * ctx.lambda[i] * dt);

    SpectralCoeffs next(cfg.n_theta, cfg.n_r, t0 + dt);
    if (!nonlinear && !forced) {
        for (std::size_t i = 0; i < m; ++i) next.data()[i] = e[i] * state.data()[i];
        if (flux_out != nullptr) *flux_out = 0.0;
        return next;
    }

    // K(g, t) = lambda (F(t) - N(g))
    auto rhs = [&](const SpectralCoeffs& g, double t, double* flux) {
        std::vector<cplx> k(m, cplx(0.0, 0.0));
        if (nonlinear) {
            const std::vector<cplx> nl = ctx.model->nonlinear_coeffs(g);
            if (flux != nullptr) *flux = ctx.model->flux(g, nl);
            for (std::size_t i = 0; i < m; ++i) k[i] -= nl[i];
        }
        if (forced) {
            const SpectralCoeffs f = cfg.forcing.at(t, cfg.n_theta, cfg.n_r);
            for (std::size_t i = 0; i < m; ++i) k[i] += f.data()[i];
        }
        for (std::size_t i = 0; i < m; ++i) k[i] *= ctx.lambda[i];
        return k;
    };

    double flux = 0.0;
    const std::vector<cplx> k1 = rhs(state, t0, &flux);
    SpectralCoeffs mid(cfg.n_theta, cfg.n_r, t0 + dt);
    for (std::size_t i = 0; i < m; ++i) mid.data()[i] = e[i] * (state.data()[i] + dt * k1[i]);
    mid.enforce_reality();
    const std::vector<cplx> k2 = rhs(mid, t0 + dt, nullptr);
    for (std::size_t i = 0; i < m; ++i) {
        next.data()[i] = e[i] * state.data()[i] + 0.5 * dt * (e[i] * k1[i] + k2[i]);
    }
    next.enforce_reality();

    const double before = sum_sq(state);
    const double after = sum_sq(next);
    if (!std::isfinite(after) || (before > 0.0 && after > 100.0 * before)) {
        std::ostringstream msg;
        msg << "step: instability at t = " << t0 << " (dt = " << dt << "): coefficient norm grew from "
            << std::sqrt(before) << " to " << std::sqrt(after);
        throw InstabilityError(msg.str());
    }
    if (flux_out != nullptr) *flux_out = flux;
    return next;
}

SpectralCoeffs exact_linear_solution(const SpectralCoeffs& init, const Eigenbasis& basis, double nu,
                                     double t) {
    if (!(nu > 0.0)) throw DomainError("exact_linear_solution: nu must be > 0");
    if (!(t >= 0.0)) throw DomainError("exact_linear_solution: t must be >= 0");
    if (init.n_theta() > basis.max_n() || init.n_r() > basis.max_k()) {
        throw DomainError("exact_linear_solution: truncation exceeds eigenbasis table");
    }
    SpectralCoeffs out(init.n_theta(), init.n_r(), init.time() + t);
    for (int n = 0; n <= init.n_theta(); ++n) {
        for (int k = 1; k <= init.n_r(); ++k) {
            out.at(n, k) = init.at(n, k) * std::exp(-nu * basis(n, k).lambda * t);
        }
    }
    return out;
}

double auto_time_step(double nu, double lambda_max, double max_speed) {
    double dt = 0.25 / (nu * lambda_max);
    if (max_speed > 0.0) dt = std::min(dt, 0.5 / (std::sqrt(lambda_max) * max_speed));
    return dt;
}

SimTrace simulate(const SimConfig& config, const Eigenbasis& basis) {
    validate(config, basis);
    std::unique_ptr<GalerkinModel> model;
    if (config.nonlinear) {
        model = std::make_unique<GalerkinModel>(basis, config.n_theta, config.n_r, config.n_angular);
    }
    const StepContext ctx = make_step_context(config, basis, model.get());

    SimTrace trace;
    trace.nu = config.nu;
    trace.n_theta = config.n_theta;
    trace.n_r = config.n_r;
    trace.lambda = ctx.lambda;

    SpectralCoeffs state = config.initial;
    state.set_time(0.0);

    const double lambda_max = basis(config.n_theta, config.n_r).lambda;
    const double speed = model ? model->max_speed(state) : 0.0;
    const double dt_bound = auto_time_step(config.nu, lambda_max, speed);
    double dt = config.dt > 0.0 ? config.dt : dt_bound;
    if (dt > dt_bound * (1.0 + 1e-12)) {
        throw ConfigError("simulate: dt = " + std::to_string(dt) + " exceeds the stability bound " +
                          std::to_string(dt_bound));
    }
    const double steps_real = std::ceil(config.t_end / dt - 1e-9);
    if (steps_real > static_cast<double>(config.max_steps)) {
        throw ConfigError("simulate: more than max_steps steps required");
    }
    const auto n_steps = static_cast<std::int64_t>(std::max(1.0, steps_real));
    dt = config.t_end / static_cast<double>(n_steps);
    trace.dt = dt;

    std::vector<double> decay(ctx.lambda.size());
    for (std::size_t i = 0; i < decay.size(); ++i) decay[i] = config.nu * ctx.lambda[i];
    const TimeIntegrator integrator(decay);
    const TimeIntegrator::Functional enstrophy = [&](const cplx* g, double* out) {
        double s = 0.0;
        for (std::size_t i = 0; i < decay.size(); ++i) {
            s += (static_cast<int>(i) < config.n_r ? 1.0 : 2.0) * std::norm(g[i]);
        }
        out[0] = s;
    };

    Norms nm = norms(state, ctx.lambda);
    TraceRow row{0.0, nm.u2, nm.w2, 0.0, 0.0, 0.0};
    trace.rows.push_back(row);
    trace.samples.push_back(state);
    double power = config.forcing.empty()
                       ? 0.0
                       : forcing_power(state, config.forcing.at(0.0, config.n_theta, config.n_r));

    for (std::int64_t s = 1; s <= n_steps; ++s) {
        SpectralCoeffs next;
        double flux = 0.0;
        try {
            next = step(state, ctx, dt, &flux);
        } catch (const std::exception& e) {
            trace.aborted = true;
            trace.failure = e.what();
            if (trace.samples.back().time() != state.time()) trace.samples.push_back(state);
            return trace;
        }
        next.set_time(static_cast<double>(s) * dt);
        double diss = 0.0;
        integrator.integrate_interval(state, next, 1, enstrophy, &diss);
        nm = norms(next, ctx.lambda);
        double next_power = 0.0;
        if (!config.forcing.empty()) {
            next_power = forcing_power(next, config.forcing.at(next.time(), config.n_theta, config.n_r));
        }
        TraceRow r;
        r.time = next.time();
        r.u_l2sq = nm.u2;
        r.omega_l2sq = nm.w2;
        r.energy_input = row.energy_input + dt * (power + next_power);
        r.dissipation = row.dissipation + config.nu * diss;
        r.flux = flux;
        trace.rows.push_back(r);
        row = r;
        power = next_power;
        state = std::move(next);
        if (s % config.sample_every == 0 || s == n_steps) trace.samples.push_back(state);
    }
    return trace;
}

std::string trace_csv(const SimTrace& trace) {
    std::string out = "time,u_l2sq,omega_l2sq,energy_input,dissipation\n";
    char buf[256];
    for (const TraceRow& r : trace.rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.time, r.u_l2sq,
                      r.omega_l2sq, r.energy_input, r.dissipation);
        out += buf;
    }
    return out;
}

} // namespace vvdisk
