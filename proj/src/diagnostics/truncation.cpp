#include "vvdisk/diagnostics.hpp"

#include "vvdisk/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace vvdisk {

// ============================================================================
// Truncations
// ============================================================================

std::vector<unsigned char> truncation_mask(int n_theta, int n_r, const TruncationSpec& spec,
                                           const std::vector<double>* lambda) {
    if (spec.kind == TruncationKind::Band && spec.L > spec.M) {
        throw DomainError("truncate: band requires L <= M");
    }
    if (spec.kind == TruncationKind::Threshold && lambda == nullptr) {
        throw DomainError("truncate: threshold truncation needs eigenvalues");
    }
    if (spec.N < 0 || spec.L < 0 || spec.M < 0) throw DomainError("truncate: negative bound");
    std::vector<unsigned char> mask(static_cast<std::size_t>(n_theta + 1) * n_r, 0);
    for (int n = 0; n <= n_theta; ++n) {
        for (int k = 1; k <= n_r; ++k) {
            const std::size_t i = static_cast<std::size_t>(n) * n_r + k - 1;
            bool keep = false;
            switch (spec.kind) {
            case TruncationKind::Square:
                keep = n <= spec.N && k <= spec.N;
                break;
            case TruncationKind::Tangential:
                keep = n <= spec.N;
                break;
            case TruncationKind::Threshold:
                keep = (*lambda)[i] < static_cast<double>(spec.N) * spec.N;
                break;
            case TruncationKind::Band:
                keep = (n <= spec.M && k <= spec.M) && !(n <= spec.L && k <= spec.L);
                break;
            }
            mask[i] = keep ? 1 : 0;
        }
    }
    return mask;
}

SpectralCoeffs truncate(const SpectralCoeffs& coeffs, const TruncationSpec& spec,
                        const Eigenbasis* basis) {
    std::vector<double> lambda;
    if (spec.kind == TruncationKind::Threshold) {
        if (basis == nullptr) throw DomainError("truncate: threshold truncation needs the eigenbasis");
        lambda.resize(coeffs.size());
        for (int n = 0; n <= coeffs.n_theta(); ++n) {
            for (int k = 1; k <= coeffs.n_r(); ++k) lambda[coeffs.offset(n, k)] = (*basis)(n, k).lambda;
        }
    }
    const auto mask = truncation_mask(coeffs.n_theta(), coeffs.n_r(), spec, &lambda);
    SpectralCoeffs out = coeffs;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (!mask[i]) out.data()[i] = cplx(0.0, 0.0);
    }
    return out;
}

// ============================================================================
// Schedules
// ============================================================================

int ScheduleSpec::L(double nu) const {
    return static_cast<int>(std::ceil(std::pow(nu, -a) - 1e-12));
}

int ScheduleSpec::M(double nu) const {
    return static_cast<int>(std::ceil(std::pow(nu, -b) - 1e-12));
}

double ScheduleSpec::delta(double nu) const {
    return std::pow(nu, gamma);
}

int ScheduleSpec::L_at_delta(double nu) const {
    return L(delta(nu));
}

void ScheduleSpec::validate() const {
    if (!(a > 0.0 && a < 1.0)) throw ConfigError("schedule: a must lie in (0,1)");
    if (!(b > 1.0)) throw ConfigError("schedule: b must exceed 1");
    if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("schedule: gamma must lie in (0,1)");
    if (!(c > 0.0)) throw ConfigError("schedule: c must be > 0");
}

void ScheduleSpec::validate_at(double nu) const {
    validate();
    if (!(nu > 0.0 && nu < 1.0)) {
        throw ConfigError("schedule invalid at nu = " + std::to_string(nu) + ": need 0 < nu < 1");
    }
    if (!(c * nu < 1.0)) {
        throw ConfigError("schedule invalid at nu = " + std::to_string(nu) +
                          ": layer width c nu must be < 1");
    }
    if (!(delta(nu) < 1.0)) {
        throw ConfigError("schedule invalid at nu = " + std::to_string(nu) + ": delta must be < 1");
    }
}

void validate_sweep(const ScheduleSpec& schedule, const std::vector<double>& nus) {
    if (nus.empty()) throw ConfigError("sweep: the nu list is empty");
    for (std::size_t i = 0; i < nus.size(); ++i) {
        schedule.validate_at(nus[i]);
        if (i == 0) continue;
        const double p = nus[i - 1];
        const double q = nus[i];
        if (!(q < p)) throw ConfigError("sweep: nu values must be strictly decreasing");
        if (q * schedule.L(q) > p * schedule.L(p) * (1.0 + 1e-12)) {
            throw ConfigError("sweep: nu L(nu) increases between nu = " + std::to_string(p) +
                              " and " + std::to_string(q));
        }
        if (q * schedule.M(q) < p * schedule.M(p) * (1.0 - 1e-12)) {
            throw ConfigError("sweep: nu M(nu) decreases between nu = " + std::to_string(p) +
                              " and " + std::to_string(q));
        }
        if (!(schedule.delta(q) < schedule.delta(p)) ||
            !(schedule.delta(q) / q > schedule.delta(p) / p)) {
            throw ConfigError("sweep: need delta -> 0 and delta / nu -> infinity");
        }
    }
}

// ============================================================================
// Names and CSV
// ============================================================================

namespace {

const char* const kConditionNames[] = {"K1", "K2", "K3", "K4", "K5", "K6", "N1", "N2",
                                       "N3", "N4", "N5", "N6", "N7", "W_L", "U_L", "U_tail"};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string to_string(ConditionKind k) {
    return kConditionNames[static_cast<int>(k)];
}

std::vector<ConditionKind> all_condition_kinds() {
    std::vector<ConditionKind> out;
    for (int i = 0; i <= static_cast<int>(ConditionKind::UTail); ++i) {
        out.push_back(static_cast<ConditionKind>(i));
    }
    return out;
}

ConditionKind condition_from_string(const std::string& s) {
    for (const ConditionKind k : all_condition_kinds()) {
        if (to_string(k) == s) return k;
    }
    throw ConfigError("unknown condition kind '" + s + "'");
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("loglog_slope: need >= 2 points");
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0 && y[i] > 0.0)) throw DomainError("loglog_slope: values must be positive");
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

std::string diagnostics_csv(const std::vector<DiagnosticsRow>& rows) {
    std::string out = "nu,kind,value,L,M,delta,c\n";
    for (const auto& r : rows) {
        out += fmt(r.nu) + "," + r.kind + "," + fmt(r.value) + "," + std::to_string(r.L) + "," +
               std::to_string(r.M) + "," + fmt(r.delta) + "," + fmt(r.c) + "\n";
    }
    return out;
}

} // namespace vvdisk
