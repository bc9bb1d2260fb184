#include "vvdisk/diagnostics.hpp"

#include "vvdisk/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace vvdisk {

namespace {

enum GramId { kLayerVorticity, kLayerGradient, kLayerVelocity, kStripTau, kStripNormal, kGramCount };
enum MaskId { kAll, kSquareL, kBand, kNotSquareL, kNotTangentialL, kNotTangentialLDelta, kNotSquareM, kMaskCount };

constexpr int kStripAngular = 8;

} // namespace

FunctionalEvaluator::FunctionalEvaluator(const Eigenbasis& basis, const SimTrace& trace,
                                         const ScheduleSpec& schedule)
    : trace_(trace), nu_(trace.nu) {
    schedule.validate_at(nu_);
    if (trace.samples.empty()) throw DomainError("kato_functional: empty trace");
    L_ = schedule.L(nu_);
    M_ = schedule.M(nu_);
    L_delta_ = schedule.L_at_delta(nu_);
    delta_ = schedule.delta(nu_);
    layer_ = schedule.c * nu_;

    const int nt = trace.n_theta;
    const int nr = trace.n_r;
    const PolarGrid layer_grid = build_grid_auto(basis, nt, nr, kStripAngular, 1.0 - layer_);
    const PolarGrid strip_grid = build_grid_auto(basis, nt, nr, kStripAngular, 1.0 - delta_);
    const ProfileTable layer_tab(basis, layer_grid, nt, nr);
    const ProfileTable strip_tab(basis, strip_grid, nt, nr);
    grams_.reserve(kGramCount);
    grams_.emplace_back(layer_tab, layer_grid, Quantity::Vorticity);
    grams_.emplace_back(layer_tab, layer_grid, Quantity::Gradient);
    grams_.emplace_back(layer_tab, layer_grid, Quantity::Velocity);
    grams_.emplace_back(strip_tab, strip_grid, Quantity::TangentialTau);
    grams_.emplace_back(strip_tab, strip_grid, Quantity::TangentialNormal);

    masks_.resize(kMaskCount);
    masks_[kAll].assign(static_cast<std::size_t>(nt + 1) * nr, 1);
    masks_[kSquareL] = truncation_mask(nt, nr, TruncationSpec::square(L_));
    masks_[kBand] = truncation_mask(nt, nr, TruncationSpec::band(L_, M_));
    masks_[kNotTangentialL] = truncation_mask(nt, nr, TruncationSpec::tangential(L_));
    masks_[kNotTangentialLDelta] = truncation_mask(nt, nr, TruncationSpec::tangential(L_delta_));
    masks_[kNotSquareL] = masks_[kSquareL];
    masks_[kNotSquareM] = truncation_mask(nt, nr, TruncationSpec::square(M_));
    for (const int id : {kNotTangentialL, kNotTangentialLDelta, kNotSquareL, kNotSquareM}) {
        for (auto& v : masks_[static_cast<std::size_t>(id)]) v = v ? 0 : 1;
    }

    const double nu = nu_;
    const double inv = 1.0 / nu_;
    using K = ConditionKind;
    entries_ = {
        {K::K1, -1, kAll, nu},
        {K::K2, kLayerVorticity, kAll, nu},
        {K::K3, kLayerGradient, kAll, nu},
        {K::K4, kStripTau, kAll, nu},
        {K::K5, kStripNormal, kAll, nu},
        {K::K6, kLayerVelocity, kAll, inv},
        {K::N1, -1, kBand, nu},
        {K::N2, -1, kNotTangentialL, nu},
        {K::N3, kLayerVorticity, kNotSquareL, nu},
        {K::N4, kLayerGradient, kBand, nu},
        {K::N5, kStripTau, kNotTangentialLDelta, nu},
        {K::N6, kStripNormal, kNotTangentialLDelta, nu},
        {K::N7, kLayerVelocity, kBand, inv},
        {K::OmegaLow, kLayerVorticity, kSquareL, nu},
        {K::ULow, kLayerVelocity, kSquareL, inv},
        {K::UTail, kLayerVelocity, kNotSquareM, inv},
    };
}

std::vector<double> FunctionalEvaluator::integrate(int stride) const {
    std::vector<double> decay(trace_.lambda.size());
    for (std::size_t i = 0; i < decay.size(); ++i) decay[i] = nu_ * trace_.lambda[i];
    const TimeIntegrator integrator(decay);
    const int nr = trace_.n_r;
    const int count = static_cast<int>(entries_.size());
    const TimeIntegrator::Functional eval = [&](const cplx* g, double* out) {
        for (int e = 0; e < count; ++e) {
            const Entry& en = entries_[static_cast<std::size_t>(e)];
            const unsigned char* mask = masks_[static_cast<std::size_t>(en.mask)].data();
            double v = 0.0;
            if (en.gram < 0) {
                for (std::size_t i = 0; i < decay.size(); ++i) {
                    if (mask[i]) v += (static_cast<int>(i) < nr ? 1.0 : 2.0) * std::norm(g[i]);
                }
            } else {
                v = grams_[static_cast<std::size_t>(en.gram)].quadratic(g, mask);
            }
            out[e] = v;
        }
    };
    std::vector<double> values = integrator.integrate(trace_.samples, count, eval, stride);
    for (int e = 0; e < count; ++e) values[static_cast<std::size_t>(e)] *= entries_[static_cast<std::size_t>(e)].prefactor;
    return values;
}

std::map<ConditionKind, double> FunctionalEvaluator::evaluate(bool validate) const {
    const std::vector<double> full = integrate(1);
    if (validate && trace_.samples.size() >= 3) {
        const std::vector<double> half = integrate(2);
        for (std::size_t e = 0; e < full.size(); ++e) {
            const double diff = std::abs(full[e] - half[e]);
            if (diff > 0.01 * std::abs(full[e]) + 1e-14) {
                throw ResolutionError("kato_functional: " + to_string(entries_[e].kind) +
                                      " changes by more than 1% under sample halving");
            }
        }
    }
    std::map<ConditionKind, double> out;
    for (std::size_t e = 0; e < full.size(); ++e) out[entries_[e].kind] = std::max(0.0, full[e]);
    return out;
}

double kato_functional(const SimTrace& trace, ConditionKind kind, const ScheduleSpec& schedule,
                       const Eigenbasis& basis) {
    const FunctionalEvaluator ev(basis, trace, schedule);
    return ev.evaluate().at(kind);
}

double vv_gap(const SimTrace& trace, const std::vector<SpectralCoeffs>& reference,
              const Eigenbasis& basis) {
    if (reference.size() != trace.samples.size()) {
        throw DomainError("vv_gap: reference has " + std::to_string(reference.size()) +
                          " samples, trace has " + std::to_string(trace.samples.size()));
    }
    double sup = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const SpectralCoeffs& u = trace.samples[i];
        const SpectralCoeffs& v = reference[i];
        if (std::abs(u.time() - v.time()) > 1e-12 * std::max(1.0, std::abs(u.time()))) {
            throw DomainError("vv_gap: sample-time mismatch at index " + std::to_string(i));
        }
        if (!u.same_shape(v)) throw DomainError("vv_gap: truncation mismatch");
        SpectralCoeffs d = u;
        for (std::size_t j = 0; j < d.size(); ++j) d.data()[j] -= v.data()[j];
        sup = std::max(sup, norm_l2_squared(d, basis, Quantity::Velocity));
    }
    return std::sqrt(sup);
}

std::vector<SpectralCoeffs> steady_reference(const SimTrace& trace) {
    std::vector<SpectralCoeffs> out;
    if (trace.samples.empty()) return out;
    for (const auto& s : trace.samples) {
        SpectralCoeffs c = trace.samples.front();
        c.set_time(s.time());
        out.push_back(std::move(c));
    }
    return out;
}

double tangential_gradient_envelope(const Eigenbasis& basis, int N, int K, double delta) {
    if (N < 1 || K < 1) throw DomainError("tangential_gradient_envelope: need N, K >= 1");
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("tangential_gradient_envelope: delta in (0,1)");
    const PolarGrid grid = build_grid_auto(basis, N, K, kStripAngular, 1.0 - delta);
    const ProfileTable table(basis, grid, N, K);
    const GramBlocks gram(table, grid, Quantity::TangentialTau);
    double best = 0.0;
    for (int m = 1; m <= N; ++m) {
        Eigen::Map<const Eigen::MatrixXd> block(gram.block(m), K, K);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block, Eigen::EigenvaluesOnly);
        best = std::max(best, solver.eigenvalues().maxCoeff());
    }
    return best;
}

} // namespace vvdisk
