#pragma once

/// @file diagnostics.hpp
/// Frequency truncations, Kato-type boundary-layer functionals, the
/// vanishing-viscosity gap, and numerical checks of the Bessel/eigenfunction
/// lemmas used by the vanishing-viscosity arguments.

#include "vvdisk/solver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vvdisk {

// ============================================================================
// Truncations
// ============================================================================

enum class TruncationKind { Square, Tangential, Threshold, Band };

struct TruncationSpec {
    TruncationKind kind = TruncationKind::Square;
    int N = 0; ///< square, tangential, threshold (lambda < N^2)
    int L = 0; ///< band lower
    int M = 0; ///< band upper

    static TruncationSpec square(int n) { return {TruncationKind::Square, n, 0, 0}; }
    static TruncationSpec tangential(int n) { return {TruncationKind::Tangential, n, 0, 0}; }
    static TruncationSpec threshold(int n) { return {TruncationKind::Threshold, n, 0, 0}; }
    static TruncationSpec band(int l, int m) { return {TruncationKind::Band, 0, l, m}; }
};

/// 1 where (n,k) is kept; coefficient layout. Threshold needs lambda per mode.
std::vector<unsigned char> truncation_mask(int n_theta, int n_r, const TruncationSpec& spec,
                                           const std::vector<double>* lambda = nullptr);

/// Zeroes coefficients that `spec` drops. band(L,M) gives u^M - u^L.
SpectralCoeffs truncate(const SpectralCoeffs& coeffs, const TruncationSpec& spec,
                        const Eigenbasis* basis = nullptr);

// ============================================================================
// Schedules
// ============================================================================

/// L = ceil(nu^-a), M = ceil(nu^-b), delta = nu^gamma, layer width c nu.
struct ScheduleSpec {
    double a = 0.5;
    double b = 1.5;
    double gamma = 0.5;
    double c = 1.0;

    int L(double nu) const;
    int M(double nu) const;
    double delta(double nu) const;
    /// L evaluated at the strip width delta(nu).
    int L_at_delta(double nu) const;

    /// Exponent ranges: a in (0,1), b > 1, gamma in (0,1), c > 0.
    void validate() const;
    /// Layer widths c nu and delta(nu) must be < 1.
    void validate_at(double nu) const;
};

/// nu list positive and strictly decreasing; nu L(nu) nonincreasing and
/// nu M(nu) nondecreasing along it; delta -> 0 and delta / nu increasing.
void validate_sweep(const ScheduleSpec& schedule, const std::vector<double>& nus);

// ============================================================================
// Functionals
// ============================================================================

/// K1..K6 and N1..N7 are the thirteen conditions. The last three are the
/// pieces of the triangle-inequality decompositions:
///   OmegaLow  = nu int ||omega^L||^2 on Gamma_{c nu}
///   ULow      = (1/nu) int ||u^L||^2 on Gamma_{c nu}
///   UTail     = (1/nu) int ||u - u^M||^2 on Gamma_{c nu}
enum class ConditionKind { K1, K2, K3, K4, K5, K6, N1, N2, N3, N4, N5, N6, N7, OmegaLow, ULow, UTail };

std::string to_string(ConditionKind k);
ConditionKind condition_from_string(const std::string& s);
std::vector<ConditionKind> all_condition_kinds();

/// Evaluates the functionals on one trace. Boundary strips get their own
/// auto-validated quadrature grids.
class FunctionalEvaluator {
public:
    FunctionalEvaluator(const Eigenbasis& basis, const SimTrace& trace, const ScheduleSpec& schedule);

    /// All kinds, integrated over the trace. With validate = true each value
    /// is recomputed on every other sample and a relative change above 1%
    /// raises ResolutionError.
    std::map<ConditionKind, double> evaluate(bool validate = true) const;

    int L() const { return L_; }
    int M() const { return M_; }
    double delta() const { return delta_; }
    double layer() const { return layer_; }

private:
    struct Entry {
        ConditionKind kind;
        int gram;          ///< -1 = disk vorticity via Parseval
        int mask;
        double prefactor;
    };

    const SimTrace& trace_;
    double nu_;
    int L_;
    int M_;
    int L_delta_;
    double delta_;
    double layer_;
    std::vector<GramBlocks> grams_;
    std::vector<std::vector<unsigned char>> masks_;
    std::vector<Entry> entries_;

    std::vector<double> integrate(int stride) const;
};

double kato_functional(const SimTrace& trace, ConditionKind kind, const ScheduleSpec& schedule,
                       const Eigenbasis& basis);

/// sup over samples of ||u(t) - ubar(t)||_{L2(disk)}.
double vv_gap(const SimTrace& trace, const std::vector<SpectralCoeffs>& reference,
              const Eigenbasis& basis);

/// Steady Euler reference ubar = u(0) at the trace's sample times.
std::vector<SpectralCoeffs> steady_reference(const SimTrace& trace);

/// Operator-norm envelope of ||grad_tau u_tau||^2 on Gamma_delta over
/// V-unit fields in the tangential truncation n <= N (radial index k <= K):
/// max over 1 <= m <= N of the largest eigenvalue of the Gram matrix of
/// m T_{mk}(r) / r on Gamma_delta.
double tangential_gradient_envelope(const Eigenbasis& basis, int N, int K, double delta);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct DiagnosticsRow {
    double nu = 0.0;
    std::string kind;
    double value = 0.0;
    int L = 0;
    int M = 0;
    double delta = 0.0;
    double c = 0.0;
};

/// Columns: nu,kind,value,L,M,delta,c
std::string diagnostics_csv(const std::vector<DiagnosticsRow>& rows);

// ============================================================================
// Lemma verification
// ============================================================================

struct LemmaRanges {
    int n_max = 50;
    int k_max = 50;
    int x_samples = 200;     ///< interior points of (beta/alpha, 1)
    int delta_samples = 40;  ///< strip widths per mode
    double tolerance = 1e-9;
    /// delta window of L2omegaGammaBoundGeneral in units of lambda_{n1}^{-1/2}.
    double general_window = 6.283185307179586;
    /// C_2 of L2uGammaBoundGeneral, and the number of halvings of its delta.
    double c2 = 0.5;
    int halvings = 10;
    /// JRatios over k <= n only (default: all k).
    bool jratios_k_le_n = false;
};

struct LemmaRow {
    std::string lemma;
    int n = -1; ///< -1 = not applicable
    int k = -1;
    double param = 0.0;
    bool has_param = false;
    double observed = 0.0;
    std::optional<double> bound;
    std::optional<double> margin;
};

struct LemmaReport {
    std::string lemma;
    std::string range;
    bool envelope = false; ///< constant reported, no pass/fail
    bool pass = true;
    double worst_margin = 0.0;
    int worst_n = -1;
    int worst_k = -1;
    double worst_param = 0.0;
    std::optional<double> empirical_constant;
    std::optional<double> slope;     ///< pooled log-log slope (L2uGammaBoundGeneral)
    std::optional<double> slope_min;
    std::optional<double> slope_max;
    std::vector<LemmaRow> rows;
};

std::vector<std::string> lemma_ids();

/// Scans one lemma. `basis` must cover n_max + 1, k_max; one is built if null.
LemmaReport verify_lemma(const std::string& id, const LemmaRanges& ranges,
                         const Eigenbasis* basis = nullptr);

/// Columns: lemma,n,k,param,observed,bound,margin
std::string lemma_csv(const std::vector<LemmaReport>& reports);
/// Columns: lemma,status,worst_margin,n,k,param,constant,slope
std::string lemma_summary_csv(const std::vector<LemmaReport>& reports);

} // namespace vvdisk
