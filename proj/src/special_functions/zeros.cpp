#include "vvdisk/special_functions.hpp"

#include "vvdisk/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace vvdisk {

namespace {

struct Eval {
    double f;
    double fp;
};

Eval eval(int n, double x) {
    double w[3];
    bessel_j_window(n - 1, n + 1, x, w);
    const double fp = (n == 0) ? -w[2] : 0.5 * (w[0] - w[2]);
    return {w[1], fp};
}

// Root of J_n in (a, b), assuming a sign change. Bisection until the
// bracket is narrow, then Newton kept inside the bracket.
double refine(int n, double a, double b) {
    double fa = eval(n, a).f;
    const double fb = eval(n, b).f;
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw ConvergenceError("bessel_zero: no sign change in bracket for order " +
                               std::to_string(n));
    }
    double x = 0.5 * (a + b);
    for (int it = 0; it < 400; ++it) {
        const Eval e = eval(n, x);
        if (e.f == 0.0) return x;
        if ((e.f > 0.0) == (fa > 0.0)) {
            a = x;
            fa = e.f;
        } else {
            b = x;
        }
        const double width = b - a;
        const double ulp = std::numeric_limits<double>::epsilon() * x;
        if (width <= 2.0 * ulp) return 0.5 * (a + b);
        double next = (e.fp != 0.0) ? x - e.f / e.fp : 0.5 * (a + b);
        if (!(next > a && next < b) || width > 0.25) next = 0.5 * (a + b);
        if (std::abs(next - x) <= ulp) return next;
        x = next;
    }
    throw ConvergenceError("bessel_zero: iteration limit reached for order " + std::to_string(n));
}

} // namespace

ZeroTable::ZeroTable(int max_n, int max_k) : max_n_(max_n), max_k_(max_k) {
    if (max_n < 0 || max_k < 1) throw DomainError("ZeroTable: need max_n >= 0 and max_k >= 1");
    if (max_n > kBesselMaxOrder) throw DomainError("ZeroTable: order bound too large");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    constexpr double pi = std::numbers::pi;

    for (int n = 0; n <= max_n; ++n) {
        const int len = max_k + (max_n - n);
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(len), 0.0);
        const std::vector<double>* prev = n > 0 ? &rows_[static_cast<std::size_t>(n) - 1] : nullptr;
        std::string failure;
#pragma omp parallel for schedule(dynamic, 8)
        for (int k = 1; k <= len; ++k) {
            double a = 0.0;
            double b = 0.0;
            if (n == 0) {
                a = (k - 1) * pi + 0.75 * pi;
                b = (k - 1) * pi + 0.875 * pi;
            } else {
                a = (*prev)[static_cast<std::size_t>(k) - 1];
                b = (*prev)[static_cast<std::size_t>(k)];
            }
            try {
                row[static_cast<std::size_t>(k) - 1] = refine(n, a, b);
            } catch (const std::exception& e) {
#pragma omp critical(vvdisk_zero_failure)
                failure = e.what();
            }
        }
        if (!failure.empty()) throw ConvergenceError(failure);
    }
}

double ZeroTable::operator()(int n, int k) const {
    if (n < 0 || n > max_n_ || k < 1 || k > max_k_) {
        throw DomainError("ZeroTable: (" + std::to_string(n) + "," + std::to_string(k) +
                          ") outside table bounds (" + std::to_string(max_n_) + "," +
                          std::to_string(max_k_) + ")");
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k) - 1];
}

double bessel_zero(int n, int k) {
    if (n < 0 || k < 1) throw DomainError("bessel_zero: need n >= 0 and k >= 1");
    return ZeroTable(n, k)(n, k);
}

} // namespace vvdisk
