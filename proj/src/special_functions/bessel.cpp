#include "vvdisk/special_functions.hpp"

#include "vvdisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vvdisk {

namespace {

void check_argument(int n, double x) {
    if (!(x >= 0.0) || x > kBesselMaxArgument) {
        throw DomainError("bessel: argument " + std::to_string(x) + " outside [0, " +
                          std::to_string(kBesselMaxArgument) + "]");
    }
    if (n > kBesselMaxOrder) {
        throw DomainError("bessel: order " + std::to_string(n) + " exceeds " +
                          std::to_string(kBesselMaxOrder));
    }
}

// Ascending series, used for x < 1 where it converges fast and without
// cancellation.
double series(int n, double x) {
    const double h = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= n; ++i) {
        term *= h / i;
        if (term == 0.0) return 0.0;
    }
    const double q = -h * h;
    double sum = term;
    for (int j = 1; j < 60; ++j) {
        term *= q / (static_cast<double>(j) * (j + n));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Miller backward recurrence normalised by J_0 + 2 sum J_{2k} = 1.
void miller(int n_max, double x, double* out) {
    const double top = std::max(static_cast<double>(n_max), x);
    int m_start = static_cast<int>(std::ceil(top + 20.0 + std::sqrt(40.0 * top)));
    m_start += m_start % 2;

    constexpr double kBig = 1e250;
    constexpr double kRescale = 1e-250;

    double jp1 = 0.0;
    double j = 1e-30;
    double sum = 0.0;
    for (int m = m_start; m > 0; --m) {
        if (m <= n_max) out[m] = j;
        if (m % 2 == 0) sum += 2.0 * j;
        const double jm1 = (2.0 * m / x) * j - jp1;
        jp1 = j;
        j = jm1;
        if (std::abs(j) > kBig) {
            j *= kRescale;
            jp1 *= kRescale;
            sum *= kRescale;
            for (int i = m; i <= n_max; ++i) out[i] *= kRescale;
        }
    }
    out[0] = j;
    sum += j;
    const double inv = 1.0 / sum;
    for (int i = 0; i <= n_max; ++i) out[i] *= inv;
}

void sequence_into(int n_max, double x, double* out) {
    if (x == 0.0) {
        out[0] = 1.0;
        for (int i = 1; i <= n_max; ++i) out[i] = 0.0;
        return;
    }
    if (x < 1.0) {
        for (int i = 0; i <= n_max; ++i) out[i] = series(i, x);
        return;
    }
    miller(n_max, x, out);
}

} // namespace

std::vector<double> bessel_j_sequence(int n_max, double x) {
    if (n_max < 0) throw DomainError("bessel_j_sequence: negative n_max");
    check_argument(n_max, x);
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    sequence_into(n_max, x, out.data());
    return out;
}

void bessel_j_window(int n_lo, int n_hi, double x, double* out) {
    if (n_hi < n_lo) throw DomainError("bessel_j_window: empty order range");
    const int top = std::max(std::abs(n_lo), std::abs(n_hi));
    check_argument(top, x);
    double local[64];
    std::vector<double> heap;
    double* seq = local;
    if (top >= 64) {
        heap.resize(static_cast<std::size_t>(top) + 1);
        seq = heap.data();
    }
    sequence_into(top, x, seq);
    for (int m = n_lo; m <= n_hi; ++m) {
        const int a = std::abs(m);
        const double v = seq[a];
        out[m - n_lo] = (m < 0 && (a % 2 == 1)) ? -v : v;
    }
}

double bessel_j(int n, double x) {
    if (n < 0) throw DomainError("bessel_j: negative order");
    double v = 0.0;
    bessel_j_window(n, n, x, &v);
    return v;
}

double bessel_j_prime(int n, double x) {
    if (n < 0) throw DomainError("bessel_j_prime: negative order");
    double w[3];
    bessel_j_window(n - 1, n + 1, x, w);
    if (n == 0) return -w[2];
    return 0.5 * (w[0] - w[2]);
}

double g_alpha(double alpha, double x) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("g_alpha: alpha must lie in (0,1)");
    if (!(x >= 1.0) || !std::isfinite(x)) throw DomainError("g_alpha: x must be >= 1");
    return std::exp(x * std::log1p(-alpha / x));
}

} // namespace vvdisk
