#pragma once

/// @file special_functions.hpp
/// Bessel functions of the first kind J_n for integer order, their
/// derivatives and positive zeros, and G_alpha(x) = (1 - alpha/x)^x.

#include <vector>

namespace vvdisk {

/// Largest argument accepted by the Bessel routines.
inline constexpr double kBesselMaxArgument = 1.0e4;
/// Largest order accepted by the Bessel routines.
inline constexpr int kBesselMaxOrder = 4096;

/// J_n(x) for n >= 0, 0 <= x <= kBesselMaxArgument.
double bessel_j(int n, double x);

/// J_n'(x) = (J_{n-1}(x) - J_{n+1}(x)) / 2, with J_0' = -J_1.
double bessel_j_prime(int n, double x);

/// J_0(x), ..., J_{n_max}(x) from a single backward recurrence.
std::vector<double> bessel_j_sequence(int n_max, double x);

/// Writes J_m(x) for m = n_lo..n_hi into out[0..n_hi-n_lo].
/// Negative orders use J_{-m} = (-1)^m J_m.
void bessel_j_window(int n_lo, int n_hi, double x, double* out);

/// Positive zeros j_{n,k} of J_n (k-th positive zero, k >= 1) for
/// 0 <= n <= max_n and 1 <= k <= max_k. Immutable after construction.
class ZeroTable {
public:
    ZeroTable(int max_n, int max_k);

    double operator()(int n, int k) const;

    int max_n() const { return max_n_; }
    int max_k() const { return max_k_; }

private:
    int max_n_;
    int max_k_;
    // rows_[n] holds zeros k = 1..max_k + (max_n - n); the extra entries
    // seed the interlacing brackets of higher rows.
    std::vector<std::vector<double>> rows_;
};

/// k-th positive zero of J_n. Builds a small private table; use ZeroTable
/// for repeated queries.
double bessel_zero(int n, int k);

/// G_alpha(x) = (1 - alpha/x)^x for 0 < alpha < 1, x >= 1.
double g_alpha(double alpha, double x);

} // namespace vvdisk
