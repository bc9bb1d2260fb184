#pragma once

/// @file kernels.hpp
/// Hot loops of the spectral transforms. Each kernel has a serial reference
/// and an OpenMP version; both use the same per-output summation order, so
/// their results are bitwise identical.
///
/// Layouts: coefficients g[n * n_r + k - 1]; profiles
/// P[(n * n_r + k - 1) * nq + q]; fields F[q * na + p]; angular spectra
/// S[n * nq + q].

#include <complex>

namespace vvdisk::kernels {

using cplx = std::complex<double>;

struct Shape {
    int n_theta = 0;
    int n_r = 0;
    int nq = 0; ///< radial nodes
    int na = 0; ///< angular nodes
};

/// cos(n theta_p), sin(n theta_p) at [n * na + p] for 0 <= n <= n_theta.
struct TrigTable {
    const double* cos_tab = nullptr;
    const double* sin_tab = nullptr;
};

#define VVDISK_KERNEL_DECLS                                                                        \
    /* F = Re S_0 + 2 sum_{n>=1} Re(S_n e^{in theta}), S_n(q) = f sum_k g_nk P_nk(q),           \
       f = i when imaginary. */                                                                    \
    void synthesize(const Shape& s, const TrigTable& t, const cplx* g, const double* prof,          \
                    bool imaginary, double* field);                                                \
    /* S_n(q) = (2 pi / na) sum_p F(q,p) e^{-in theta_p}. */                                      \
    void analyze(const Shape& s, const TrigTable& t, const double* field, cplx* spectrum);          \
    /* out_nk += conj(f) sum_q w_q P_nk(q) S_n(q). */                                              \
    void project_accumulate(const Shape& s, const double* weights, const double* prof,             \
                            bool imaginary, const cplx* spectrum, cplx* out);                      \
    /* Per-n Gram blocks 2 pi sum_q w_q sum_c P_c,nj P_c,nk into out[n * n_r^2 + j * n_r + k]. */ \
    void gram(const Shape& s, const double* weights, const double* const* profs, int n_comp,       \
              double* out);

namespace serial {
VVDISK_KERNEL_DECLS
} // namespace serial

namespace omp {
VVDISK_KERNEL_DECLS
} // namespace omp

#undef VVDISK_KERNEL_DECLS

} // namespace vvdisk::kernels
