#pragma once

// Per-output bodies shared by the serial and OpenMP kernels.

#include "vvdisk/kernels.hpp"

#include <numbers>

namespace vvdisk::kernels::detail {

inline void synthesize_row(const Shape& s, const TrigTable& t, const cplx* g, const double* prof,
                           bool imaginary, double* field, int q) {
    double* row = field + static_cast<std::size_t>(q) * s.na;
    double base = 0.0;
    // n = 0: the imaginary factor would give a purely imaginary term, which
    // the reality convention excludes; only the real part survives.
    for (int k = 0; k < s.n_r; ++k) {
        const double p = prof[static_cast<std::size_t>(k) * s.nq + q];
        base += imaginary ? -g[k].imag() * p : g[k].real() * p;
    }
    for (int p = 0; p < s.na; ++p) row[p] = base;
    for (int n = 1; n <= s.n_theta; ++n) {
        double re = 0.0;
        double im = 0.0;
        const cplx* gn = g + static_cast<std::size_t>(n) * s.n_r;
        const double* pn = prof + static_cast<std::size_t>(n) * s.n_r * s.nq;
        for (int k = 0; k < s.n_r; ++k) {
            const double p = pn[static_cast<std::size_t>(k) * s.nq + q];
            re += gn[k].real() * p;
            im += gn[k].imag() * p;
        }
        if (imaginary) {
            const double tmp = re;
            re = -im;
            im = tmp;
        }
        if (re == 0.0 && im == 0.0) continue;
        re *= 2.0;
        im *= 2.0;
        const double* cn = t.cos_tab + static_cast<std::size_t>(n) * s.na;
        const double* sn = t.sin_tab + static_cast<std::size_t>(n) * s.na;
        for (int p = 0; p < s.na; ++p) row[p] += re * cn[p] - im * sn[p];
    }
}

inline void analyze_row(const Shape& s, const TrigTable& t, const double* field, cplx* spectrum,
                        int q) {
    const double* row = field + static_cast<std::size_t>(q) * s.na;
    const double scale = 2.0 * std::numbers::pi / s.na;
    for (int n = 0; n <= s.n_theta; ++n) {
        double re = 0.0;
        double im = 0.0;
        const double* cn = t.cos_tab + static_cast<std::size_t>(n) * s.na;
        const double* sn = t.sin_tab + static_cast<std::size_t>(n) * s.na;
        for (int p = 0; p < s.na; ++p) {
            re += row[p] * cn[p];
            im -= row[p] * sn[p];
        }
        spectrum[static_cast<std::size_t>(n) * s.nq + q] = cplx(re * scale, im * scale);
    }
}

inline void project_mode(const Shape& s, const double* weights, const double* prof, bool imaginary,
                         const cplx* spectrum, cplx* out, int n, int k) {
    const std::size_t mode = static_cast<std::size_t>(n) * s.n_r + k;
    const double* pk = prof + mode * s.nq;
    const cplx* sn = spectrum + static_cast<std::size_t>(n) * s.nq;
    double re = 0.0;
    double im = 0.0;
    for (int q = 0; q < s.nq; ++q) {
        const double wp = weights[q] * pk[q];
        re += wp * sn[q].real();
        im += wp * sn[q].imag();
    }
    // conj(i) * (re + i im) = im - i re
    out[mode] += imaginary ? cplx(im, -re) : cplx(re, im);
}

inline void gram_block(const Shape& s, const double* weights, const double* const* profs,
                       int n_comp, double* out, int n) {
    const double two_pi = 2.0 * std::numbers::pi;
    double* block = out + static_cast<std::size_t>(n) * s.n_r * s.n_r;
    for (int j = 0; j < s.n_r; ++j) {
        for (int k = j; k < s.n_r; ++k) {
            double acc = 0.0;
            for (int c = 0; c < n_comp; ++c) {
                const double* pj = profs[c] + (static_cast<std::size_t>(n) * s.n_r + j) * s.nq;
                const double* pk = profs[c] + (static_cast<std::size_t>(n) * s.n_r + k) * s.nq;
                for (int q = 0; q < s.nq; ++q) acc += weights[q] * pj[q] * pk[q];
            }
            block[j * s.n_r + k] = two_pi * acc;
            block[k * s.n_r + j] = two_pi * acc;
        }
    }
}

} // namespace vvdisk::kernels::detail
