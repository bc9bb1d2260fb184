#include "kernel_bodies.hpp"

namespace vvdisk::kernels::omp {

void synthesize(const Shape& s, const TrigTable& t, const cplx* g, const double* prof,
                bool imaginary, double* field) {
#pragma omp parallel for schedule(static)
    for (int q = 0; q < s.nq; ++q) detail::synthesize_row(s, t, g, prof, imaginary, field, q);
}

void analyze(const Shape& s, const TrigTable& t, const double* field, cplx* spectrum) {
#pragma omp parallel for schedule(static)
    for (int q = 0; q < s.nq; ++q) detail::analyze_row(s, t, field, spectrum, q);
}

void project_accumulate(const Shape& s, const double* weights, const double* prof, bool imaginary,
                        const cplx* spectrum, cplx* out) {
    const int modes = (s.n_theta + 1) * s.n_r;
#pragma omp parallel for schedule(static)
    for (int m = 0; m < modes; ++m) {
        detail::project_mode(s, weights, prof, imaginary, spectrum, out, m / s.n_r, m % s.n_r);
    }
}

void gram(const Shape& s, const double* weights, const double* const* profs, int n_comp,
          double* out) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int n = 0; n <= s.n_theta; ++n) detail::gram_block(s, weights, profs, n_comp, out, n);
}

} // namespace vvdisk::kernels::omp
