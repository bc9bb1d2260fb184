#include "kernel_bodies.hpp"

namespace vvdisk::kernels::serial {

void synthesize(const Shape& s, const TrigTable& t, const cplx* g, const double* prof,
                bool imaginary, double* field) {
    for (int q = 0; q < s.nq; ++q) detail::synthesize_row(s, t, g, prof, imaginary, field, q);
}

void analyze(const Shape& s, const TrigTable& t, const double* field, cplx* spectrum) {
    for (int q = 0; q < s.nq; ++q) detail::analyze_row(s, t, field, spectrum, q);
}

void project_accumulate(const Shape& s, const double* weights, const double* prof, bool imaginary,
                        const cplx* spectrum, cplx* out) {
    for (int n = 0; n <= s.n_theta; ++n) {
        for (int k = 0; k < s.n_r; ++k) {
            detail::project_mode(s, weights, prof, imaginary, spectrum, out, n, k);
        }
    }
}

void gram(const Shape& s, const double* weights, const double* const* profs, int n_comp,
          double* out) {
    for (int n = 0; n <= s.n_theta; ++n) detail::gram_block(s, weights, profs, n_comp, out, n);
}

} // namespace vvdisk::kernels::serial
