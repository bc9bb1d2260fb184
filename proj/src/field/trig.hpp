#pragma once

#include "vvdisk/kernels.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace vvdisk::detail {

struct Trig {
    std::vector<double> c;
    std::vector<double> s;

    // Row n holds cos(n theta_p), sin(n theta_p) for p < na.
    Trig(int na, int n_max)
        : c(static_cast<std::size_t>(na) * (n_max + 1)), s(c.size()) {
        std::vector<double> c0(static_cast<std::size_t>(na));
        std::vector<double> s0(c0.size());
        for (int m = 0; m < na; ++m) {
            const double t = 2.0 * std::numbers::pi * m / na;
            c0[static_cast<std::size_t>(m)] = std::cos(t);
            s0[static_cast<std::size_t>(m)] = std::sin(t);
        }
        for (int n = 0; n <= n_max; ++n) {
            for (int p = 0; p < na; ++p) {
                const auto m = static_cast<std::size_t>((static_cast<long>(n) * p) % na);
                c[static_cast<std::size_t>(n) * na + p] = c0[m];
                s[static_cast<std::size_t>(n) * na + p] = s0[m];
            }
        }
    }
    kernels::TrigTable table() const { return {c.data(), s.data()}; }
};

} // namespace vvdisk::detail
