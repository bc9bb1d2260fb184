#include "vvdisk/solver.hpp"

#include "vvdisk/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace vvdisk {

namespace {

// Bit-exact across standard libraries: raw engine output to [0,1).
double uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double normal(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform(rng);
    const double u2 = uniform(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace

std::vector<std::string> preset_names() {
    return {"radial-1", "radial-mix", "generic"};
}

SpectralCoeffs make_preset(const std::string& name, int n_theta, int n_r, std::uint64_t seed,
                           double amplitude) {
    SpectralCoeffs c(n_theta, n_r);
    if (name == "radial-1") {
        c.at(0, 1) = 1.0;
    } else if (name == "radial-mix") {
        for (int k = 1; k <= std::min(8, n_r); ++k) c.at(0, k) = 1.0 / k;
    } else if (name == "generic") {
        if (!(amplitude > 0.0)) throw ConfigError("generic preset: amplitude must be > 0");
        std::mt19937_64 rng(seed);
        double norm2 = 0.0;
        for (int n = 0; n <= n_theta; ++n) {
            for (int k = 1; k <= n_r; ++k) {
                const double re = normal(rng);
                const double im = normal(rng);
                const cplx z = cplx(re, n == 0 ? 0.0 : im) / static_cast<double>(n + k);
                c.at(n, k) = z;
                norm2 += (n == 0 ? 1.0 : 2.0) * std::norm(z);
            }
        }
        const double scale = amplitude / std::sqrt(norm2);
        for (auto& v : c.data()) v *= scale;
    } else {
        throw ConfigError("unknown preset '" + name + "' (valid: radial-1, radial-mix, generic)");
    }
    return c;
}

} // namespace vvdisk
