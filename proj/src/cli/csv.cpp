#include "vvdisk/cli.hpp"

#include "vvdisk/errors.hpp"

#include <cstdio>
#include <fstream>

namespace vvdisk::cli {

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

} // namespace

std::string zeros_csv(int n_max, int k_max) {
    std::string out = "n,k,zero\n";
    if (n_max < 0 || k_max < 1) return out;
    const ZeroTable zeros(n_max, k_max);
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 1; k <= k_max; ++k) {
            out += std::to_string(n) + "," + std::to_string(k) + "," + fmt("%.16g", zeros(n, k)) + "\n";
        }
    }
    return out;
}

std::string basis_csv(const Eigenbasis& basis, int n_max, int k_max) {
    std::string out = "n,k,lambda,alpha,beta,c_norm,d_const\n";
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 1; k <= k_max; ++k) {
            const EigenPair& p = basis(n, k);
            out += std::to_string(n) + "," + std::to_string(k) + "," + fmt("%.17g", p.lambda) + "," +
                   fmt("%.17g", p.alpha) + "," + fmt("%.17g", p.beta) + "," + fmt("%.17g", p.c_norm) +
                   "," + (p.d_const ? fmt("%.17g", *p.d_const) : std::string()) + "\n";
        }
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path.string());
}

} // namespace vvdisk::cli
