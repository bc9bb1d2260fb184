#pragma once

#include <vector>

namespace vvdisk {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

GaussRule gauss_legendre(int n);

} // namespace vvdisk
