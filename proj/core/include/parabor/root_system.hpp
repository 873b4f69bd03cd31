// Type A root system data: simple roots, positive roots, fundamental weights,
// all in the sum-zero sublattice of Z^{n+1} (weights rational) under the
// standard scalar product.

#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

namespace parabor {

struct RootSystemA {
    int rank = 0;
    std::vector<std::vector<long>> simple_roots;            // alpha_1..alpha_n in Z^{n+1}
    std::vector<std::vector<long>> positive_roots;          // n(n+1)/2 of them
    std::vector<std::vector<mpq_class>> fundamental_weights;  // (alpha_i, w_j) = delta_ij
};

RootSystemA root_system(int n);

long dot(std::span<const long> a, std::span<const long> b);
mpq_class dot(std::span<const long> a, std::span<const mpq_class> b);
mpq_class dot(std::span<const mpq_class> a, std::span<const mpq_class> b);

}  // namespace parabor
