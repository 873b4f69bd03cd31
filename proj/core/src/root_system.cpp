#include "parabor/root_system.hpp"

#include <stdexcept>

namespace parabor {

RootSystemA root_system(int n) {
    if (n < 1) throw std::invalid_argument("root_system: rank must be >= 1");
    RootSystemA R;
    R.rank = n;
    const int m = n + 1;
    for (int i = 0; i < n; ++i) {
        std::vector<long> a(m, 0);
        a[i] = 1;
        a[i + 1] = -1;
        R.simple_roots.push_back(std::move(a));
    }
    // positive roots: alpha_i + ... + alpha_j = e_i - e_{j+1}
    for (int len = 1; len <= n; ++len)
        for (int i = 0; i + len <= n; ++i) {
            std::vector<long> r(m, 0);
            r[i] = 1;
            r[i + len] = -1;
            R.positive_roots.push_back(std::move(r));
        }
    // w_j = e_1 + ... + e_j - (j/m)(e_1 + ... + e_m)
    for (int j = 1; j <= n; ++j) {
        std::vector<mpq_class> w(m);
        for (int i = 0; i < m; ++i) {
            w[i] = mpq_class(i < j ? m - j : -j, m);
            w[i].canonicalize();
        }
        R.fundamental_weights.push_back(std::move(w));
    }
    return R;
}

long dot(std::span<const long> a, std::span<const long> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

mpq_class dot(std::span<const long> a, std::span<const mpq_class> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

mpq_class dot(std::span<const mpq_class> a, std::span<const mpq_class> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace parabor
