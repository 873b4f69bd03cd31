#include "parabor/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parabor {

bool Lattice::is_even() const {
    for (int i = 0; i < rank(); ++i) {
        if (gram[i][i].get_den() != 1 || mpz_class(gram[i][i].get_num() % 2) != 0) return false;
        for (int j = 0; j < rank(); ++j)
            if (gram[i][j].get_den() != 1) return false;
    }
    return true;
}

mpq_class Lattice::inner(std::span<const long> x, std::span<const long> y) const {
    if (static_cast<int>(x.size()) != rank() || static_cast<int>(y.size()) != rank())
        throw std::invalid_argument("Lattice::inner: dimension mismatch");
    mpq_class s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        mpq_class row = 0;
        for (int j = 0; j < rank(); ++j)
            if (y[j] != 0) row += gram[i][j] * y[j];
        s += row * x[i];
    }
    return s;
}

mpq_class Lattice::det() const {
    // fraction-free-ish Gaussian elimination with exact rationals
    auto a = gram;
    int n = rank();
    mpq_class d = 1;
    for (int i = 0; i < n; ++i) {
        int p = i;
        while (p < n && a[p][i] == 0) ++p;
        if (p == n) return 0;
        if (p != i) {
            std::swap(a[p], a[i]);
            d = -d;
        }
        d *= a[i][i];
        for (int r = i + 1; r < n; ++r) {
            mpq_class f = a[r][i] / a[i][i];
            for (int c = i; c < n; ++c) a[r][c] -= f * a[i][c];
        }
    }
    return d;
}

Lattice cartan_a(int n) {
    Lattice L;
    L.label = "A" + std::to_string(n);
    L.gram.assign(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) {
        L.gram[i][i] = 2;
        if (i + 1 < n) {
            L.gram[i][i + 1] = -1;
            L.gram[i + 1][i] = -1;
        }
    }
    return L;
}

Lattice a_dual_scaled(int n) {
    Lattice L;
    long m = n + 1;
    L.label = "A" + std::to_string(n) + "v(" + std::to_string(m) + ")";
    L.gram.assign(n, std::vector<mpq_class>(n, 0));
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) L.gram[i - 1][j - 1] = m * std::min(i, j) - i * j;
    return L;
}

Lattice a_dual_grid(int n) {
    Lattice L = cartan_a(n);
    long m = n + 1;
    L.label = "(1/" + std::to_string(m) + ")A" + std::to_string(n);
    for (auto& row : L.gram)
        for (auto& v : row) {
            v /= m;
        }
    return L;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    Lattice L;
    L.label = a.label + "+" + b.label;
    int n = a.rank() + b.rank();
    L.gram.assign(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) L.gram[i][j] = a.gram[i][j];
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) L.gram[a.rank() + i][a.rank() + j] = b.gram[i][j];
    return L;
}

long isqrt_long(long x) {
    if (x < 0) throw std::domain_error("isqrt_long: negative");
    if (x == 0) return 0;
    long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r > x / r) --r;
    while ((r + 1) <= x / (r + 1)) ++r;
    return r;
}

namespace {

// G = U^T D U with U unit upper triangular, D positive diagonal.
struct LDL {
    std::vector<mpq_class> D;
    std::vector<std::vector<mpq_class>> U;
};

LDL ldl_decompose(const Lattice& L) {
    int n = L.rank();
    LDL out;
    out.D.assign(n, 0);
    out.U.assign(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) out.U[i][i] = 1;
    for (int i = 0; i < n; ++i) {
        mpq_class d = L.gram[i][i];
        for (int k = 0; k < i; ++k) d -= out.D[k] * out.U[k][i] * out.U[k][i];
        if (d <= 0) throw std::domain_error("lattice is not positive definite");
        out.D[i] = d;
        for (int j = i + 1; j < n; ++j) {
            mpq_class u = L.gram[i][j];
            for (int k = 0; k < i; ++k) u -= out.D[k] * out.U[k][i] * out.U[k][j];
            out.U[i][j] = u / d;
        }
    }
    return out;
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    l = a / g * b;
    return l;
}

template <class Z>
Z isqrt_z(const Z& x);

template <>
long isqrt_z<long>(const long& x) {
    return isqrt_long(x);
}

template <>
mpz_class isqrt_z<mpz_class>(const mpz_class& x) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

template <class Z>
long to_long(const Z& x);
template <>
long to_long<long>(const long& x) {
    return x;
}
template <>
long to_long<mpz_class>(const mpz_class& x) {
    return x.get_si();
}

// floor(a/b), b > 0
template <class Z>
Z fdiv(const Z& a, const Z& b) {
    if constexpr (std::is_same_v<Z, long>) {
        long q = a / b;
        if ((a % b) != 0 && a < 0) --q;
        return q;
    } else {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
}

// Recursive Fincke--Pohst over exact scaled integers.
//   Q(x) = sum_i D_i (x_i + sum_{j>i} U_ij x_j)^2 <= B
// with w_i = Lambda D_i / Delta^2 integral, du[i][j] = Delta U_ij integral,
// budgets tracked as R = Lambda(B - partial).
template <class Z>
struct Enumerator {
    int n;
    Z delta;
    std::vector<Z> w;
    std::vector<std::vector<Z>> du;
    std::vector<std::vector<Z>> sigma;  // sigma[i][j] = sum_{k>=j} du[i][k] x_k
    std::vector<long> x;
    const std::function<void(std::span<const long>, const mpq_class&)>* visit;
    mpq_class lambda_q;  // Lambda as a rational, for exact norms
    Z r0;

    void run() {
        descend(n - 1, r0);
    }

    void descend(int i, const Z& budget) {
        if (i < 0) {
            bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
            if (!zero) {
                mpq_class nrm = mpq_class(mpz_class((r0 - budget))) / lambda_q;
                nrm.canonicalize();
                (*visit)(std::span<const long>(x), nrm);
            }
            return;
        }
        Z gamma = (i + 1 < n) ? sigma[i][i + 1] : Z(0);
        Z s = isqrt_z<Z>(fdiv<Z>(budget, w[i]));
        long lo = to_long(fdiv<Z>(-s - gamma + delta - 1, delta));  // ceil((-s-gamma)/delta)
        long hi = to_long(fdiv<Z>(s - gamma, delta));
        for (long v = lo; v <= hi; ++v) {
            Z inner = delta * v + gamma;
            Z dec = w[i] * inner * inner;
            Z rest = budget - dec;
            if (rest < 0) continue;
            x[static_cast<std::size_t>(i)] = v;
            for (int r = 0; r < i; ++r)
                sigma[r][i] = sigma[r][i + 1] + du[r][i] * v;
            descend(i - 1, rest);
        }
        x[static_cast<std::size_t>(i)] = 0;
    }
};

}  // namespace

void enumerate_short_vectors(
    const Lattice& L, const mpq_class& max_norm,
    const std::function<void(std::span<const long>, const mpq_class&)>& visit) {
    int n = L.rank();
    if (n == 0 || max_norm <= 0) return;
    LDL ldl = ldl_decompose(L);

    mpz_class delta = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) delta = lcm_z(delta, ldl.U[i][j].get_den());
    mpz_class lq = max_norm.get_den();
    for (int i = 0; i < n; ++i) lq = lcm_z(lq, ldl.D[i].get_den());
    // Lambda = delta^2 * lq;  w_i = D_i * lq  (integral), budget R0 = Lambda * B
    std::vector<mpz_class> w(n);
    for (int i = 0; i < n; ++i) w[i] = ldl.D[i].get_num() * (lq / ldl.D[i].get_den());
    mpz_class lambda = delta * delta * lq;
    mpz_class r0 = mpz_class(max_norm.get_num() * (lambda / max_norm.get_den()));

    std::vector<std::vector<mpz_class>> du(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            du[i][j] = ldl.U[i][j].get_num() * (delta / ldl.U[i][j].get_den());

    // overflow audit for the int64 fast path
    std::vector<mpz_class> S(n), X(n), G(n);
    bool fits = (mpz_sizeinbase(r0.get_mpz_t(), 2) <= 61);
    for (int i = n - 1; i >= 0 && fits; --i) {
        mpz_class q = r0 / w[i];
        mpz_sqrt(S[i].get_mpz_t(), q.get_mpz_t());
        G[i] = 0;
        for (int j = i + 1; j < n; ++j) G[i] += abs(du[i][j]) * X[j];
        X[i] = (S[i] + G[i]) / delta + 1;
        mpz_class worst = w[i] * (delta * X[i] + G[i]) * (delta * X[i] + G[i]);
        if (mpz_sizeinbase(worst.get_mpz_t(), 2) > 61) fits = false;
    }

    mpq_class lambda_q(lambda);
    if (fits) {
        Enumerator<long> e;
        e.n = n;
        e.delta = delta.get_si();
        e.w.resize(n);
        for (int i = 0; i < n; ++i) e.w[i] = w[i].get_si();
        e.du.assign(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) e.du[i][j] = du[i][j].get_si();
        e.sigma.assign(n, std::vector<long>(n + 1, 0));
        e.x.assign(n, 0);
        e.visit = &visit;
        e.lambda_q = lambda_q;
        e.r0 = r0.get_si();
        e.run();
    } else {
        Enumerator<mpz_class> e;
        e.n = n;
        e.delta = delta;
        e.w = w;
        e.du = du;
        e.sigma.assign(n, std::vector<mpz_class>(n + 1, 0));
        e.x.assign(n, 0);
        e.visit = &visit;
        e.lambda_q = lambda_q;
        e.r0 = r0;
        e.run();
    }
}

std::vector<ShortVector> short_vectors(const Lattice& L, const mpq_class& max_norm) {
    std::vector<ShortVector> out;
    enumerate_short_vectors(L, max_norm,
                            [&](std::span<const long> x, const mpq_class& nrm) {
                                out.push_back({std::vector<long>(x.begin(), x.end()), nrm});
                            });
    return out;
}

PuiseuxSeries theta_series(const Lattice& L, const mpq_class& trunc) {
    if (trunc <= 0) throw std::invalid_argument("theta_series: bound must be positive");
    std::map<mpq_class, mpz_class> counts;
    enumerate_short_vectors(L, 2 * trunc, [&](std::span<const long>, const mpq_class& nrm) {
        mpq_class e = nrm / 2;
        if (e < trunc) counts[e] += 1;
    });
    long denom = trunc.get_den().get_si();
    for (const auto& [e, c] : counts) denom = denom / std::gcd(denom, (long)e.get_den().get_si()) * e.get_den().get_si();
    long t = mpz_class(trunc.get_num() * (denom / trunc.get_den().get_si())).get_si();
    PuiseuxSeries::TermMap terms;
    terms[0] = 1;  // zero vector
    for (const auto& [e, c] : counts)
        terms[mpz_class(e.get_num() * (denom / e.get_den().get_si())).get_si()] = mpq_class(c);
    return PuiseuxSeries(denom, t, std::move(terms)).normalized();
}

DualPair a_dual_pair(int n) {
    DualPair p;
    p.scaled = a_dual_scaled(n);
    p.dual_grid = a_dual_grid(n);
    // w_j = sum_i M_ij (alpha_i / (n+1)) with M_ij = (n+1) min(i,j) - ij,
    // the same integer matrix as the Gram of A_n^vee(n+1)
    p.sublattice.assign(n, std::vector<long>(n, 0));
    long m = n + 1;
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j)
            p.sublattice[i - 1][j - 1] = m * std::min(i, j) - i * j;
    return p;
}

DualPair direct_sum(const DualPair& a, const DualPair& b) {
    DualPair p;
    p.scaled = direct_sum(a.scaled, b.scaled);
    p.dual_grid = direct_sum(a.dual_grid, b.dual_grid);
    int n = a.scaled.rank() + b.scaled.rank();
    p.sublattice.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < a.scaled.rank(); ++i)
        for (int j = 0; j < a.scaled.rank(); ++j) p.sublattice[i][j] = a.sublattice[i][j];
    for (int i = 0; i < b.scaled.rank(); ++i)
        for (int j = 0; j < b.scaled.rank(); ++j)
            p.sublattice[a.scaled.rank() + i][a.scaled.rank() + j] = b.sublattice[i][j];
    return p;
}

DiscReducer::DiscReducer(DualPair pair) : pair_(std::move(pair)) {
    int n = pair_.dual_grid.rank();
    hnf_.assign(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) hnf_[i][j] = pair_.sublattice[i][j];
    // column-style Hermite normal form, upper triangular with positive diagonal
    auto col_sub = [&](int dst, int src, const mpz_class& q, int top_row) {
        for (int r = 0; r <= top_row; ++r) hnf_[r][dst] -= q * hnf_[r][src];
    };
    for (int i = n - 1; i >= 0; --i) {
        // gcd-combine columns 0..i on row i
        for (;;) {
            int nz = -1, second = -1;
            for (int c = 0; c <= i; ++c)
                if (hnf_[i][c] != 0) {
                    if (nz < 0)
                        nz = c;
                    else {
                        second = c;
                        break;
                    }
                }
            if (nz < 0) throw std::domain_error("DiscReducer: singular relation matrix");
            if (second < 0) {
                if (nz != i)
                    for (int r = 0; r <= i; ++r) std::swap(hnf_[r][nz], hnf_[r][i]);
                break;
            }
            // reduce the larger by the smaller
            int big = (abs(hnf_[i][nz]) >= abs(hnf_[i][second])) ? nz : second;
            int small = (big == nz) ? second : nz;
            mpz_class q = hnf_[i][big] / hnf_[i][small];
            col_sub(big, small, q, i);
        }
        if (hnf_[i][i] < 0)
            for (int r = 0; r <= i; ++r) hnf_[r][i] = -hnf_[r][i];
        // normalize entries to the right of the pivot
        for (int c = i + 1; c < n; ++c) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), hnf_[i][c].get_mpz_t(), hnf_[i][i].get_mpz_t());
            for (int r = 0; r <= i; ++r) hnf_[r][c] -= q * hnf_[r][i];
        }
    }
}

DiscClass DiscReducer::reduce(std::span<const long> dual_coords) const {
    std::vector<mpz_class> v(dual_coords.begin(), dual_coords.end());
    return reduce(std::span<const mpz_class>(v));
}

DiscClass DiscReducer::reduce(std::span<const mpz_class> dual_coords) const {
    int n = pair_.dual_grid.rank();
    if (static_cast<int>(dual_coords.size()) != n)
        throw std::invalid_argument("DiscReducer::reduce: dimension mismatch");
    std::vector<mpz_class> v(dual_coords.begin(), dual_coords.end());
    for (int i = n - 1; i >= 0; --i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v[i].get_mpz_t(), hnf_[i][i].get_mpz_t());
        if (q == 0) continue;
        for (int r = 0; r <= i; ++r) v[r] -= q * hnf_[r][i];
    }
    DiscClass out;
    out.rep = v;
    // <rep,rep> mod 2
    mpq_class nrm = 0;
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        mpq_class row = 0;
        for (int j = 0; j < n; ++j)
            if (v[j] != 0) row += pair_.dual_grid.gram[i][j] * mpq_class(v[j]);
        nrm += row * mpq_class(v[i]);
    }
    mpq_class half = nrm / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
    out.norm_mod2 = nrm - 2 * mpq_class(fl);
    return out;
}

bool DiscReducer::in_sublattice(std::span<const long> dual_coords) const {
    DiscClass c = reduce(dual_coords);
    return std::all_of(c.rep.begin(), c.rep.end(), [](const mpz_class& z) { return z == 0; });
}

mpz_class DiscReducer::class_count() const {
    mpz_class d = 1;
    for (std::size_t i = 0; i < hnf_.size(); ++i) d *= hnf_[i][i];
    return d;
}

std::vector<long> DiscReducer::hnf_diagonal() const {
    std::vector<long> d(hnf_.size());
    for (std::size_t i = 0; i < hnf_.size(); ++i) d[i] = hnf_[i][i].get_si();
    return d;
}

long DiscReducer::j_gamma(const mpq_class& norm_mod2, long p) {
    // j/p = -norm/2 mod 1
    mpq_class x = -norm_mod2 / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    mpq_class frac = x - mpq_class(fl);
    mpq_class j = frac * p;
    if (j.get_den() != 1)
        throw std::domain_error("j_gamma: class norm not on the 1/" + std::to_string(p) + " grid");
    return j.get_num().get_si();
}

}  // namespace parabor
