// Positive definite lattices over exact rationals: Gram data, short-vector
// enumeration, theta series and discriminant-group reduction for dual pairs.

#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "parabor/puiseux.hpp"

namespace parabor {

struct Lattice {
    std::string label;
    std::vector<std::vector<mpq_class>> gram;  // symmetric, positive definite

    int rank() const { return static_cast<int>(gram.size()); }
    bool is_even() const;
    mpq_class inner(std::span<const long> x, std::span<const long> y) const;
    mpq_class norm(std::span<const long> x) const { return inner(x, x); }
    mpq_class det() const;
};

Lattice cartan_a(int n);          // A_n root lattice
Lattice a_dual_scaled(int n);     // A_n^vee(n+1): Gram (n+1)min(i,j) - ij
Lattice a_dual_grid(int n);       // (1/(n+1)) A_n under <,> = (n+1)(,): Gram = Cartan/(n+1)
Lattice direct_sum(const Lattice& a, const Lattice& b);

struct ShortVector {
    std::vector<long> coords;  // in the lattice basis
    mpq_class norm;
};

// All v with 0 < <v,v> <= max_norm, both signs, deterministic order.
std::vector<ShortVector> short_vectors(const Lattice& L, const mpq_class& max_norm);
void enumerate_short_vectors(
    const Lattice& L, const mpq_class& max_norm,
    const std::function<void(std::span<const long>, const mpq_class&)>& visit);

// sum_{v in L} q^{<v,v>/2}, exact below `trunc`.
PuiseuxSeries theta_series(const Lattice& L, const mpq_class& trunc);

// A sublattice of finite index inside a "dual grid" lattice: the setting for
// discriminant groups D(L) = L^vee / L.
struct DualPair {
    Lattice scaled;     // L itself (its Gram in its own basis)
    Lattice dual_grid;  // L^vee with the same bilinear form
    std::vector<std::vector<long>> sublattice;  // columns: L-basis in L^vee coordinates
};
DualPair a_dual_pair(int n);  // L = A_n^vee(n+1), L^vee = (1/(n+1)) A_n
DualPair direct_sum(const DualPair& a, const DualPair& b);

struct DiscClass {
    std::vector<mpz_class> rep;  // canonical coset representative, L^vee coordinates
    mpq_class norm_mod2;         // <rep,rep> mod 2, in [0,2)
};

class DiscReducer {
public:
    explicit DiscReducer(DualPair pair);

    DiscClass reduce(std::span<const long> dual_coords) const;
    DiscClass reduce(std::span<const mpz_class> dual_coords) const;
    bool in_sublattice(std::span<const long> dual_coords) const;
    mpz_class class_count() const;  // |det| of the relation matrix
    std::vector<long> hnf_diagonal() const;  // canonical reps live in prod [0, d_i)
    const DualPair& pair() const { return pair_; }

    // j with j/p = (-<gamma,gamma>/2 mod 1); throws if that is not integral.
    static long j_gamma(const mpq_class& norm_mod2, long p);

private:
    DualPair pair_;
    std::vector<std::vector<mpz_class>> hnf_;  // upper triangular, positive diagonal
};

// Integer square root, floor(sqrt(x)) for x >= 0.
long isqrt_long(long x);

// Vectors x in Z^m with sum(x) = 0 and (x,x) <= R under the standard scalar
// product, in lexicographic order.  The zero vector is included only when
// `include_zero` is set.  visit(x, norm).
template <class Visit>
void for_each_sum_zero(int m, long R, Visit&& visit, bool include_zero = false) {
    if (m < 1 || R < 0) return;
    std::vector<long> x(static_cast<std::size_t>(m), 0);
    // minimal possible sum of squares of c integers with total -s
    auto min_tail = [](long s, long c) -> long {
        if (s < 0) s = -s;
        long b = s / c, r = s % c;
        return (c - r) * b * b + r * (b + 1) * (b + 1);
    };
    auto rec = [&](auto&& self, int i, long sum, long used) -> void {
        if (i == m - 1) {
            long last = -sum;
            long nrm = used + last * last;
            if (nrm <= R) {
                x[static_cast<std::size_t>(i)] = last;
                if (nrm > 0 || include_zero) visit(std::span<const long>(x), nrm);
            }
            return;
        }
        long budget = R - used;
        long hi = isqrt_long(budget);
        for (long v = -hi; v <= hi; ++v) {
            long u2 = used + v * v;
            if (u2 > R) continue;
            if (min_tail(sum + v, m - 1 - i) > R - u2) continue;
            x[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, sum + v, u2);
        }
    };
    rec(rec, 0, 0, 0);
}

}  // namespace parabor
