#include <doctest.h>

#include <vector>

#include "parabor/theta_eta.hpp"

using namespace parabor;

namespace {

// Independent oracle: coefficients of prod_{n>=1} (1 - q^{sn})^e by naive
// truncated polynomial arithmetic on a dense integer vector.
std::vector<mpz_class> dense_eta_unit(long s, long e, long len) {
    std::vector<mpz_class> acc(len, 0);
    acc[0] = 1;
    auto mul_factor = [&](long n, int sign_exp) {
        // multiply by (1 - q^{sn}) or divide by it (geometric series)
        if (sign_exp > 0) {
            for (long i = len - 1; i >= s * n; --i) acc[i] -= acc[i - s * n];
        } else {
            for (long i = s * n; i < len; ++i) acc[i] += acc[i - s * n];
        }
    };
    long reps = e > 0 ? e : -e;
    for (long n = 1; s * n < len; ++n)
        for (long r = 0; r < reps; ++r) mul_factor(n, e > 0 ? 1 : -1);
    return acc;
}

}  // namespace

TEST_CASE("eta: leading term and pentagonal sparsity") {
    PuiseuxSeries e = eta(10);
    CHECK(e.denom() == 24);
    CHECK(*e.order() == mpq_class(1, 24));
    CHECK(e.coeff(mpq_class(1, 24)) == 1);
    // coefficient at q^{1/24 + 3} vanishes (3 is not pentagonal)
    CHECK(e.coeff(mpq_class(1, 24) + 3) == 0);
    // against the dense oracle
    auto oracle = dense_eta_unit(1, 1, 10);
    for (long n = 0; n < 9; ++n)
        CHECK(e.coeff(mpq_class(1, 24) + n) == mpq_class(oracle[n]));
}

TEST_CASE("eta times its inverse is one") {
    PuiseuxSeries e = eta(10);
    PuiseuxSeries p = e * e.inverse();
    CHECK(p.coeff(0) == 1);
    CHECK(p.term_count() == 1);
}

TEST_CASE("eta quotient eta^-3(t) eta^-3(7t)") {
    PuiseuxSeries s = eta_quotient({{1, 1, -3}, {7, 1, -3}}, 8);
    CHECK(*s.order() == -1);
    // q^0 coefficient is 3: oracle convolution of the two inverse products
    auto a = dense_eta_unit(1, -3, 10);
    auto b = dense_eta_unit(7, -3, 10);
    std::vector<mpz_class> conv(10, 0);
    for (long i = 0; i < 10; ++i)
        for (long j = 0; i + j < 10; ++j) conv[i + j] += a[i] * b[j];
    CHECK(s.coeff(0) == mpq_class(conv[1]));
    CHECK(conv[1] == 3);
    for (long n = -1; n < 7; ++n) CHECK(s.coeff(n) == mpq_class(conv[n + 1]));
}

TEST_CASE("eta quotient with argument scale 1/7") {
    PuiseuxSeries s = eta_quotient({{1, 1, -3}, {1, 7, -3}}, 2);
    CHECK(*s.order() == mpq_class(-1, 7));
    CHECK(s.coeff(mpq_class(-1, 7)) == 1);
    // oracle in the variable x = q^{1/7}: eta-unit^-3(x^7) * eta-unit^-3(x)
    auto a = dense_eta_unit(7, -3, 30);
    auto b = dense_eta_unit(1, -3, 30);
    std::vector<mpz_class> conv(30, 0);
    for (long i = 0; i < 30; ++i)
        for (long j = 0; i + j < 30; ++j) conv[i + j] += a[i] * b[j];
    for (long m = 0; m < 14; ++m)
        CHECK(s.coeff(make_q(m - 1, 7)) == mpq_class(conv[m]));
}

TEST_CASE("eta^24 has integer exponents with leading q") {
    PuiseuxSeries s = eta_quotient({{1, 1, 24}}, 6).normalized();
    CHECK(s.denom() == 1);
    CHECK(*s.order() == 1);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(2) == -24);
}

TEST_CASE("residue components partition the series") {
    PuiseuxSeries s = eta_quotient({{1, 1, -3}, {1, 7, -3}}, 3);
    auto g = residue_components(s, 7);
    REQUIRE(g.size() == 7);
    // g6 holds the q^{-1/7} pole
    CHECK(g[6].coeff(mpq_class(-1, 7)) == 1);
    // g0 constant term is 3
    CHECK(g[0].coeff(0) == 3);
    // partition: supports disjoint, sum equals s
    PuiseuxSeries sum = g[0];
    std::size_t nterms = g[0].term_count();
    for (int t = 1; t < 7; ++t) {
        sum = sum + g[t];
        nterms += g[t].term_count();
    }
    CHECK(sum == s);
    CHECK(nterms == s.term_count());
    // each component lands in its residue class
    for (int t = 0; t < 7; ++t)
        for (const auto& [e, c] : g[t].terms()) CHECK(((e % 7) + 7) % 7 == t);
}

TEST_CASE("residue components with p = 1") {
    PuiseuxSeries s = eta_quotient({{1, 1, 24}}, 4);
    auto g = residue_components(s, 1);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == s.normalized());
}

TEST_CASE("residue components reject off-grid exponents") {
    PuiseuxSeries s = eta(3);  // exponents on the 1/24 grid
    CHECK_THROWS_AS(residue_components(s, 7), std::domain_error);
}

TEST_CASE("odd theta series: leading terms and sum-formula oracle") {
    QZetaSeries th = theta_ez(6);
    CHECK(th.coeff(mpq_class(1, 8), mpq_class(1, 2)) == 1);
    CHECK(th.coeff(mpq_class(1, 8), mpq_class(-1, 2)) == -1);
    // the -q zeta * q^{1/8} zeta^{1/2} term of the triple product
    CHECK(th.coeff(mpq_class(9, 8), mpq_class(3, 2)) == -1);

    // Jacobi triple product oracle: theta = sum_n (-1)^n q^{(2n+1)^2/8} zeta^{(2n+1)/2}
    QZetaSeries::TermMap m;
    for (long n = -10; n <= 10; ++n) {
        long a = 2 * n + 1;
        if (a * a < 48) m[{a * a, a}] = (((n % 2) + 2) % 2 == 0) ? 1 : -1;
    }
    QZetaSeries oracle(8, 2, 48, std::move(m));
    CHECK(th == oracle);
}

TEST_CASE("theta rescaled: oddness and substitution") {
    QZetaSeries th = theta_ez(4);
    CHECK(theta_rescaled(-1, 4) == -th);
    QZetaSeries t3 = theta_rescaled(3, 4);
    CHECK(t3.coeff(mpq_class(1, 8), mpq_class(3, 2)) == 1);
    CHECK(t3.coeff(mpq_class(1, 8), mpq_class(1, 2)) == 0);
}

TEST_CASE("qzeta arithmetic: theta / theta and block round trip") {
    QZetaSeries th = theta_ez(5);
    QZetaSeries one = th / th;
    CHECK(one.coeff(0, 0) == 1);
    CHECK(one.term_count() == 1);

    PuiseuxSeries e15 = eta_quotient({{1, 1, 15}}, 7);
    QZetaSeries blk = th * eta_quotient({{1, 1, -15}}, 7);
    QZetaSeries back = blk * e15;
    // back should equal theta on the common range
    QZetaSeries diff = back - th.q_truncated(back.qtrunc());
    CHECK(diff.is_zero());
}

TEST_CASE("zeta support of products is bounded by the sum of factor spans") {
    QZetaSeries a = theta_rescaled(2, 4), b = theta_rescaled(5, 4);
    QZetaSeries p = a * b;
    CHECK(p.z_span() <= a.z_span() + b.z_span());
}
