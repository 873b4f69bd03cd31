#include <doctest.h>

#include <random>

#include "parabor/puiseux.hpp"

using namespace parabor;

namespace {

PuiseuxSeries random_series(std::mt19937_64& rng, long denom, long trunc) {
    std::uniform_int_distribution<long> expd(-2 * denom, trunc - 1);
    std::uniform_int_distribution<long> coefd(-9, 9);
    std::uniform_int_distribution<int> nterms(0, 8);
    PuiseuxSeries::TermMap m;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) m[expd(rng)] = coefd(rng);
    return PuiseuxSeries(denom, trunc, std::move(m));
}

}  // namespace

TEST_CASE("construction drops zeros and rejects out-of-range terms") {
    PuiseuxSeries::TermMap m;
    m[0] = 1;
    m[3] = 0;
    PuiseuxSeries s(2, 10, m);
    CHECK(s.term_count() == 1);
    m[10] = 4;
    CHECK_THROWS_AS(PuiseuxSeries(2, 10, m), std::invalid_argument);
}

TEST_CASE("coefficient reads beyond the bound fail loudly") {
    PuiseuxSeries s = PuiseuxSeries::monomial(mpq_class(1, 2), 3, 5);
    CHECK(s.coeff(mpq_class(1, 2)) == 3);
    CHECK(s.coeff(mpq_class(1, 3)) == 0);  // off-grid below the bound is exact zero
    CHECK_THROWS_AS(s.coeff(5), std::out_of_range);
    CHECK_THROWS_AS(s.coeff(6), std::out_of_range);
}

TEST_CASE("addition and multiplication renormalize denominators") {
    PuiseuxSeries a = PuiseuxSeries::monomial(mpq_class(1, 2), 1, 4);
    PuiseuxSeries b = PuiseuxSeries::monomial(mpq_class(1, 3), 1, 4);
    PuiseuxSeries s = a + b;
    CHECK(s.denom() == 6);
    CHECK(s.coeff(mpq_class(1, 2)) == 1);
    CHECK(s.coeff(mpq_class(1, 3)) == 1);
    PuiseuxSeries p = a * b;
    CHECK(p.coeff(mpq_class(5, 6)) == 1);
}

TEST_CASE("ring laws on truncations for randomized sparse inputs") {
    std::mt19937_64 rng(20240831);
    for (int it = 0; it < 60; ++it) {
        PuiseuxSeries a = random_series(rng, 6, 24);
        PuiseuxSeries b = random_series(rng, 4, 24);
        PuiseuxSeries c = random_series(rng, 3, 24);
        PuiseuxSeries lhs = (a * b) * c;
        PuiseuxSeries rhs = a * (b * c);
        CHECK(lhs.trunc() == rhs.trunc());
        CHECK(agree_below(lhs, rhs, lhs.trunc()));
        PuiseuxSeries d1 = a * (b + c);
        PuiseuxSeries d2 = a * b + a * c;
        mpq_class bound = std::min(d1.trunc(), d2.trunc());
        CHECK(agree_below(d1, d2, bound));
    }
}

TEST_CASE("inversion of unit series is exact on the certified range") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        PuiseuxSeries a = random_series(rng, 5, 30);
        if (a.is_zero()) continue;
        if (a.order() && a.terms().begin()->second == 0) continue;
        PuiseuxSeries inv = a.inverse();
        PuiseuxSeries prod = a * inv;
        CHECK(prod.coeff(0) == 1);
        for (const auto& [e, cc] : prod.terms()) {
            if (e == 0) continue;
            CHECK(cc == 0);
        }
    }
    CHECK_THROWS_AS(PuiseuxSeries::zero(5).inverse(), std::domain_error);
}

TEST_CASE("pow matches repeated multiplication") {
    std::mt19937_64 rng(99);
    PuiseuxSeries a = random_series(rng, 3, 18);
    while (a.is_zero()) a = random_series(rng, 3, 18);
    PuiseuxSeries p = a.pow(5);
    PuiseuxSeries q = a * a * a * a * a;
    CHECK(p == q);
}

TEST_CASE("shift and argument scaling") {
    PuiseuxSeries a = PuiseuxSeries::monomial(1, 2, 4);
    PuiseuxSeries s = a.shifted(mpq_class(-1, 8));
    CHECK(s.coeff(mpq_class(7, 8)) == 2);
    PuiseuxSeries t = a.scaled_arg(1, 7);
    CHECK(t.coeff(mpq_class(1, 7)) == 2);
    CHECK(t.trunc() == mpq_class(4, 7));
}
