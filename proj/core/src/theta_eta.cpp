#include "parabor/theta_eta.hpp"

#include <numeric>

namespace parabor {

namespace {

// prod_{n>=1} (1 - q^n) truncated below `bound` (an integer grid series).
// Expanded by Euler's pentagonal number theorem.
PuiseuxSeries euler_product(long bound) {
    PuiseuxSeries::TermMap terms;
    for (long k = 0;; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        if (e1 >= bound && e2 >= bound) break;
        mpq_class sign = (k % 2 == 0) ? 1 : -1;
        if (e1 < bound) terms[e1] += sign;
        if (e2 < bound && e2 != e1) terms[e2] += sign;
    }
    return PuiseuxSeries(1, bound, std::move(terms));
}

long ceil_to_long(const mpq_class& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q.get_si();
}

}  // namespace

PuiseuxSeries eta(const mpq_class& trunc) {
    if (trunc <= 0) throw std::invalid_argument("eta: bound must be positive");
    long rel = ceil_to_long(trunc - mpq_class(1, 24)) + 1;
    PuiseuxSeries u = euler_product(std::max(rel, 1L));
    return u.shifted(mpq_class(1, 24)).truncated(trunc);
}

PuiseuxSeries eta_quotient(std::span<const EtaFactor> factors, const mpq_class& trunc) {
    // leading exponent of the product
    mpq_class lead = 0;
    for (const auto& f : factors) {
        if (f.scale_num <= 0 || f.scale_den <= 0 ||
            (f.scale_num != 1 && f.scale_den != 1))
            throw std::invalid_argument("eta_quotient: scale must be d or 1/d");
        lead += make_q(f.scale_num, 24 * f.scale_den) * static_cast<long>(f.exponent);
    }
    PuiseuxSeries acc;
    bool have = false;
    for (const auto& f : factors) {
        mpq_class scale(f.scale_num, f.scale_den);
        mpq_class self_lead = scale * static_cast<long>(f.exponent) / 24;
        // the factor needs exactness below trunc - (lead - self_lead)
        mpq_class want = trunc - (lead - self_lead);
        // unit part to relative precision, in the scaled variable
        mpq_class rel_bound = (want - self_lead) / scale;
        long rel = std::max(ceil_to_long(rel_bound) + 1, 1L);
        PuiseuxSeries u = euler_product(rel).pow(f.exponent);
        PuiseuxSeries piece =
            u.scaled_arg(f.scale_num, f.scale_den).shifted(self_lead);
        acc = have ? acc * piece : piece;
        have = true;
    }
    if (!have) return PuiseuxSeries::one(trunc);
    if (acc.trunc() < trunc)
        throw std::logic_error("eta_quotient: internal precision shortfall");
    return acc.truncated(trunc);
}

PuiseuxSeries eta_quotient(std::initializer_list<EtaFactor> factors, const mpq_class& trunc) {
    return eta_quotient(std::span<const EtaFactor>(factors.begin(), factors.size()), trunc);
}

std::vector<PuiseuxSeries> residue_components(const PuiseuxSeries& s_in, long p) {
    if (p <= 0) throw std::invalid_argument("residue_components: p must be positive");
    PuiseuxSeries s = s_in.normalized();
    if (p % s.denom() != 0)
        throw std::domain_error("residue_components: exponents not on the 1/" +
                                std::to_string(p) + " grid");
    long f = p / s.denom();
    std::vector<PuiseuxSeries> g;
    g.reserve(p);
    std::vector<PuiseuxSeries::TermMap> maps(p);
    for (const auto& [e, c] : s.terms()) {
        long t = ((e * f) % p + p) % p;
        maps[t][e] = c;
    }
    for (long t = 0; t < p; ++t)
        g.emplace_back(s.denom(), s.trunc_num(), std::move(maps[t]));
    return g;
}

QZetaSeries theta_ez(const mpq_class& qtrunc) {
    if (qtrunc <= 0) throw std::invalid_argument("theta_ez: bound must be positive");
    long T = 8 * ceil_to_long(qtrunc);  // bound scaled by 8, rounded up to the grid
    QZetaSeries::TermMap lead;
    lead[{1, 1}] = 1;    // q^{1/8} zeta^{1/2}
    lead[{1, -1}] = -1;  // -q^{1/8} zeta^{-1/2}
    QZetaSeries acc(8, 2, T, std::move(lead));
    for (long n = 1; 8 * n + 1 < T; ++n) {
        // (1 - q^n zeta)(1 - q^n zeta^{-1})(1 - q^n)
        for (long ze : {2L, -2L, 0L}) {
            QZetaSeries::TermMap m;
            m[{0, 0}] = 1;
            m[{8 * n, ze}] = -1;
            acc = acc * QZetaSeries(8, 2, T, std::move(m));
        }
    }
    return acc.q_truncated(qtrunc);
}

QZetaSeries theta_rescaled(long d, const mpq_class& qtrunc) {
    if (d == 0) throw std::invalid_argument("theta_rescaled: d must be nonzero");
    return theta_ez(qtrunc).rescale_z(d);
}

}  // namespace parabor
