#include "parabor/weil.hpp"

#include <stdexcept>

namespace parabor {

LiftCase LiftCase::make(LiftId id) {
    LiftCase c;
    c.id = id;
    if (id == LiftId::A6_7) {
        c.p = 7;
        c.eta_exponent = -3;
        c.rank = 6;
        c.blocks = {7};
        c.pair = a_dual_pair(6);
        c.expected_f00 = 6;
    } else {
        c.p = 5;
        c.eta_exponent = -4;
        c.rank = 8;
        c.blocks = {5, 5};
        c.pair = direct_sum(a_dual_pair(4), a_dual_pair(4));
        c.expected_f00 = 8;
    }
    if (c.rank != 2 * -c.eta_exponent || c.expected_f00 != c.rank)
        throw std::logic_error("LiftCase: inconsistent configuration");
    // weight bookkeeping: k + rank/2 = 0, the lift is a weight-0 Jacobi form
    if (c.eta_exponent + c.rank / 2 != 0)
        throw std::logic_error("LiftCase: lift would not have weight 0");
    return c;
}

LiftId lift_id_from_string(const std::string& s) {
    if (s == "A6") return LiftId::A6_7;
    if (s == "A4A4") return LiftId::TwoA4_5;
    throw std::invalid_argument("unknown case '" + s + "' (expected A6 or A4A4)");
}

std::string to_string(LiftId id) { return id == LiftId::A6_7 ? "A6" : "A4A4"; }

STransform s_transform(const LiftCase& c, const mpq_class& trunc) {
    if (c.id != LiftId::A6_7 && c.id != LiftId::TwoA4_5)
        throw std::domain_error("s_transform: closed form certified only for the shipped cases");
    const long k = c.eta_exponent;
    const long p = c.p;

    // f|S = (-i)^k p^{-k/2} eta^k(tau) eta^k(tau/p), from eta(-1/tau) = sqrt(-i tau) eta(tau).
    // Track the scalar in front of the lift sum as zeta_8^a * p^{h/2}:
    //   (-i)^k                 ->  a += 6k
    //   xi_1 = (-1/|D|) zeta_8^rank, |D| = p^{2|k|-1}
    //   p / sqrt|D| * p^{-k/2} ->  h = 2 - (2|k|-1) - k
    long a = ((6 * k) % 8 + 8) % 8;
    a = (a + c.rank) % 8;
    mpz_class det = 1;
    for (int i = 0; i < 2 * -k - 1; ++i) det *= p;
    int kron = mpz_si_kronecker(-1, det.get_mpz_t());
    if (kron == 0) throw std::logic_error("s_transform: degenerate discriminant");
    if (kron < 0) a = (a + 4) % 8;
    long h = 2 - (2 * -k - 1) + k;

    if (a % 4 != 0 || h % 2 != 0)
        throw std::domain_error("s_transform: transformation constant is not rational");
    mpq_class mult = (a == 4) ? -1 : 1;
    for (long i = 0; i < h / 2; ++i) mult *= p;
    for (long i = 0; i < -h / 2; ++i) mult /= p;

    STransform out;
    out.series = eta_quotient({{1, 1, k}, {1, p, k}}, trunc);
    out.multiplier = mult;
    return out;
}

VVForm::VVForm(const LiftCase& c, const mpq_class& trunc) : case_(c), trunc_(trunc) {
    STransform st = s_transform(c, trunc);
    PuiseuxSeries f = eta_quotient({{1, 1, c.eta_exponent}, {c.p, 1, c.eta_exponent}}, trunc);
    PuiseuxSeries scaled = st.multiplier * st.series;
    g_ = residue_components(scaled, c.p);
    zero_ = f + g_[0];
}

const PuiseuxSeries& VVForm::g_component(long j) const {
    if (j < 0 || j >= static_cast<long>(g_.size()))
        throw std::out_of_range("VVForm::g_component: residue index out of range");
    return g_[static_cast<std::size_t>(j)];
}

mpz_class VVForm::coefficient(long n, long s_scaled, bool in_lattice) const {
    if (s_scaled < 0 || s_scaled % 2 != 0)
        throw std::invalid_argument("VVForm::coefficient: p<l,l> must be an even nonnegative integer");
    mpq_class e = mpq_class(n) - make_q(s_scaled, 2 * case_.p);
    mpq_class v;
    if (in_lattice) {
        v = zero_.coeff(e);
    } else {
        long j = ((-(s_scaled / 2)) % case_.p + case_.p) % case_.p;
        v = g_[static_cast<std::size_t>(j)].coeff(e);
    }
    if (v.get_den() != 1)
        throw std::logic_error("VVForm::coefficient: non-integral coefficient");
    return mpz_class(v.get_num());
}

VVForm lift(const LiftCase& c, const mpq_class& trunc) { return VVForm(c, trunc); }

mpz_class jacobi_coefficient(const VVForm& F, long n, std::span<const long> rho) {
    const LiftCase& c = F.lift_case();
    std::size_t want = 0;
    for (int b : c.blocks) want += static_cast<std::size_t>(b);
    if (rho.size() != want)
        throw std::invalid_argument("jacobi_coefficient: wrong ambient dimension");
    long s = 0;
    bool in_l = true;
    std::size_t off = 0;
    for (int b : c.blocks) {
        long sum = 0;
        long first_mod = ((rho[off] % c.p) + c.p) % c.p;
        for (int i = 0; i < b; ++i) {
            long x = rho[off + static_cast<std::size_t>(i)];
            sum += x;
            s += x * x;
            if (((x % c.p) + c.p) % c.p != first_mod) in_l = false;
        }
        if (sum != 0)
            throw std::invalid_argument("jacobi_coefficient: vector not on the dual grid");
        off += static_cast<std::size_t>(b);
    }
    return F.coefficient(n, s, in_l);
}

}  // namespace parabor
