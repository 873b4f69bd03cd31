#include "parabor/qzeta.hpp"

#include <numeric>
#include <vector>

namespace parabor {

namespace {

long lcm_l(long a, long b) { return a / std::gcd(a, b) * b; }

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b) != 0 && a < 0) --q;
    return q;
}

}  // namespace

QZetaSeries::QZetaSeries(Exp qdenom, Exp zdenom, Exp qtrunc, TermMap terms)
    : qdenom_(qdenom), zdenom_(zdenom), qtrunc_(qtrunc), terms_(std::move(terms)) {
    if (qdenom_ <= 0 || zdenom_ <= 0)
        throw std::invalid_argument("QZetaSeries: denominators must be positive");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.first >= qtrunc_)
            throw std::invalid_argument("QZetaSeries: term at or beyond q bound");
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }
}

QZetaSeries QZetaSeries::one(Exp qdenom, Exp zdenom, const mpq_class& qtrunc) {
    mpq_class t = qtrunc * static_cast<long>(qdenom);
    if (t.get_den() != 1)
        throw std::invalid_argument("QZetaSeries::one: bound off the grid");
    QZetaSeries r(qdenom, zdenom, t.get_num().get_si());
    if (r.qtrunc_ <= 0) throw std::invalid_argument("QZetaSeries::one: bound must be positive");
    r.terms_[{0, 0}] = 1;
    return r;
}

mpq_class QZetaSeries::qtrunc() const {
    mpq_class t(qtrunc_, qdenom_);
    t.canonicalize();
    return t;
}

std::optional<mpq_class> QZetaSeries::q_order() const {
    if (terms_.empty()) return std::nullopt;
    mpq_class o(terms_.begin()->first.first, qdenom_);
    o.canonicalize();
    return o;
}

mpz_class QZetaSeries::coeff(const mpq_class& qe, const mpq_class& ze) const {
    if (qe >= qtrunc())
        throw std::out_of_range("QZetaSeries::coeff: q exponent " + qe.get_str() +
                                " at or beyond bound " + qtrunc().get_str());
    mpq_class qs = qe * qdenom_, zs = ze * zdenom_;
    if (qs.get_den() != 1 || zs.get_den() != 1) return 0;
    auto it = terms_.find({qs.get_num().get_si(), zs.get_num().get_si()});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

QZetaSeries QZetaSeries::rescaled_to(Exp qd, Exp zd) const {
    if (qd == qdenom_ && zd == zdenom_) return *this;
    if (qd % qdenom_ != 0 || zd % zdenom_ != 0)
        throw std::logic_error("QZetaSeries: rescale target not a multiple");
    Exp fq = qd / qdenom_, fz = zd / zdenom_;
    QZetaSeries r(qd, zd, qtrunc_ * fq);
    for (const auto& [k, c] : terms_) r.terms_[{k.first * fq, k.second * fz}] = c;
    return r;
}

QZetaSeries QZetaSeries::operator-() const {
    QZetaSeries r(qdenom_, zdenom_, qtrunc_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

QZetaSeries operator+(const QZetaSeries& a, const QZetaSeries& b) {
    long qd = lcm_l(a.qdenom_, b.qdenom_), zd = lcm_l(a.zdenom_, b.zdenom_);
    QZetaSeries x = a.rescaled_to(qd, zd), y = b.rescaled_to(qd, zd);
    QZetaSeries r(qd, zd, std::min(x.qtrunc_, y.qtrunc_));
    for (const auto& [k, c] : x.terms_)
        if (k.first < r.qtrunc_) r.terms_[k] = c;
    for (const auto& [k, c] : y.terms_) {
        if (k.first >= r.qtrunc_) continue;
        auto [it, fresh] = r.terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

QZetaSeries operator-(const QZetaSeries& a, const QZetaSeries& b) { return a + (-b); }

QZetaSeries operator*(const QZetaSeries& a, const QZetaSeries& b) {
    long qd = lcm_l(a.qdenom_, b.qdenom_), zd = lcm_l(a.zdenom_, b.zdenom_);
    QZetaSeries x = a.rescaled_to(qd, zd), y = b.rescaled_to(qd, zd);
    auto eff = [](const QZetaSeries& s) {
        return s.terms_.empty() ? s.qtrunc_ : s.terms_.begin()->first.first;
    };
    QZetaSeries::Exp t = std::min(x.qtrunc_ + eff(y), y.qtrunc_ + eff(x));
    QZetaSeries r(qd, zd, t);
    for (const auto& [ka, ca] : x.terms_) {
        if (ka.first + eff(y) >= t) break;
        for (const auto& [kb, cb] : y.terms_) {
            QZetaSeries::Exp qe = ka.first + kb.first;
            if (qe >= t) break;
            auto [it, fresh] = r.terms_.try_emplace({qe, ka.second + kb.second}, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

QZetaSeries operator*(const QZetaSeries& a, const PuiseuxSeries& s) {
    if (!s.integral())
        throw std::domain_error("QZetaSeries * PuiseuxSeries: non-integral coefficients");
    QZetaSeries b(s.denom(), 1, s.trunc_num());
    for (const auto& [e, c] : s.terms()) b.terms_[{e, 0}] = mpz_class(c.get_num());
    return a * b;
}

// Laurent polynomial division of rows: divide `num` by `den` exactly.
namespace {
using Row = std::map<long, mpz_class>;  // zeta exponent -> coefficient

Row row_mul(const Row& a, const Row& b) {
    Row r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            r[ea + eb] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

void row_sub(Row& a, const Row& b) {
    for (const auto& [e, c] : b) {
        a[e] -= c;
        if (a[e] == 0) a.erase(e);
    }
}

// exact division by a Laurent polynomial; throws on remainder or non-unit content
Row row_div(Row num, const Row& den) {
    if (den.empty()) throw std::domain_error("QZetaSeries division: zero leading row");
    Row q;
    // divide from the top exponent down by the top term of den; an exact
    // quotient has support within [min(num)-min(den), max(num)-max(den)]
    const auto& [dtop_e, dtop_c] = *den.rbegin();
    const long qmin = num.empty() ? 0 : num.begin()->first - den.begin()->first;
    while (!num.empty()) {
        const auto& [ntop_e, ntop_c] = *num.rbegin();
        mpz_class qc, rem;
        mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), ntop_c.get_mpz_t(), dtop_c.get_mpz_t());
        long qe = ntop_e - dtop_e;
        if (rem != 0 || qe < qmin)
            throw std::domain_error("QZetaSeries division: row not exactly divisible");
        q[qe] = qc;
        Row sub;
        for (const auto& [e, c] : den) sub[e + qe] = c * qc;
        row_sub(num, sub);
        if (!num.empty() && num.rbegin()->first >= ntop_e)
            throw std::domain_error("QZetaSeries division: row division does not terminate");
    }
    return q;
}
}  // namespace

QZetaSeries operator/(const QZetaSeries& a, const QZetaSeries& b) {
    if (b.terms_.empty()) throw std::domain_error("QZetaSeries division by zero series");
    long qd = lcm_l(a.qdenom_, b.qdenom_), zd = lcm_l(a.zdenom_, b.zdenom_);
    QZetaSeries x = a.rescaled_to(qd, zd), y = b.rescaled_to(qd, zd);
    long vb = y.terms_.begin()->first.first;
    long va = x.terms_.empty() ? x.qtrunc_ : x.terms_.begin()->first.first;
    long t = std::min(x.qtrunc_ - vb, y.qtrunc_ + va - 2 * vb);

    // collect rows
    std::map<long, Row> arows, brows;
    for (const auto& [k, c] : x.terms_) arows[k.first][k.second] = c;
    for (const auto& [k, c] : y.terms_) brows[k.first - vb][k.second] = c;  // relative
    const Row& blead = brows.at(0);

    QZetaSeries r(qd, zd, t);
    std::map<long, Row> qrows;  // quotient rows by absolute exponent
    // ascending over the q-grid of possible quotient exponents
    std::vector<long> grid;
    // quotient exponents live in (supports of a) - vb + contributions; walk every
    // grid point from va - vb upward
    for (long e = va - vb; e < t; ++e) {
        Row acc;
        auto ait = arows.find(e + vb);
        if (ait != arows.end()) acc = ait->second;
        for (const auto& [qe, qrow] : qrows) {
            long need = e - qe;  // relative exponent in b
            if (need <= 0) continue;
            auto bit = brows.find(need);
            if (bit == brows.end()) continue;
            row_sub(acc, row_mul(qrow, bit->second));
        }
        if (acc.empty()) continue;
        Row qr = row_div(std::move(acc), blead);
        if (!qr.empty()) {
            qrows[e] = std::move(qr);
        }
    }
    for (const auto& [qe, qrow] : qrows)
        for (const auto& [ze, c] : qrow) r.terms_[{qe, ze}] = c;
    return r;
}

QZetaSeries QZetaSeries::pow(long k) const {
    if (k < 0) throw std::domain_error("QZetaSeries::pow: negative exponent");
    if (k == 0) {
        if (terms_.empty()) throw std::domain_error("QZetaSeries::pow: 0^0");
        Exp v = terms_.begin()->first.first;
        QZetaSeries r(qdenom_, zdenom_, qtrunc_ - v);
        r.terms_[{0, 0}] = 1;
        return r;
    }
    QZetaSeries base = *this, acc;
    bool have = false;
    while (k > 0) {
        if (k & 1) {
            acc = have ? acc * base : base;
            have = true;
        }
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

QZetaSeries QZetaSeries::rescale_z(long d) const {
    if (d == 0) throw std::invalid_argument("QZetaSeries::rescale_z: zero scale");
    QZetaSeries r(qdenom_, zdenom_, qtrunc_);
    for (const auto& [k, c] : terms_) r.terms_[{k.first, k.second * d}] = c;
    return r;
}

QZetaSeries QZetaSeries::shifted(const mpq_class& qe, const mpq_class& ze) const {
    long qd = lcm_l(qdenom_, static_cast<long>(qe.get_den().get_si()));
    long zd = lcm_l(zdenom_, static_cast<long>(ze.get_den().get_si()));
    QZetaSeries x = rescaled_to(qd, zd);
    long sq = mpz_class(qe.get_num() * (qd / qe.get_den().get_si())).get_si();
    long sz = mpz_class(ze.get_num() * (zd / ze.get_den().get_si())).get_si();
    QZetaSeries r(qd, zd, x.qtrunc_ + sq);
    for (const auto& [k, c] : x.terms_) r.terms_[{k.first + sq, k.second + sz}] = c;
    return r;
}

QZetaSeries QZetaSeries::q_truncated(const mpq_class& new_trunc) const {
    if (new_trunc > qtrunc())
        throw std::invalid_argument("QZetaSeries::q_truncated: cannot extend exactness");
    long qd = lcm_l(qdenom_, static_cast<long>(new_trunc.get_den().get_si()));
    QZetaSeries x = rescaled_to(qd, zdenom_);
    long t = mpz_class(new_trunc.get_num() * (qd / new_trunc.get_den().get_si())).get_si();
    QZetaSeries r(qd, zdenom_, t);
    for (const auto& [k, c] : x.terms_)
        if (k.first < t) r.terms_[k] = c;
    return r.normalized();
}

QZetaSeries QZetaSeries::normalized() const {
    long gq = qdenom_, gz = zdenom_;
    for (const auto& [k, c] : terms_) {
        gq = std::gcd(gq, k.first);
        gz = std::gcd(gz, k.second);
        if (gq == 1 && gz == 1) break;
    }
    if (gz == zdenom_ && terms_.empty()) gz = zdenom_;  // keep grid if nothing stored
    if (gq == 1 && gz == 1) return *this;
    QZetaSeries r(qdenom_ / gq, zdenom_ / gz, floor_div(qtrunc_, gq));
    for (const auto& [k, c] : terms_)
        if (k.first / gq < r.qtrunc_) r.terms_[{k.first / gq, k.second / gz}] = c;
    return r;
}

mpq_class QZetaSeries::z_span() const {
    long m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(k.second));
    mpq_class s(m, zdenom_);
    s.canonicalize();
    return s;
}

bool QZetaSeries::operator==(const QZetaSeries& other) const {
    QZetaSeries a = normalized(), b = other.normalized();
    return a.qdenom_ == b.qdenom_ && a.zdenom_ == b.zdenom_ && a.qtrunc_ == b.qtrunc_ &&
           a.terms_ == b.terms_;
}

}  // namespace parabor
