#include "parabor/puiseux.hpp"

#include <numeric>
#include <utility>

namespace parabor {

namespace {

long lcm_ll(long a, long b) {
    return a / std::gcd(a, b) * b;
}

// floor(a/b) for b > 0
long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b) != 0 && a < 0) --q;
    return q;
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(Exp denom, Exp trunc, TermMap terms)
    : denom_(denom), trunc_(trunc), terms_(std::move(terms)) {
    if (denom_ <= 0) throw std::invalid_argument("PuiseuxSeries: denominator must be positive");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first >= trunc_)
            throw std::invalid_argument("PuiseuxSeries: term at or beyond truncation bound");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

PuiseuxSeries PuiseuxSeries::zero(const mpq_class& trunc) {
    Exp den = static_cast<Exp>(trunc.get_den().get_si());
    Exp num = static_cast<Exp>(trunc.get_num().get_si());
    return PuiseuxSeries(den, num);
}

PuiseuxSeries PuiseuxSeries::one(const mpq_class& trunc) {
    PuiseuxSeries r = zero(trunc);
    if (r.trunc_ <= 0) throw std::invalid_argument("PuiseuxSeries::one: bound must be positive");
    r.terms_[0] = 1;
    return r;
}

PuiseuxSeries PuiseuxSeries::monomial(const mpq_class& exponent, const mpq_class& coeff,
                                      const mpq_class& trunc) {
    if (exponent >= trunc)
        throw std::invalid_argument("PuiseuxSeries::monomial: exponent beyond bound");
    long d = lcm_ll(exponent.get_den().get_si(), trunc.get_den().get_si());
    PuiseuxSeries r(d, static_cast<Exp>(mpz_class(trunc.get_num() * (d / trunc.get_den().get_si())).get_si()));
    if (coeff != 0)
        r.terms_[static_cast<Exp>(mpz_class(exponent.get_num() * (d / exponent.get_den().get_si())).get_si())] = coeff;
    return r;
}

mpq_class PuiseuxSeries::trunc() const {
    mpq_class t(static_cast<long>(trunc_), static_cast<long>(denom_));
    t.canonicalize();
    return t;
}

std::optional<mpq_class> PuiseuxSeries::order() const {
    if (terms_.empty()) return std::nullopt;
    mpq_class o(static_cast<long>(terms_.begin()->first), static_cast<long>(denom_));
    o.canonicalize();
    return o;
}

mpq_class PuiseuxSeries::coeff(const mpq_class& e) const {
    if (e >= trunc())
        throw std::out_of_range("PuiseuxSeries::coeff: exponent " + e.get_str() +
                                " at or beyond exactness bound " + trunc().get_str());
    // exponent on the grid?
    mpq_class scaled = e * static_cast<long>(denom_);
    if (scaled.get_den() != 1) return 0;
    auto it = terms_.find(static_cast<Exp>(scaled.get_num().get_si()));
    return it == terms_.end() ? mpq_class(0) : it->second;
}

bool PuiseuxSeries::integral() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

PuiseuxSeries PuiseuxSeries::rescaled_to(Exp new_denom) const {
    if (new_denom == denom_) return *this;
    if (new_denom % denom_ != 0)
        throw std::logic_error("PuiseuxSeries: rescale target not a multiple");
    Exp f = new_denom / denom_;
    PuiseuxSeries r(new_denom, trunc_ * f);
    for (const auto& [e, c] : terms_) r.terms_[e * f] = c;
    return r;
}

PuiseuxSeries::Exp common_denom(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return lcm_ll(a.denom_, b.denom_);
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries r(denom_, trunc_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto d = common_denom(a, b);
    PuiseuxSeries x = a.rescaled_to(d), y = b.rescaled_to(d);
    PuiseuxSeries r(d, std::min(x.trunc_, y.trunc_));
    for (const auto& [e, c] : x.terms_)
        if (e < r.trunc_) r.terms_[e] = c;
    for (const auto& [e, c] : y.terms_) {
        if (e >= r.trunc_) continue;
        auto [it, fresh] = r.terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const mpq_class& c, const PuiseuxSeries& a) {
    PuiseuxSeries r(a.denom_, a.trunc_);
    if (c != 0)
        for (const auto& [e, v] : a.terms_) r.terms_[e] = c * v;
    return r;
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto d = common_denom(a, b);
    PuiseuxSeries x = a.rescaled_to(d), y = b.rescaled_to(d);
    // effective order: least stored exponent, or the bound itself when nothing
    // is stored (the unseen tail starts there)
    auto eff = [](const PuiseuxSeries& s) {
        return s.terms_.empty() ? s.trunc_ : s.terms_.begin()->first;
    };
    PuiseuxSeries::Exp t = std::min(x.trunc_ + eff(y), y.trunc_ + eff(x));
    PuiseuxSeries r(d, t);
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            PuiseuxSeries::Exp e = ea + eb;
            if (e >= t) break;  // y sorted ascending
            auto [it, fresh] = r.terms_.try_emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
    if (terms_.empty())
        throw std::domain_error("PuiseuxSeries::inverse: zero series");
    Exp v = terms_.begin()->first;
    const mpq_class lead = terms_.begin()->second;
    // relative precision of the unit part
    Exp rel = trunc_ - v;
    // u = series / (lead * q^v) = 1 + h, invert by the convolution recurrence
    std::map<Exp, mpq_class> h;  // exponents > 0, relative
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        h[it->first - v] = it->second / lead;
    std::map<Exp, mpq_class> u;
    u[0] = 1;
    // u[e] = -sum_{0<j<=e} h[j] u[e-j]; iterate over the support actually reachable
    // (sums of h-exponents), not the full grid.
    std::map<Exp, mpq_class> pending;  // accumulated -h*u contributions not yet finalized
    for (const auto& [j, cj] : h)
        if (j < rel) pending[j] = -cj;
    while (!pending.empty()) {
        auto it = pending.begin();
        Exp e = it->first;
        mpq_class ce = it->second;
        pending.erase(it);
        if (ce == 0) continue;
        u[e] = ce;
        for (const auto& [j, cj] : h) {
            if (e + j >= rel) break;
            pending[e + j] += -cj * ce;
        }
    }
    PuiseuxSeries r(denom_, rel - v);  // trunc = (T - v) - v
    for (const auto& [e, c] : u) {
        if (c == 0) continue;
        Exp k = e - v;
        if (k < r.trunc_) r.terms_[k] = c / lead;
    }
    return r;
}

PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return a * b.inverse();
}

PuiseuxSeries PuiseuxSeries::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) {
        if (terms_.empty())
            throw std::domain_error("PuiseuxSeries::pow: 0^0 of stored-zero series");
        Exp v = terms_.begin()->first;
        PuiseuxSeries r(denom_, trunc_ - v);
        r.terms_[0] = 1;
        return r;
    }
    PuiseuxSeries base = *this;
    PuiseuxSeries acc;
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

PuiseuxSeries PuiseuxSeries::shifted(const mpq_class& e) const {
    long d = lcm_ll(denom_, e.get_den().get_si());
    PuiseuxSeries x = rescaled_to(d);
    long s = mpz_class(e.get_num() * (d / e.get_den().get_si())).get_si();
    PuiseuxSeries r(d, x.trunc_ + s);
    for (const auto& [k, c] : x.terms_) r.terms_[k + s] = c;
    return r;
}

PuiseuxSeries PuiseuxSeries::scaled_arg(long num, long den) const {
    if (num <= 0 || den <= 0)
        throw std::invalid_argument("PuiseuxSeries::scaled_arg: scale must be positive");
    // q -> q^{num/den}: exponent e/denom becomes e*num/(denom*den)
    PuiseuxSeries r(denom_ * den, trunc_ * num);
    for (const auto& [e, c] : terms_) r.terms_[e * num] = c;
    return r.normalized();
}

PuiseuxSeries PuiseuxSeries::truncated(const mpq_class& new_trunc) const {
    if (new_trunc > trunc())
        throw std::invalid_argument("PuiseuxSeries::truncated: cannot extend exactness");
    long d = lcm_ll(denom_, new_trunc.get_den().get_si());
    PuiseuxSeries x = rescaled_to(d);
    long t = mpz_class(new_trunc.get_num() * (d / new_trunc.get_den().get_si())).get_si();
    PuiseuxSeries r(d, t);
    for (const auto& [e, c] : x.terms_)
        if (e < t) r.terms_[e] = c;
    return r.normalized();
}

PuiseuxSeries PuiseuxSeries::normalized() const {
    long g = denom_;
    for (const auto& [e, c] : terms_) {
        g = std::gcd(g, e);
        if (g == 1) break;
    }
    if (g == 1) return *this;
    PuiseuxSeries r(denom_ / g, floor_div(trunc_, g));
    for (const auto& [e, c] : terms_)
        if (e / g < r.trunc_) r.terms_[e / g] = c;
    return r;
}

bool PuiseuxSeries::operator==(const PuiseuxSeries& other) const {
    PuiseuxSeries a = normalized(), b = other.normalized();
    return a.denom_ == b.denom_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

bool agree_below(const PuiseuxSeries& a, const PuiseuxSeries& b, const mpq_class& bound) {
    if (bound > a.trunc() || bound > b.trunc())
        throw std::out_of_range("agree_below: bound exceeds certified range");
    PuiseuxSeries d = a - b;
    for (const auto& [e, c] : d.terms()) {
        mpq_class ee(static_cast<long>(e), static_cast<long>(d.denom()));
        ee.canonicalize();
        if (ee < bound && c != 0) return false;
    }
    return true;
}

}  // namespace parabor
