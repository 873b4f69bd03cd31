// Sparse one-variable Puiseux series with exact rational coefficients.
//
// A series is a finite map  exponent -> coefficient  where exponents are
// rationals num/denom with one shared positive denominator per series, plus
// an exactness bound `trunc`: every stored exponent is < trunc and the series
// is guaranteed complete below that bound.  Reading a coefficient at or above
// the bound is an error, never a silent zero.  All arithmetic tracks the
// tightest valid bound of the result.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace parabor {

// canonical rational from a num/den pair
inline mpq_class make_q(long num, long den) {
    mpq_class x(num, den);
    x.canonicalize();
    return x;
}

class PuiseuxSeries {
public:
    using Exp = long;
    using TermMap = std::map<Exp, mpq_class>;

    // Zero series with no certified range.
    PuiseuxSeries() : denom_(1), trunc_(0) {}

    // Terms are given as scaled exponents over `denom`; zero coefficients are
    // dropped, keys at or above `trunc` are rejected.
    PuiseuxSeries(Exp denom, Exp trunc, TermMap terms = {});

    static PuiseuxSeries zero(const mpq_class& trunc);
    static PuiseuxSeries one(const mpq_class& trunc);
    static PuiseuxSeries monomial(const mpq_class& exponent, const mpq_class& coeff,
                                  const mpq_class& trunc);

    Exp denom() const { return denom_; }
    Exp trunc_num() const { return trunc_; }
    mpq_class trunc() const;
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Least stored exponent; empty for a stored-zero series.
    std::optional<mpq_class> order() const;

    // Exact coefficient at exponent e.  Throws std::out_of_range for e >= trunc.
    // Exponents below trunc that are off the denominator grid are exactly zero.
    mpq_class coeff(const mpq_class& e) const;

    bool integral() const;  // all coefficients have denominator 1

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const mpq_class& c, const PuiseuxSeries& a);

    // Multiplicative inverse; requires a nonzero leading coefficient.
    // If the input is exact below T with order v, the result is exact below T - 2v.
    PuiseuxSeries inverse() const;
    friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries pow(long k) const;

    PuiseuxSeries shifted(const mpq_class& e) const;      // multiply by q^e
    PuiseuxSeries scaled_arg(long num, long den) const;   // q -> q^{num/den}
    PuiseuxSeries truncated(const mpq_class& new_trunc) const;

    // Smallest exponent denominator representation; the bound is floored to
    // the coarser grid.
    PuiseuxSeries normalized() const;

    bool operator==(const PuiseuxSeries& other) const;

private:
    Exp denom_;   // > 0
    Exp trunc_;   // exclusive bound, scaled by denom_
    TermMap terms_;

    PuiseuxSeries rescaled_to(Exp new_denom) const;  // new_denom multiple of denom_
    friend Exp common_denom(const PuiseuxSeries& a, const PuiseuxSeries& b);
};

// Compare two series on the overlap of their certified ranges.
bool agree_below(const PuiseuxSeries& a, const PuiseuxSeries& b, const mpq_class& bound);

}  // namespace parabor
