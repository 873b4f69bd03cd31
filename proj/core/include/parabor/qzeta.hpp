// Bivariate sparse series in (q, zeta) with exact integer coefficients.
//
// Exponents of q live on a 1/qdenom grid with an exactness bound in q only;
// zeta exponents live on a 1/zdenom grid and the zeta-support of every q-row
// is finite and complete.  This is the container for the odd theta series,
// theta blocks and Fourier--Jacobi data, all of which have integral
// coefficients.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include <gmpxx.h>

#include "parabor/puiseux.hpp"

namespace parabor {

class QZetaSeries {
public:
    using Exp = long;
    using Key = std::pair<Exp, Exp>;  // (q exponent, zeta exponent), scaled
    using TermMap = std::map<Key, mpz_class>;

    QZetaSeries() : qdenom_(1), zdenom_(1), qtrunc_(0) {}
    QZetaSeries(Exp qdenom, Exp zdenom, Exp qtrunc, TermMap terms = {});

    static QZetaSeries one(Exp qdenom, Exp zdenom, const mpq_class& qtrunc);

    Exp qdenom() const { return qdenom_; }
    Exp zdenom() const { return zdenom_; }
    Exp qtrunc_num() const { return qtrunc_; }
    mpq_class qtrunc() const;
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::optional<mpq_class> q_order() const;

    // Exact coefficient; throws std::out_of_range when qe >= qtrunc.
    mpz_class coeff(const mpq_class& qe, const mpq_class& ze) const;

    QZetaSeries operator-() const;
    friend QZetaSeries operator+(const QZetaSeries& a, const QZetaSeries& b);
    friend QZetaSeries operator-(const QZetaSeries& a, const QZetaSeries& b);
    friend QZetaSeries operator*(const QZetaSeries& a, const QZetaSeries& b);

    // Multiply by a one-variable series; its coefficients must be integers.
    friend QZetaSeries operator*(const QZetaSeries& a, const PuiseuxSeries& s);

    // Exact division: solved row by row in q; every row division must leave
    // no remainder and the result must have finite rows, else std::domain_error.
    friend QZetaSeries operator/(const QZetaSeries& a, const QZetaSeries& b);

    QZetaSeries pow(long k) const;  // k >= 0

    QZetaSeries rescale_z(long d) const;   // zeta -> zeta^d, d != 0
    QZetaSeries shifted(const mpq_class& qe, const mpq_class& ze) const;
    QZetaSeries q_truncated(const mpq_class& new_trunc) const;
    QZetaSeries normalized() const;        // reduce both exponent grids

    // Largest |zeta exponent| in any row, as a rational.
    mpq_class z_span() const;

    bool operator==(const QZetaSeries& other) const;

private:
    Exp qdenom_, zdenom_;
    Exp qtrunc_;
    TermMap terms_;

    QZetaSeries rescaled_to(Exp qd, Exp zd) const;
};

}  // namespace parabor
