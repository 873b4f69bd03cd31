// Dedekind eta, eta quotients, residue splittings and the odd Jacobi theta
// series, all as exact truncated series.

#pragma once

#include <span>
#include <vector>

#include "parabor/puiseux.hpp"
#include "parabor/qzeta.hpp"

namespace parabor {

// eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n), exact below `trunc`.
PuiseuxSeries eta(const mpq_class& trunc);

// One factor eta(scale * tau)^exponent; scale is d or 1/d for a positive
// integer d.
struct EtaFactor {
    long scale_num = 1;
    long scale_den = 1;
    long exponent = 1;
};

// prod_i eta(scale_i * tau)^{e_i}, exact below `trunc`.  Negative exponents go
// through unit-series inversion.
PuiseuxSeries eta_quotient(std::span<const EtaFactor> factors, const mpq_class& trunc);
PuiseuxSeries eta_quotient(std::initializer_list<EtaFactor> factors, const mpq_class& trunc);

// Splits s into the p series g_t collecting exponents congruent to t/p mod 1,
// so that sum_t g_t = s.  Every exponent of s must lie on the 1/p grid.
std::vector<PuiseuxSeries> residue_components(const PuiseuxSeries& s, long p);

// The odd Jacobi theta series
//   theta(tau, z) = q^{1/8} (zeta^{1/2} - zeta^{-1/2})
//                   prod_{n>=1} (1 - q^n zeta)(1 - q^n zeta^{-1})(1 - q^n),
// exact below `qtrunc`.
QZetaSeries theta_ez(const mpq_class& qtrunc);

// theta(tau, d z): zeta exponents scaled by d; d = -1 gives -theta.
QZetaSeries theta_rescaled(long d, const mpq_class& qtrunc);

}  // namespace parabor
