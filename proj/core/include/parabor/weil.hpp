// Lift of the eta-quotient data on Gamma_0(p) to a vector-valued form, stored
// through its discriminant components, and realized as the coefficient table
// of a weight-0 index-1 Jacobi form for the configured lattice.
//
// The two shipped configurations are eta^-3(tau) eta^-3(7tau) on A_6^vee(7)
// and eta^-4(tau) eta^-4(5tau) on A_4^vee(5) + A_4^vee(5).  For both, all
// eighth roots of unity and surds in the transformation constants cancel to
// the rational multiplier 1; the fold is carried out exactly here and the
// runtime never touches complex numbers.

#pragma once

#include <span>
#include <vector>

#include "parabor/lattice.hpp"
#include "parabor/puiseux.hpp"
#include "parabor/theta_eta.hpp"

namespace parabor {

enum class LiftId { A6_7, TwoA4_5 };

struct LiftCase {
    LiftId id;
    long p;              // prime level
    long eta_exponent;   // weight of the scalar datum: -3 or -4
    int rank;            // rank of the lattice = 2 |eta_exponent|
    std::vector<int> blocks;  // ambient Z^m block sizes: {7} or {5, 5}
    DualPair pair;       // L = scaled dual root lattice, L^vee = dual grid
    long expected_f00;   // constant term of the lift, equals the rank

    static LiftCase make(LiftId id);
    const Lattice& lattice() const { return pair.scaled; }
    const Lattice& dual_grid() const { return pair.dual_grid; }
};

LiftId lift_id_from_string(const std::string& s);  // "A6" / "A4A4"
std::string to_string(LiftId id);

struct STransform {
    PuiseuxSeries series;   // eta^k(tau) eta^k(tau/p)
    mpq_class multiplier;   // xi_1 * p/sqrt|D| * (f|S / series), folded exactly
};

STransform s_transform(const LiftCase& c, const mpq_class& trunc);

// The lifted form, stored as one series per discriminant behaviour: the zero
// class carries f + g_0, every other class gamma carries g_{j_gamma}.
class VVForm {
public:
    VVForm(const LiftCase& c, const mpq_class& trunc);

    const LiftCase& lift_case() const { return case_; }
    mpq_class trunc() const { return trunc_; }

    const PuiseuxSeries& zero_component() const { return zero_; }
    const PuiseuxSeries& g_component(long j) const;

    // Fourier coefficient f(n, l) keyed by s = p <l,l> (an even integer) and
    // whether l lies in the sublattice L.
    mpz_class coefficient(long n, long s_scaled, bool in_lattice) const;

private:
    LiftCase case_;
    mpq_class trunc_;
    PuiseuxSeries zero_;              // f + g_0
    std::vector<PuiseuxSeries> g_;    // residue components of the transformed series
};

VVForm lift(const LiftCase& c, const mpq_class& trunc);

// f(n, l) with l given as the integer tuple rho in the ambient Z^m blocks
// (l = rho / p); each block must sum to zero.
mpz_class jacobi_coefficient(const VVForm& F, long n, std::span<const long> rho);

}  // namespace parabor
