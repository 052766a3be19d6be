#pragma once

#include <vector>

#include "qseries/qpoch.hpp"

namespace qseries {

/// Terminating basic hypergeometric series rPhi_s. Termination comes from a
/// numerator parameter q^{-M}; the constructor-checked invariant.
struct PhiSpec {
    std::vector<QMonomial> numerator_params;
    std::vector<QMonomial> denominator_params;
    QMonomial argument;
    long termination_index = 0;

    PhiSpec(std::vector<QMonomial> num, std::vector<QMonomial> den, QMonomial arg, long M);
};

/// Very-well-poised r+1 W r with the sqrt-free kernel (1 - a q^{2n})/(1 - a):
/// sum_{n<=M} kernel * (a;q)_n / (q;q)_n * prod_i (b_i;q)_n / (aq/b_i;q)_n * z^n.
struct VwpSpec {
    QMonomial a;
    std::vector<QMonomial> tail_params;
    QMonomial argument;
    long termination_index = 0;
    /// power of the correction [(-1)^n q^{C(n,2)}]; 0 for the classical W series
    int correction_power = 0;
};

/// Exact finite sum:
///   sum_{n=0}^{M} prod(a_i;q)_n / ((q;q)_n prod(b_j;q)_n) * [(-1)^n q^{n(n-1)/2}]^{1+s-r} * z^n.
/// Throws PoleHit when a denominator Pochhammer vanishes at some n <= M.
Rational phi_eval(const PhiSpec& spec, const Rational& qv);

Rational vwp_eval(const VwpSpec& spec, const Rational& qv);

/// q-Pfaff-Saalschuetz: 3Phi2(a, b, q^{-M}; c, a b q^{1-M}/c; q, q)
///   = (c/a, c/b; q)_M / (c, c/(ab); q)_M.
Rational saalschutz_closed_form(const QMonomial& a, const QMonomial& b, long M,
                                const Rational& qv, const QMonomial& c_target);

/// Terminating 6W5(a; b, c, q^{-M}; q, a q^{1+M}/(bc))
///   = (aq, aq/(bc); q)_M / (aq/b, aq/c; q)_M.
Rational sixphi5_closed_form(const QMonomial& a, const QMonomial& b, const QMonomial& c,
                             long M, const Rational& qv);

/// Jackson: 8W7(a; b, c, d, e, q^{-M}; q, q) with e = a^2 q^{1+M}/(bcd)
///   = (aq, aq/(bc), aq/(bd), aq/(cd); q)_M / (aq/b, aq/c, aq/d, aq/(bcd); q)_M.
Rational jackson_8phi7_closed_form(const QMonomial& a, const QMonomial& b, const QMonomial& c,
                                   const QMonomial& d, long M, const Rational& qv);

/// Assemble the PhiSpec of the q-Pfaff-Saalschuetz left side (used by tests and
/// the summation-theorem catalog records).
PhiSpec make_saalschutz_phi(const QMonomial& a, const QMonomial& b, long M, const QMonomial& c_target);
VwpSpec make_sixphi5_vwp(const QMonomial& a, const QMonomial& b, const QMonomial& c, long M);
VwpSpec make_jackson_vwp(const QMonomial& a, const QMonomial& b, const QMonomial& c,
                         const QMonomial& d, long M);

} // namespace qseries
