#pragma once

#include <set>

#include "qseries/bailey.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Bilateral alternating theta sum: sum over all integers m of
/// (-1)^m q^{(A m^2 + B m)/2}. A + B must be even and |B| < A so that every
/// exponent is a nonnegative integer.
struct ThetaSpec {
    long A;
    long B;
    ThetaSpec(long A_, long B_) : A(A_), B(B_) {
        if (A <= 0 || (A + B) % 2 != 0 || std::abs(B) >= A)
            throw QSeriesError("theta spec needs A > |B| with A+B even");
    }
};

TruncatedSeries theta_series(const ThetaSpec& spec, int order);

/// Triple product (q^m; q^m)_inf (z; q^m)_inf (q^m/z; q^m)_inf for z = c q^e,
/// 0 <= e <= m (degenerate endpoints give the zero series when c = 1).
TruncatedSeries jtp_product(const QMonomial& z, long base_modulus, int order);

/// Product side supported on residue classes: modulus m and residue set S
/// (closed under r -> m-r at construction), divided by (q;q)_inf:
///   spdt(S, m) = prod_{n >= 1, n mod m in S u (m-S)} (1 - q^n) / (q;q)_inf.
struct SpdtSpec {
    long modulus;
    std::set<long> residues;       // closed under r -> m - r
    int poch_power;                // count of 1/(q^b;q)_inf prefactors on that side
    long prefactor_qexp;           // b in (q^b;q)_inf (1 for a=1 records, 2 for a=q)

    SpdtSpec(long m, std::set<long> S, int pow, long pref_qexp);
};

/// Theta(S,m) / (q;q)_inf.
TruncatedSeries spdt_series(const SpdtSpec& spec, int order);

/// The full product side: spdt_series divided by ((q^b;q)_inf)^poch_power.
TruncatedSeries rr_rhs_series(const SpdtSpec& spec, int order);

/// alpha weight (a;q)_m (1-a q^{2m}) / ((q;q)_m (1-a)) as a series at a = c q^e;
/// a = 1 is handled analytically: 1 for m = 0, (1 + q^m) for m >= 1.
TruncatedSeries vwp_weight_series(long m, const QMonomial& a, int order);

/// Sum side of the limit identities:
///   1/((aq;q)_inf)^poch_power * sum_m w(a,m) (-1)^m a^{a_pow m} q^{(A m^2 + B m)/2}
/// for the structured alpha shape of a catalogued pair.
TruncatedSeries alpha_sum_rhs(const AlphaShape& shape, const QMonomial& a,
                              int poch_power, int order);

} // namespace qseries
