#pragma once

#include <optional>

#include "qseries/series.hpp"

namespace qseries {

/// (x;q)_n with x a monomial in q; length empty means the infinite product.
struct PochSpec {
    QMonomial base;
    std::optional<long> length;  // nullopt = infinity

    static PochSpec finite(QMonomial x, long n) { return {std::move(x), n}; }
    static PochSpec infinite(QMonomial x) { return {std::move(x), std::nullopt}; }
};

/// (x;q)_n = prod_{j=0}^{n-1} (1 - x q^j) at exact rational x, q; n >= 0.
Rational qpoch_value(const Rational& x, long n, const Rational& qv);

/// Extension to any integer length: (x;q)_{-n} = 1 / ((x q^{-n}; q)_n).
Rational qpoch_value_ext(const Rational& x, long n, const Rational& qv);

/// Engine-A Pochhammer of a spec; throws InfiniteLengthInEngineA on infinite length.
Rational qpoch_value(const PochSpec& spec, const Rational& qv);

/// Truncated series of (x;q)_n for x = c q^e. Finite length needs e >= 0
/// (and c != 1 when e = 0 only for recip use); infinite length needs e >= 1,
/// each factor with leading exponent beyond the order is skipped (it is
/// 1 + O(q^{order+1})).
TruncatedSeries qpoch_series(const PochSpec& spec, int order);

/// Truncated (q^r; q^m)_infinity.
TruncatedSeries qpoch_residue_series(long modulus, long residue, int order);

/// Square-root-pair collapse: (q sqrt(a), -q sqrt(a); q)_r / (sqrt(a), -sqrt(a); q)_r
/// = (1 - a q^{2r}) / (1 - a), evaluated in the rational field.
/// Throws KernelSingularity when a = 1.
Rational vwp_kernel(const Rational& a, long r, const Rational& qv);

} // namespace qseries
