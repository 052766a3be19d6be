#include "qseries/qpoch.hpp"

namespace qseries {

Rational qpoch_value(const Rational& x, long n, const Rational& qv) {
    Rational prod(1);
    Rational factor = x;
    for (long j = 0; j < n; ++j) {
        prod *= Rational(1) - factor;
        factor *= qv;
    }
    return prod;
}

Rational qpoch_value_ext(const Rational& x, long n, const Rational& qv) {
    if (n >= 0) return qpoch_value(x, n, qv);
    // (x;q)_{-m} = 1 / prod_{j=1}^{m} (1 - x q^{-j})
    long m = -n;
    Rational den(1);
    Rational qinv = Rational(1) / qv;
    Rational factor = x * qinv;
    for (long j = 0; j < m; ++j) {
        den *= Rational(1) - factor;
        factor *= qinv;
    }
    return Rational(1) / den;
}

Rational qpoch_value(const PochSpec& spec, const Rational& qv) {
    if (!spec.length) throw InfiniteLengthInEngineA();
    return qpoch_value(spec.base.value_at(qv), *spec.length, qv);
}

TruncatedSeries qpoch_series(const PochSpec& spec, int order) {
    const Rational& c = spec.base.coeff;
    long e = spec.base.qexp;
    bool infinite = !spec.length.has_value();
    if (infinite && e < 1)
        throw NonconvergentTruncation();
    if (!infinite && e < 0)
        throw NonconvergentTruncation("finite Pochhammer factor with negative q-exponent");
    TruncatedSeries prod = TruncatedSeries::one(order);
    long n = infinite ? 0 : *spec.length;
    for (long j = 0; infinite ? (e + j <= order) : (j < n); ++j) {
        long exp = e + j;
        TruncatedSeries factor = TruncatedSeries::one(order);
        if (exp <= order)
            factor = factor - TruncatedSeries::monomial(c, exp, order);
        prod = series_mul(prod, factor);
    }
    return prod;
}

TruncatedSeries qpoch_residue_series(long modulus, long residue, int order) {
    TruncatedSeries prod = TruncatedSeries::one(order);
    for (long exp = residue; exp <= order; exp += modulus) {
        prod = series_mul(prod, TruncatedSeries::one(order) - TruncatedSeries::monomial(Rational(1), exp, order));
    }
    return prod;
}

Rational vwp_kernel(const Rational& a, long r, const Rational& qv) {
    if (a.is_one()) throw KernelSingularity();
    return (Rational(1) - a * qv.pow(2 * r)) / (Rational(1) - a);
}

} // namespace qseries
