#include "qseries/theta.hpp"

namespace qseries {

TruncatedSeries theta_series(const ThetaSpec& spec, int order) {
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    auto add_term = [&](long m) {
        long e2 = spec.A * m * m + spec.B * m;
        long e = e2 / 2;
        if (e <= order) {
            if (m % 2 == 0)
                out[static_cast<size_t>(e)] += Rational(1);
            else
                out[static_cast<size_t>(e)] -= Rational(1);
            return true;
        }
        return false;
    };
    add_term(0);
    for (long m = 1;; ++m) {
        bool any = add_term(m);
        any = add_term(-m) || any;
        if (!any) break;
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries jtp_product(const QMonomial& z, long base_modulus, int order) {
    if (base_modulus < 1) throw QSeriesError("triple product needs a positive base");
    long e = z.qexp;
    if (e < 0 || base_modulus - e < 0)
        throw NonconvergentTruncation("triple product factor with negative exponent");
    auto residue_poch = [&](const Rational& c, long r) {
        TruncatedSeries prod = TruncatedSeries::one(order);
        for (long exp = r; exp <= order; exp += base_modulus)
            prod = series_mul(prod,
                              TruncatedSeries::one(order) - TruncatedSeries::monomial(c, exp, order));
        return prod;
    };
    TruncatedSeries out = qpoch_residue_series(base_modulus, base_modulus, order);
    out = series_mul(out, residue_poch(z.coeff, e));
    out = series_mul(out, residue_poch(Rational(1) / z.coeff, base_modulus - e));
    return out;
}

SpdtSpec::SpdtSpec(long m, std::set<long> S, int pow, long pref_qexp)
    : modulus(m), poch_power(pow), prefactor_qexp(pref_qexp) {
    if (m < 1) throw QSeriesError("spdt modulus must be positive");
    if (S.empty()) throw QSeriesError("spdt with empty residue set");
    if (pow < 0 || pref_qexp < 1) throw QSeriesError("bad spdt prefactor");
    for (long r : S) {
        long rr = ((r % m) + m) % m;
        residues.insert(rr);
        residues.insert((m - rr) % m);
    }
}

TruncatedSeries spdt_series(const SpdtSpec& spec, int order) {
    TruncatedSeries theta = TruncatedSeries::one(order);
    for (long n = 1; n <= order; ++n) {
        long r = n % spec.modulus;
        if (spec.residues.count(r) || spec.residues.count((spec.modulus - r) % spec.modulus))
            theta = series_mul(theta, TruncatedSeries::one(order) -
                                          TruncatedSeries::monomial(Rational(1), n, order));
    }
    TruncatedSeries partition =
        series_recip(qpoch_series(PochSpec::infinite(QMonomial::q_power(1)), order));
    return series_mul(theta, partition);
}

TruncatedSeries rr_rhs_series(const SpdtSpec& spec, int order) {
    TruncatedSeries out = spdt_series(spec, order);
    TruncatedSeries pre = series_recip(
        qpoch_series(PochSpec::infinite(QMonomial::q_power(spec.prefactor_qexp)), order));
    for (int i = 0; i < spec.poch_power; ++i) out = series_mul(out, pre);
    return out;
}

TruncatedSeries vwp_weight_series(long m, const QMonomial& a, int order) {
    if (a.is_one()) {
        // (1-a) cancellation: weight -> 1 (m=0) or 1 + q^m
        TruncatedSeries w = TruncatedSeries::one(order);
        if (m > 0 && m <= order)
            w = w + TruncatedSeries::monomial(Rational(1), m, order);
        return w;
    }
    if (a.qexp < 0) throw NonconvergentTruncation("weight at negative q-exponent");
    TruncatedSeries num = qpoch_series(PochSpec::finite(a, m), order);
    if (2 * m + a.qexp <= order)
        num = series_mul(num, TruncatedSeries::one(order) -
                                  TruncatedSeries::monomial(a.coeff, 2 * m + a.qexp, order));
    TruncatedSeries den = qpoch_series(PochSpec::finite(QMonomial::q_power(1), m), order);
    den = series_mul(den, TruncatedSeries::one(order) -
                              TruncatedSeries::monomial(a.coeff, a.qexp, order));
    return series_mul(num, series_recip(den));
}

TruncatedSeries alpha_sum_rhs(const AlphaShape& shape, const QMonomial& a,
                              int poch_power, int order) {
    TruncatedSeries acc = TruncatedSeries::zero(order);
    for (long m = 0;; ++m) {
        long e2 = shape.A * m * m + shape.B * m;
        if (e2 % 2 != 0) throw QSeriesError("odd theta exponent");
        long e = e2 / 2 + shape.a_pow * m * a.qexp;
        if (m > 0 && e > order) break;
        TruncatedSeries t = vwp_weight_series(m, a, order);
        Rational coeff = a.coeff.pow(shape.a_pow * m);
        if (m % 2 != 0) coeff = -coeff;
        acc.add_in_place(t.shifted_scaled(coeff, e));
    }
    QMonomial aq{a.coeff, a.qexp + 1};
    TruncatedSeries pre = series_recip(qpoch_series(PochSpec::infinite(aq), order));
    for (int i = 0; i < poch_power; ++i) acc = series_mul(acc, pre);
    return acc;
}

} // namespace qseries
