#include "qseries/hypergeom.hpp"

#include <algorithm>

namespace qseries {

PhiSpec::PhiSpec(std::vector<QMonomial> num, std::vector<QMonomial> den, QMonomial arg, long M)
    : numerator_params(std::move(num)),
      denominator_params(std::move(den)),
      argument(std::move(arg)),
      termination_index(M) {
    bool has_terminator = std::any_of(
        numerator_params.begin(), numerator_params.end(),
        [M](const QMonomial& p) { return p.coeff.is_one() && p.qexp == -M; });
    if (!has_terminator)
        throw QSeriesError("PhiSpec without a q^{-M} numerator parameter");
}

namespace {

Rational safe_div(const Rational& num, const Rational& den) {
    if (den.is_zero()) throw PoleHit();
    return num / den;
}

Rational correction(long n, const Rational& qv, int power) {
    if (power == 0) return Rational(1);
    Rational base = qv.pow(n * (n - 1) / 2);
    if (n % 2 != 0) base = -base;
    return base.pow(power);
}

} // namespace

Rational phi_eval(const PhiSpec& spec, const Rational& qv) {
    if (qv.is_zero()) throw QSeriesError("phi_eval at q = 0");
    int corr = 1 + static_cast<int>(spec.denominator_params.size()) -
               static_cast<int>(spec.numerator_params.size());
    Rational z = spec.argument.value_at(qv);
    Rational sum(0);
    Rational term(1);
    // running products, updated factor by factor
    std::vector<Rational> nums, dens;
    for (const auto& p : spec.numerator_params) nums.push_back(p.value_at(qv));
    for (const auto& p : spec.denominator_params) dens.push_back(p.value_at(qv));
    Rational qn(1); // q^n
    for (long n = 0; n <= spec.termination_index; ++n) {
        if (n > 0) {
            for (auto& x : nums) {
                term *= Rational(1) - x;
                x *= qv;
            }
            Rational dfac = Rational(1) - qn; // (q;q)_n incremental factor, qn = q^{n-1} * q
            for (auto& x : dens) {
                dfac *= Rational(1) - x;
                x *= qv;
            }
            term = safe_div(term, dfac);
        }
        Rational c = correction(n, qv, corr);
        sum += term * c * z.pow(n);
        qn *= qv;
    }
    return sum;
}

Rational vwp_eval(const VwpSpec& spec, const Rational& qv) {
    if (qv.is_zero()) throw QSeriesError("vwp_eval at q = 0");
    Rational a = spec.a.value_at(qv);
    if (a.is_one()) throw KernelSingularity();
    Rational z = spec.argument.value_at(qv);
    Rational one(1);
    Rational sum(0);
    std::vector<Rational> bs, abs_;
    for (const auto& b : spec.tail_params) {
        bs.push_back(b.value_at(qv));
        abs_.push_back(a * qv / b.value_at(qv));
    }
    Rational term(1);
    for (long n = 0; n <= spec.termination_index; ++n) {
        if (n > 0) {
            Rational nf = one - a * qv.pow(n - 1);
            Rational df = one - qv.pow(n);
            for (auto& b : bs) {
                nf *= one - b;
                b *= qv;
            }
            for (auto& ab : abs_) {
                df *= one - ab;
                ab *= qv;
            }
            term *= safe_div(nf, df);
        }
        Rational kernel = safe_div(one - a * qv.pow(2 * n), one - a);
        sum += kernel * term * correction(n, qv, spec.correction_power) * z.pow(n);
    }
    return sum;
}

Rational saalschutz_closed_form(const QMonomial& a, const QMonomial& b, long M,
                                const Rational& qv, const QMonomial& c_target) {
    Rational av = a.value_at(qv), bv = b.value_at(qv), cv = c_target.value_at(qv);
    Rational num = qpoch_value(cv / av, M, qv) * qpoch_value(cv / bv, M, qv);
    Rational den = qpoch_value(cv, M, qv) * qpoch_value(cv / (av * bv), M, qv);
    return safe_div(num, den);
}

Rational sixphi5_closed_form(const QMonomial& a, const QMonomial& b, const QMonomial& c,
                             long M, const Rational& qv) {
    Rational av = a.value_at(qv), bv = b.value_at(qv), cv = c.value_at(qv);
    Rational aq = av * qv;
    Rational num = qpoch_value(aq, M, qv) * qpoch_value(aq / (bv * cv), M, qv);
    Rational den = qpoch_value(aq / bv, M, qv) * qpoch_value(aq / cv, M, qv);
    return safe_div(num, den);
}

Rational jackson_8phi7_closed_form(const QMonomial& a, const QMonomial& b, const QMonomial& c,
                                   const QMonomial& d, long M, const Rational& qv) {
    Rational av = a.value_at(qv), bv = b.value_at(qv), cv = c.value_at(qv), dv = d.value_at(qv);
    Rational aq = av * qv;
    Rational num = qpoch_value(aq, M, qv) * qpoch_value(aq / (bv * cv), M, qv) *
                   qpoch_value(aq / (bv * dv), M, qv) * qpoch_value(aq / (cv * dv), M, qv);
    Rational den = qpoch_value(aq / bv, M, qv) * qpoch_value(aq / cv, M, qv) *
                   qpoch_value(aq / dv, M, qv) * qpoch_value(aq / (bv * cv * dv), M, qv);
    return safe_div(num, den);
}

PhiSpec make_saalschutz_phi(const QMonomial& a, const QMonomial& b, long M, const QMonomial& c_target) {
    // balanced terminating 3Phi2: denominators c and a b q^{1-M} / c
    QMonomial second = a * b * QMonomial::q_power(1 - M) / c_target;
    return PhiSpec({a, b, QMonomial::q_power(-M)}, {c_target, second}, QMonomial::q_power(1), M);
}

VwpSpec make_sixphi5_vwp(const QMonomial& a, const QMonomial& b, const QMonomial& c, long M) {
    QMonomial z = a * QMonomial::q_power(1 + M) / (b * c);
    return VwpSpec{a, {b, c, QMonomial::q_power(-M)}, z, M, 0};
}

VwpSpec make_jackson_vwp(const QMonomial& a, const QMonomial& b, const QMonomial& c,
                         const QMonomial& d, long M) {
    QMonomial e = a * a * QMonomial::q_power(1 + M) / (b * c * d);
    return VwpSpec{a, {b, c, d, e, QMonomial::q_power(-M)}, QMonomial::q_power(1), M, 0};
}

} // namespace qseries
