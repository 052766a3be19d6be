#pragma once

#include <string>

#include "qseries/rational.hpp"

namespace qseries {

/// A parameter value of shape coeff * q^qexp with coeff != 0. The exponent may be
/// negative (terminating parameters like q^{-M} live here, never inside a series).
struct QMonomial {
    Rational coeff;
    long qexp = 0;

    QMonomial() : coeff(1) {}
    QMonomial(Rational c, long e) : coeff(std::move(c)), qexp(e) {
        if (coeff.is_zero()) throw QSeriesError("QMonomial with zero coefficient");
    }

    static QMonomial one() { return {Rational(1), 0}; }
    static QMonomial q_power(long e) { return {Rational(1), e}; }
    static QMonomial constant(Rational c) { return {std::move(c), 0}; }

    bool is_one() const { return qexp == 0 && coeff.is_one(); }

    /// Exact value at a rational q.
    Rational value_at(const Rational& qv) const { return coeff * qv.pow(qexp); }

    QMonomial pow(long k) const { return {coeff.pow(k), qexp * k}; }

    friend QMonomial operator*(const QMonomial& a, const QMonomial& b) {
        return {a.coeff * b.coeff, a.qexp + b.qexp};
    }
    friend QMonomial operator/(const QMonomial& a, const QMonomial& b) {
        return {a.coeff / b.coeff, a.qexp - b.qexp};
    }
    friend bool operator==(const QMonomial& a, const QMonomial& b) {
        return a.qexp == b.qexp && a.coeff == b.coeff;
    }

    std::string str() const {
        if (qexp == 0) return coeff.str();
        return coeff.str() + "*q^" + std::to_string(qexp);
    }
};

} // namespace qseries
