#pragma once

#include <string>
#include <vector>

#include "qseries/qmonomial.hpp"
#include "qseries/rational.hpp"

namespace qseries {

/// Formal power series in q truncated at an explicit order: coefficients of
/// q^0 .. q^order, all exact rationals. Arithmetic carries order = min of the
/// operand orders, so a reported coefficient is always fully determined.
/// Values are immutable in spirit: all operations return fresh series.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {}
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order);
    /// c * q^e; e must be >= 0 (negative q-exponents never enter the series ring).
    static TruncatedSeries monomial(const Rational& c, long e, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& at(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    TruncatedSeries truncated(int order) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Multiply by c * q^e with e >= 0.
    TruncatedSeries shifted_scaled(const Rational& c, long e) const;

    /// Exact value of the truncated polynomial at a rational point.
    Rational eval_at(const Rational& qv) const;

    std::string to_json() const;
    static TruncatedSeries from_json(const std::string& text);

    /// In-place accumulate (orders must match); the one mutating helper,
    /// used by summation kernels.
    void add_in_place(const TruncatedSeries& other);

private:
    std::vector<Rational> coeffs_;
};

/// Coefficient-wise sum to order min(s1.order, s2.order).
TruncatedSeries series_add(const TruncatedSeries& s1, const TruncatedSeries& s2);

/// Cauchy product truncated at min order. Dispatches to the OpenMP kernel for
/// large orders; series_mul_serial is the reference implementation.
TruncatedSeries series_mul(const TruncatedSeries& s1, const TruncatedSeries& s2);
TruncatedSeries series_mul_serial(const TruncatedSeries& s1, const TruncatedSeries& s2);
TruncatedSeries series_mul_parallel(const TruncatedSeries& s1, const TruncatedSeries& s2);

/// Multiplicative inverse up to s.order; throws ZeroConstantTerm if s(0) = 0.
TruncatedSeries series_recip(const TruncatedSeries& s);

/// (c*q^e)^k as a monomial (exact, exponent may be negative).
QMonomial monomial_pow(const QMonomial& m, long k);

} // namespace qseries
