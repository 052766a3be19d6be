#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "qseries/errors.hpp"

namespace qseries {

/// Arbitrary-precision exact rational. Always canonical: lowest terms, positive
/// denominator. Every arithmetic operation is exact; division by zero throws PoleHit.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw PoleHit("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw QSeriesError("unparseable rational: " + s);
        v.canonicalize();
        if (v.get_den() < 0) throw QSeriesError("negative denominator: " + s);
        return Rational(std::move(v));
    }

    /// Canonical decimal string, "num" or "num/den".
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& mpq() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw PoleHit();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    /// Exact integer power, k may be negative (0^negative throws PoleHit).
    Rational pow(long k) const {
        if (k == 0) return Rational(1);
        if (is_zero()) {
            if (k < 0) throw PoleHit("zero to a negative power");
            return Rational(0);
        }
        mpq_class base = k > 0 ? v_ : mpq_class(1 / v_);
        unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
        mpq_class num, den;
        mpz_pow_ui(num.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
        mpz_pow_ui(num.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
        num.canonicalize();
        return Rational(std::move(num));
    }

private:
    mpq_class v_;
};

inline Rational qpow(const Rational& q, long e) { return q.pow(e); }

} // namespace qseries
