#include "qseries/series.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace qseries {

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != order + 1)
        throw std::invalid_argument("coefficient count does not match order");
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Rational(1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, long e, int order) {
    if (e < 0) throw std::invalid_argument("negative q-exponent in series");
    TruncatedSeries s(order);
    if (e <= order) s.coeffs_[static_cast<size_t>(e)] = c;
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order >= this->order()) return *this;
    TruncatedSeries out(order);
    std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, out.coeffs_.begin());
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(order());
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_add(a, b);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_add(a, -b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::shifted_scaled(const Rational& c, long e) const {
    if (e < 0) throw std::invalid_argument("negative q-exponent in series");
    TruncatedSeries out(order());
    for (int i = 0; i + e <= order(); ++i)
        out.coeffs_[static_cast<size_t>(i + e)] = coeffs_[static_cast<size_t>(i)] * c;
    return out;
}

Rational TruncatedSeries::eval_at(const Rational& qv) const {
    Rational acc(0);
    for (int i = order(); i >= 0; --i) {
        acc = acc * qv + coeffs_[static_cast<size_t>(i)];
    }
    return acc;
}

void TruncatedSeries::add_in_place(const TruncatedSeries& other) {
    if (other.order() != order()) throw std::invalid_argument("order mismatch in add_in_place");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
}

std::string TruncatedSeries::to_json() const {
    nlohmann::json j;
    j["order"] = order();
    auto arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(c.str());
    j["coeffs"] = arr;
    return j.dump();
}

TruncatedSeries TruncatedSeries::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int order = j.at("order").get<int>();
    std::vector<Rational> cs;
    for (const auto& s : j.at("coeffs")) cs.push_back(Rational::from_string(s.get<std::string>()));
    return TruncatedSeries(order, std::move(cs));
}

TruncatedSeries series_add(const TruncatedSeries& s1, const TruncatedSeries& s2) {
    int order = std::min(s1.order(), s2.order());
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) out[static_cast<size_t>(i)] = s1.at(i) + s2.at(i);
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries series_mul_serial(const TruncatedSeries& s1, const TruncatedSeries& s2) {
    int order = std::min(s1.order(), s2.order());
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        if (s1.at(i).is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (s2.at(j).is_zero()) continue;
            out[static_cast<size_t>(i + j)] += s1.at(i) * s2.at(j);
        }
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries series_mul_parallel(const TruncatedSeries& s1, const TruncatedSeries& s2) {
    int order = std::min(s1.order(), s2.order());
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    // each output coefficient is an independent inner product
#pragma omp parallel for schedule(dynamic, 8)
    for (int k = 0; k <= order; ++k) {
        Rational acc(0);
        for (int i = 0; i <= k; ++i) {
            if (s1.at(i).is_zero()) continue;
            const Rational& b = s2.at(k - i);
            if (b.is_zero()) continue;
            acc += s1.at(i) * b;
        }
        out[static_cast<size_t>(k)] = acc;
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& s1, const TruncatedSeries& s2) {
    int order = std::min(s1.order(), s2.order());
    if (order >= 192) return series_mul_parallel(s1, s2);
    return series_mul_serial(s1, s2);
}

TruncatedSeries series_recip(const TruncatedSeries& s) {
    if (s.at(0).is_zero()) throw ZeroConstantTerm();
    int order = s.order();
    std::vector<Rational> r(static_cast<size_t>(order) + 1);
    Rational inv0 = Rational(1) / s.at(0);
    r[0] = inv0;
    for (int k = 1; k <= order; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) {
            if (s.at(j).is_zero()) continue;
            acc += s.at(j) * r[static_cast<size_t>(k - j)];
        }
        r[static_cast<size_t>(k)] = -acc * inv0;
    }
    return TruncatedSeries(order, std::move(r));
}

QMonomial monomial_pow(const QMonomial& m, long k) { return m.pow(k); }

} // namespace qseries
