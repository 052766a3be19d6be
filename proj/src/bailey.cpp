#include "qseries/bailey.hpp"

#include <algorithm>

namespace qseries {

namespace {

Rational one_seq(long) { return Rational(1); }

Rational safe_div(const Rational& num, const Rational& den) {
    if (den.is_zero()) throw PoleHit();
    return num / den;
}

} // namespace

Rational beta_from_alpha(const TransformChoices& ch, long n, long l, long k) {
    Rational sum(0);
    long cap = ch.arity == 2 ? std::min(n, l) : std::min({n, l, k});
    for (long m = 0; m <= cap; ++m) {
        Rational term = ch.alpha(m) * ch.u(n - m) * ch.u_p(l - m) * ch.v(n + m) * ch.v_p(l + m);
        if (ch.arity == 2) {
            term *= ch.t(n - l) * ch.w(l + n);
        } else {
            term *= ch.u_pp(k - m) * ch.v_pp(k + m);
        }
        sum += term;
    }
    return sum;
}

Rational gamma_from_delta(const TransformChoices& ch, long m) {
    Rational sum(0);
    if (ch.arity == 2) {
        for (long n = m; n <= ch.n_cap; ++n) {
            Rational dn = ch.delta(n);
            if (dn.is_zero()) continue;
            for (long l = m; l <= ch.l_cap; ++l) {
                Rational dl = ch.delta_p(l);
                if (dl.is_zero()) continue;
                sum += dn * dl * ch.u(n - m) * ch.u_p(l - m) * ch.v(n + m) * ch.v_p(l + m) *
                       ch.t(n - l) * ch.w(l + n);
            }
        }
    } else {
        for (long n = m; n <= ch.n_cap; ++n) {
            Rational dn = ch.delta(n);
            if (dn.is_zero()) continue;
            for (long l = m; l <= ch.l_cap; ++l) {
                Rational dl = ch.delta_p(l);
                if (dl.is_zero()) continue;
                for (long k = m; k <= ch.k_cap; ++k) {
                    Rational dk = ch.delta_pp(k);
                    if (dk.is_zero()) continue;
                    sum += dn * dl * dk * ch.u(n - m) * ch.u_p(l - m) * ch.u_pp(k - m) *
                           ch.v(n + m) * ch.v_p(l + m) * ch.v_pp(k + m);
                }
            }
        }
    }
    return sum;
}

bool check_transform(const TransformChoices& ch) {
    long mcap = ch.arity == 2 ? std::min(ch.n_cap, ch.l_cap)
                              : std::min({ch.n_cap, ch.l_cap, ch.k_cap});
    Rational lhs(0);
    for (long m = 0; m <= mcap; ++m) lhs += ch.alpha(m) * gamma_from_delta(ch, m);
    Rational rhs(0);
    if (ch.arity == 2) {
        for (long n = 0; n <= ch.n_cap; ++n)
            for (long l = 0; l <= ch.l_cap; ++l)
                rhs += beta_from_alpha(ch, n, l) * ch.delta(n) * ch.delta_p(l);
    } else {
        for (long n = 0; n <= ch.n_cap; ++n)
            for (long l = 0; l <= ch.l_cap; ++l)
                for (long k = 0; k <= ch.k_cap; ++k)
                    rhs += beta_from_alpha(ch, n, l, k) * ch.delta(n) * ch.delta_p(l) * ch.delta_pp(k);
    }
    return lhs == rhs;
}

AlphaShape fbtl_limit_shape(const AlphaShape& s, long folds) {
    return {s.a_pow + 2 * folds, s.A + 4 * folds, s.B};
}

AlphaShape sbtl_limit_shape(const AlphaShape& s, long folds) {
    return {s.a_pow + 3 * folds, s.A + 6 * folds, s.B};
}

Rational vwp_weight(const Rational& a, long m, const Rational& qv) {
    if (a.is_one()) throw KernelSingularity();
    return qpoch_value(a, m, qv) * (Rational(1) - a * qv.pow(2 * m)) /
           (qpoch_value(qv, m, qv) * (Rational(1) - a));
}

namespace {

Rational half_power(const Rational& qv, long num2) {
    // q^{num2/2}, num2 even by construction of the catalogued exponents
    if (num2 % 2 != 0) throw QSeriesError("odd half-exponent");
    return qv.pow(num2 / 2);
}

} // namespace

BaileyPair make_pair_unit(const Rational& a, const Rational& qv) {
    BaileyPair p;
    p.arity = 2;
    p.id = "UNIT";
    p.a = a;
    p.qv = qv;
    p.alpha = [](long m) { return Rational(m == 0 ? 1 : 0); };
    p.beta = [a, qv](long n, long l, long) {
        return safe_div(Rational(1), qpoch_value(qv, n, qv) * qpoch_value(qv, l, qv) *
                                         qpoch_value(a * qv, n, qv) * qpoch_value(a * qv, l, qv));
    };
    return p;
}

BaileyPair make_pair_unit_triple(const Rational& a, const Rational& qv) {
    BaileyPair p;
    p.arity = 3;
    p.id = "UNIT3";
    p.a = a;
    p.qv = qv;
    p.alpha = [](long m) { return Rational(m == 0 ? 1 : 0); };
    p.beta = [a, qv](long n, long l, long k) {
        return safe_div(Rational(1),
                        qpoch_value(qv, n, qv) * qpoch_value(qv, l, qv) * qpoch_value(qv, k, qv) *
                            qpoch_value(a * qv, n, qv) * qpoch_value(a * qv, l, qv) *
                            qpoch_value(a * qv, k, qv));
    };
    return p;
}

BaileyPair make_pair_47(const Rational& a, const Rational& qv) {
    BaileyPair p;
    p.arity = 2;
    p.id = "PAIR-4.7";
    p.a = a;
    p.qv = qv;
    p.alpha = [a, qv](long m) {
        Rational w = vwp_weight(a, m, qv);
        Rational val = w * a.pow(m) * half_power(qv, 3 * m * m - m);
        return m % 2 == 0 ? val : -val;
    };
    p.beta = [a, qv](long n, long l, long) {
        return safe_div(Rational(1), qpoch_value(qv * a, n + l, qv) * qpoch_value(qv, n, qv) *
                                         qpoch_value(qv, l, qv));
    };
    return p;
}

BaileyPair make_pair_48(const Rational& a, const Rational& qv) {
    BaileyPair p;
    p.arity = 2;
    p.id = "PAIR-4.8";
    p.a = a;
    p.qv = qv;
    p.alpha = [a, qv](long m) {
        Rational val = vwp_weight(a, m, qv) * half_power(qv, m * m - m);
        return m % 2 == 0 ? val : -val;
    };
    p.beta = [a, qv](long n, long l, long) {
        return safe_div(qv.pow(n * l), qpoch_value(qv * a, n + l, qv) * qpoch_value(qv, n, qv) *
                                           qpoch_value(qv, l, qv));
    };
    return p;
}

BaileyPair make_pair_57(const Rational& a, const Rational& qv) {
    BaileyPair p;
    p.arity = 3;
    p.id = "PAIR-5.7";
    p.a = a;
    p.qv = qv;
    p.alpha = [a, qv](long m) {
        Rational val = vwp_weight(a, m, qv) * a.pow(m) * half_power(qv, 3 * m * m - m);
        return m % 2 == 0 ? val : -val;
    };
    p.beta = [a, qv](long n, long l, long k) {
        Rational num = qpoch_value(a * qv, n + l + k, qv);
        Rational den = qpoch_value(qv * a, n + l, qv) * qpoch_value(qv * a, n + k, qv) *
                       qpoch_value(qv * a, l + k, qv) * qpoch_value(qv, n, qv) *
                       qpoch_value(qv, l, qv) * qpoch_value(qv, k, qv);
        return safe_div(num, den);
    };
    return p;
}

Rational pair_relation_rhs(const BaileyPair& pair, long n, long l, long k) {
    const Rational& a = pair.a;
    const Rational& qv = pair.qv;
    Rational sum(0);
    long cap = pair.arity == 2 ? std::min(n, l) : std::min({n, l, k});
    for (long m = 0; m <= cap; ++m) {
        Rational den = qpoch_value(qv, n - m, qv) * qpoch_value(qv, l - m, qv) *
                       qpoch_value(a * qv, n + m, qv) * qpoch_value(a * qv, l + m, qv);
        if (pair.arity == 3)
            den *= qpoch_value(qv, k - m, qv) * qpoch_value(a * qv, k + m, qv);
        sum += safe_div(pair.alpha(m), den);
    }
    return sum;
}

bool verify_pair(const BaileyPair& pair, long index_cap) {
    for (long n = 0; n <= index_cap; ++n) {
        for (long l = 0; l <= index_cap; ++l) {
            if (pair.arity == 2) {
                if (pair.beta(n, l, 0) != pair_relation_rhs(pair, n, l)) return false;
            } else {
                for (long k = 0; k <= index_cap; ++k)
                    if (pair.beta(n, l, k) != pair_relation_rhs(pair, n, l, k)) return false;
            }
        }
    }
    return true;
}

BaileyPair fbtl_step(const BaileyPair& pair, const Rational& b, const Rational& c,
                     const Rational& bp, const Rational& cp, bool corrected) {
    if (pair.arity != 2) throw QSeriesError("fbtl_step needs a double-index pair");
    const Rational a = pair.a;
    const Rational qv = pair.qv;
    BaileyPair out = pair;
    out.id = pair.id + "+fbtl";
    auto alpha_in = pair.alpha;
    out.alpha = [=](long m) {
        Rational num = qpoch_value(b, m, qv) * qpoch_value(c, m, qv) * qpoch_value(bp, m, qv) *
                       qpoch_value(cp, m, qv) * (a * a * qv * qv / (b * c * bp * cp)).pow(m);
        Rational den = qpoch_value(qv * a / b, m, qv) * qpoch_value(qv * a / c, m, qv) *
                       qpoch_value(qv * a / bp, m, qv) * qpoch_value(qv * a / cp, m, qv);
        return safe_div(num, den) * alpha_in(m);
    };
    auto beta_in = pair.beta;
    out.beta = [=](long M, long N, long) {
        // the printed sum runs to infinity; 1/(q;q)_{M-n} truncates it at n <= M
        Rational sum(0);
        Rational denM = qpoch_value(qv * a / b, M, qv) * qpoch_value(qv * a / c, M, qv);
        Rational denN = corrected
                            ? qpoch_value(qv * a / bp, N, qv) * qpoch_value(qv * a / cp, N, qv)
                            : qpoch_value(qv * a / b, N, qv) * qpoch_value(qv * a / c, N, qv);
        Rational zn = qv * a / (b * c);
        Rational zl = qv * a / (bp * cp);
        Rational zl_inner = corrected ? qv * a / (bp * cp) : qv * a / (bp * c);
        for (long n = 0; n <= M; ++n) {
            Rational tn = qpoch_value(b, n, qv) * qpoch_value(c, n, qv) *
                          qpoch_value(zn, M - n, qv) * zn.pow(n);
            tn = safe_div(tn, denM * qpoch_value(qv, M - n, qv));
            for (long l = 0; l <= N; ++l) {
                Rational tl = qpoch_value(bp, l, qv) * qpoch_value(cp, l, qv) *
                              qpoch_value(zl_inner, N - l, qv) * zl.pow(l);
                tl = safe_div(tl, denN * qpoch_value(qv, N - l, qv));
                sum += tn * tl * beta_in(n, l, 0);
            }
        }
        return sum;
    };
    return out;
}

BaileyPair sbtl_step(const BaileyPair& pair, const Rational& b, const Rational& c,
                     const Rational& bp, const Rational& cp,
                     const Rational& bpp, const Rational& cpp) {
    if (pair.arity != 3) throw QSeriesError("sbtl_step needs a triple-index pair");
    const Rational a = pair.a;
    const Rational qv = pair.qv;
    BaileyPair out = pair;
    out.id = pair.id + "+sbtl";
    auto alpha_in = pair.alpha;
    out.alpha = [=](long m) {
        Rational bprod = b * c * bp * cp * bpp * cpp;
        Rational num = qpoch_value(b, m, qv) * qpoch_value(c, m, qv) * qpoch_value(bp, m, qv) *
                       qpoch_value(cp, m, qv) * qpoch_value(bpp, m, qv) * qpoch_value(cpp, m, qv) *
                       (a.pow(3) * qv.pow(3) / bprod).pow(m);
        Rational den = qpoch_value(qv * a / b, m, qv) * qpoch_value(qv * a / c, m, qv) *
                       qpoch_value(qv * a / bp, m, qv) * qpoch_value(qv * a / cp, m, qv) *
                       qpoch_value(qv * a / bpp, m, qv) * qpoch_value(qv * a / cpp, m, qv);
        return safe_div(num, den) * alpha_in(m);
    };
    auto beta_in = pair.beta;
    out.beta = [=](long N, long L, long K) {
        Rational sum(0);
        Rational denN = qpoch_value(qv * a / b, N, qv) * qpoch_value(qv * a / c, N, qv);
        Rational denL = qpoch_value(qv * a / bp, L, qv) * qpoch_value(qv * a / cp, L, qv);
        Rational denK = qpoch_value(qv * a / bpp, K, qv) * qpoch_value(qv * a / cpp, K, qv);
        Rational zn = qv * a / (b * c);
        Rational zl = qv * a / (bp * cp);
        Rational zk = qv * a / (bpp * cpp);
        for (long n = 0; n <= N; ++n) {
            Rational tn = safe_div(qpoch_value(b, n, qv) * qpoch_value(c, n, qv) *
                                       qpoch_value(zn, N - n, qv) * zn.pow(n),
                                   denN * qpoch_value(qv, N - n, qv));
            for (long l = 0; l <= L; ++l) {
                Rational tl = safe_div(qpoch_value(bp, l, qv) * qpoch_value(cp, l, qv) *
                                           qpoch_value(zl, L - l, qv) * zl.pow(l),
                                       denL * qpoch_value(qv, L - l, qv));
                for (long k = 0; k <= K; ++k) {
                    Rational tk = safe_div(qpoch_value(bpp, k, qv) * qpoch_value(cpp, k, qv) *
                                               qpoch_value(zk, K - k, qv) * zk.pow(k),
                                           denK * qpoch_value(qv, K - k, qv));
                    sum += tn * tl * tk * beta_in(n, l, k);
                }
            }
        }
        return sum;
    };
    return out;
}

BaileyPair chain_iterate(const BaileyPair& pair,
                         const std::vector<std::vector<Rational>>& steps) {
    BaileyPair cur = pair;
    for (const auto& s : steps) {
        if (cur.arity == 2) {
            if (s.size() != 4) throw QSeriesError("FBTL step needs 4 parameters");
            cur = fbtl_step(cur, s[0], s[1], s[2], s[3]);
        } else {
            if (s.size() != 6) throw QSeriesError("SBTL step needs 6 parameters");
            cur = sbtl_step(cur, s[0], s[1], s[2], s[3], s[4], s[5]);
        }
    }
    return cur;
}

} // namespace qseries
