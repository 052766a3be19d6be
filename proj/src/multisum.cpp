#include "qseries/multisum.hpp"

#include "qseries/qpoch.hpp"

#include <omp.h>

#include <cmath>
#include <numeric>

namespace qseries {

namespace {

// reciprocal tables 1/(x;q)_j for j = 0..jmax, built once per summation
struct RecipTable {
    std::vector<TruncatedSeries> recip;
    std::vector<TruncatedSeries> fwd;

    static RecipTable build(const QMonomial& base, long jmax, int order, bool with_fwd) {
        RecipTable t;
        TruncatedSeries prod = TruncatedSeries::one(order);
        t.fwd.push_back(prod);
        t.recip.push_back(series_recip(prod));
        for (long j = 0; j < jmax; ++j) {
            long e = base.qexp + j;
            TruncatedSeries factor = TruncatedSeries::one(order);
            if (e <= order)
                factor = factor - TruncatedSeries::monomial(base.coeff, e, order);
            prod = series_mul_serial(prod, factor);
            t.fwd.push_back(prod);
            t.recip.push_back(series_recip(prod));
        }
        if (!with_fwd) t.fwd.clear();
        return t;
    }
};

struct Workspace {
    int order;
    QMonomial a;
    RecipTable q;   // (q;q)_j
    RecipTable aq;  // (aq;q)_j, with forward products for the triple pair numerator
};

long isqrt_floor(long v) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

TruncatedSeries pair_beta_series(PairKind kind, const std::vector<long>& heads,
                                 const Workspace& ws) {
    const int order = ws.order;
    switch (kind) {
        case PairKind::Unit2: {
            long n = heads[0], l = heads[1];
            TruncatedSeries t = series_mul(ws.q.recip[n], ws.q.recip[l]);
            t = series_mul(t, ws.aq.recip[n]);
            return series_mul(t, ws.aq.recip[l]);
        }
        case PairKind::P47:
        case PairKind::P48: {
            long n = heads[0], l = heads[1];
            TruncatedSeries t = series_mul(ws.q.recip[n], ws.q.recip[l]);
            t = series_mul(t, ws.aq.recip[n + l]);
            if (kind == PairKind::P48) t = t.shifted_scaled(Rational(1), n * l);
            return t;
        }
        case PairKind::Unit3: {
            long n = heads[0], l = heads[1], k = heads[2];
            TruncatedSeries t = series_mul(ws.q.recip[n], ws.q.recip[l]);
            t = series_mul(t, ws.q.recip[k]);
            t = series_mul(t, ws.aq.recip[n]);
            t = series_mul(t, ws.aq.recip[l]);
            return series_mul(t, ws.aq.recip[k]);
        }
        case PairKind::P57: {
            long n = heads[0], l = heads[1], k = heads[2];
            TruncatedSeries t = ws.aq.fwd[n + l + k];
            t = series_mul(t, ws.aq.recip[n + l]);
            t = series_mul(t, ws.aq.recip[n + k]);
            t = series_mul(t, ws.aq.recip[l + k]);
            t = series_mul(t, ws.q.recip[n]);
            t = series_mul(t, ws.q.recip[l]);
            return series_mul(t, ws.q.recip[k]);
        }
    }
    return TruncatedSeries::zero(order);
}

long chain_exponent(const std::vector<long>& xs, long aexp) {
    long e = 0;
    for (long x : xs) e += x * x + aexp * x;
    return e;
}

// all nondecreasing chains of the given depth with exponent <= budget
void enumerate_chains(int depth, long aexp, long budget, std::vector<long>& cur,
                      std::vector<std::vector<long>>& out) {
    if (static_cast<int>(cur.size()) == depth) {
        out.push_back(cur);
        return;
    }
    long lo = cur.empty() ? 0 : cur.back();
    for (long x = lo;; ++x) {
        cur.push_back(x);
        if (chain_exponent(cur, aexp) > budget) {
            cur.pop_back();
            break;
        }
        enumerate_chains(depth, aexp, budget, cur, out);
        cur.pop_back();
    }
}

struct Term {
    std::vector<long> ns, ls, ks;
};

std::vector<Term> enumerate_terms(const MultiSumSpec& spec, int order) {
    std::vector<std::vector<long>> chains;
    std::vector<long> cur;
    enumerate_chains(spec.chain_depth, spec.a.qexp, order, cur, chains);
    std::vector<Term> terms;
    const bool triple = spec.groups() == 3;
    for (const auto& ns : chains) {
        long en = chain_exponent(ns, spec.a.qexp);
        if (en > order) continue;
        for (const auto& ls : chains) {
            long el = en + chain_exponent(ls, spec.a.qexp);
            if (el > order) continue;
            if (!triple) {
                terms.push_back({ns, ls, {}});
                continue;
            }
            for (const auto& ks : chains) {
                if (el + chain_exponent(ks, spec.a.qexp) > order) continue;
                terms.push_back({ns, ls, ks});
            }
        }
    }
    return terms;
}

TruncatedSeries eval_term(const MultiSumSpec& spec, const Term& term, const Workspace& ws) {
    std::vector<long> heads = {term.ns[0], term.ls[0]};
    if (spec.groups() == 3) heads.push_back(term.ks[0]);
    TruncatedSeries t = pair_beta_series(spec.pair, heads, ws);
    auto chain_factors = [&](const std::vector<long>& xs) {
        for (size_t i = 0; i + 1 < xs.size(); ++i)
            t = series_mul(t, ws.q.recip[xs[i + 1] - xs[i]]);
    };
    chain_factors(term.ns);
    chain_factors(term.ls);
    if (spec.groups() == 3) chain_factors(term.ks);
    long total = std::accumulate(term.ns.begin(), term.ns.end(), 0L) +
                 std::accumulate(term.ls.begin(), term.ls.end(), 0L) +
                 std::accumulate(term.ks.begin(), term.ks.end(), 0L);
    long sq = 0;
    for (long x : term.ns) sq += x * x;
    for (long x : term.ls) sq += x * x;
    for (long x : term.ks) sq += x * x;
    return t.shifted_scaled(spec.a.coeff.pow(total), sq + spec.a.qexp * total);
}

Workspace make_workspace(const MultiSumSpec& spec, int order) {
    if (spec.a.qexp < 0) throw BoundDerivationFailure();
    if (spec.chain_depth < 1) throw QSeriesError("chain depth must be >= 1");
    long head_max = isqrt_floor(order) + 1;
    long jmax_q = 2 * head_max + 2;
    long jmax_aq = (spec.groups() == 3 ? 3 : 2) * head_max + 2;
    Workspace ws{order, spec.a,
                 RecipTable::build(QMonomial::q_power(1), jmax_q, order, false),
                 RecipTable::build(QMonomial{spec.a.coeff, spec.a.qexp + 1}, jmax_aq, order,
                                   spec.pair == PairKind::P57)};
    return ws;
}

} // namespace

TruncatedSeries multisum_series_serial(const MultiSumSpec& spec, int order) {
    Workspace ws = make_workspace(spec, order);
    auto terms = enumerate_terms(spec, order);
    TruncatedSeries acc = TruncatedSeries::zero(order);
    for (const auto& term : terms) acc.add_in_place(eval_term(spec, term, ws));
    return acc;
}

TruncatedSeries multisum_series(const MultiSumSpec& spec, int order) {
    Workspace ws = make_workspace(spec, order);
    auto terms = enumerate_terms(spec, order);
    TruncatedSeries acc = TruncatedSeries::zero(order);
    // exact rational addition commutes, so any merge order gives identical sums
#pragma omp parallel
    {
        TruncatedSeries local = TruncatedSeries::zero(order);
#pragma omp for schedule(dynamic, 4) nowait
        for (long i = 0; i < static_cast<long>(terms.size()); ++i)
            local.add_in_place(eval_term(spec, terms[static_cast<size_t>(i)], ws));
#pragma omp critical
        acc.add_in_place(local);
    }
    return acc;
}

} // namespace qseries
