#include "qseries/catalog.hpp"

#include "qseries/instances.hpp"
#include "qseries/multisum.hpp"
#include "qseries/theta.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <random>

namespace qseries {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    Rational rational() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 9);
        for (;;) {
            long n = num(rng);
            if (n == 0) continue;
            return Rational(n, den(rng));
        }
    }
    Rational qvalue() {
        for (;;) {
            Rational r = rational();
            if (r.is_zero()) continue;
            if (r.is_one() || (-r).is_one()) continue;
            return r;
        }
    }
    long cap_index(long cap) {
        std::uniform_int_distribution<long> d(0, cap);
        return d(rng);
    }

    ParamPoint point(const std::vector<std::string>& names, long cap) {
        ParamPoint pt;
        pt.qv = qvalue();
        for (const auto& n : names) pt.params.emplace(n, QMonomial::constant(rational()));
        pt.M = cap_index(cap);
        pt.N = cap_index(cap);
        pt.L = cap_index(cap);
        pt.K = cap_index(cap);
        return pt;
    }
};

// One engine-A trial body; returns a mismatch description on inequality and
// throws PoleHit/KernelSingularity to request a resample.
using TrialFn = std::function<std::optional<Mismatch>(Sampler&, long trial,
                                                      const VerificationConfig&)>;

VerificationReport run_engine_a(const std::string& id, const VerificationConfig& cfg,
                                const TrialFn& fn) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = id;
    rep.engine = 'A';
    rep.trials = cfg.trials;
    rep.seed = cfg.seed;
    std::vector<int> outcome(static_cast<size_t>(cfg.trials), 0); // 0 pass, 1 fail, 2 exhausted
    std::vector<std::optional<Mismatch>> mism(static_cast<size_t>(cfg.trials));
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < cfg.trials; ++t) {
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            Sampler smp(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(t))) +
                        static_cast<std::uint64_t>(attempt));
            try {
                auto mm = fn(smp, t, cfg);
                if (mm) {
                    mm->index = t;
                    mism[static_cast<size_t>(t)] = mm;
                    outcome[static_cast<size_t>(t)] = 1;
                }
                done = true;
            } catch (const PoleHit&) {
            } catch (const KernelSingularity&) {
            }
        }
        if (!done) outcome[static_cast<size_t>(t)] = 2;
    }
    rep.status = "pass";
    for (long t = 0; t < cfg.trials; ++t) {
        if (outcome[static_cast<size_t>(t)] != 0) {
            rep.status = outcome[static_cast<size_t>(t)] == 1 ? "fail" : "sampling-exhausted";
            if (mism[static_cast<size_t>(t)])
                rep.first_mismatch = mism[static_cast<size_t>(t)];
            else
                rep.first_mismatch = Mismatch{t, "", ""};
            break;
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::optional<Mismatch> compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    int order = std::min(lhs.order(), rhs.order());
    for (int i = 0; i <= order; ++i) {
        if (lhs.at(i) != rhs.at(i))
            return Mismatch{i, lhs.at(i).str(), rhs.at(i).str()};
    }
    return std::nullopt;
}

VerificationReport finish_engine_b(const std::string& id, int order, std::uint64_t seed,
                                   std::optional<Mismatch> mm,
                                   std::chrono::steady_clock::time_point t0,
                                   const std::string& detail = "") {
    VerificationReport rep;
    rep.id = id;
    rep.engine = 'B';
    rep.order = order;
    rep.seed = seed;
    rep.status = mm ? "fail" : "pass";
    rep.first_mismatch = std::move(mm);
    rep.detail = detail;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ------------------------------------------------------------------ engine A bodies

std::optional<Mismatch> mismatch_of(const Rational& lhs, const Rational& rhs) {
    if (lhs == rhs) return std::nullopt;
    return Mismatch{0, lhs.str(), rhs.str()};
}

TrialFn trial_transform_instance(const std::string& id) {
    return [id](Sampler& smp, long, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        const auto& inst = transform_instance(id);
        ParamPoint pt = smp.point(inst.param_names, cfg.caps);
        return mismatch_of(inst.lhs(pt), inst.rhs(pt));
    };
}

TrialFn trial_deriv_beta(const std::string& id) {
    return [id](Sampler& smp, long, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        const auto& inst = transform_instance(id);
        ParamPoint pt = smp.point(inst.param_names, cfg.caps);
        auto ch = inst.choices(pt);
        long g = inst.arity == 2 ? 3 : 2;
        for (long n = 0; n <= g; ++n)
            for (long l = 0; l <= g; ++l) {
                if (inst.arity == 2) {
                    auto mm = mismatch_of(inst.beta_closed(pt, n, l, 0),
                                          beta_from_alpha(ch, n, l));
                    if (mm) return mm;
                } else {
                    for (long k = 0; k <= g; ++k) {
                        auto mm = mismatch_of(inst.beta_closed(pt, n, l, k),
                                              beta_from_alpha(ch, n, l, k));
                        if (mm) return mm;
                    }
                }
            }
        return std::nullopt;
    };
}

TrialFn trial_deriv_gamma(const std::string& id) {
    return [id](Sampler& smp, long, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        const auto& inst = transform_instance(id);
        ParamPoint pt = smp.point(inst.param_names, cfg.caps);
        auto ch = inst.choices(pt);
        long mcap = inst.arity == 2 ? std::min(ch.n_cap, ch.l_cap)
                                    : std::min({ch.n_cap, ch.l_cap, ch.k_cap});
        if (!inst.gamma_closed) {
            // no product form exists; check the transform route anchored on the
            // closed beta instead (see catalog notes)
            Rational rhs(0);
            for (long m = 0; m <= mcap; ++m) rhs += ch.alpha(m) * gamma_from_delta(ch, m);
            return mismatch_of(inst.lhs(pt), rhs);
        }
        for (long m = 0; m <= mcap; ++m) {
            auto mm = mismatch_of(inst.gamma_closed(pt, m), gamma_from_delta(ch, m));
            if (mm) return mm;
        }
        return std::nullopt;
    };
}

TrialFn trial_thm21() {
    return [](Sampler& smp, long t, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        static const char* ids[4] = {"EQ-3.1", "EQ-3.2", "EQ-3.3", "EQ-3.4"};
        const auto& inst = transform_instance(ids[t % 4]);
        ParamPoint pt = smp.point(inst.param_names, cfg.caps);
        auto ch = inst.choices(pt);
        if (check_transform(ch)) return std::nullopt;
        return Mismatch{0, "transform sides differ", inst.id};
    };
}

TrialFn trial_thm22() {
    return [](Sampler& smp, long, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        const auto& inst = transform_instance("EQ-3.5");
        ParamPoint pt = smp.point(inst.param_names, cfg.caps);
        auto ch = inst.choices(pt);
        if (check_transform(ch)) return std::nullopt;
        return Mismatch{0, "transform sides differ", inst.id};
    };
}

TrialFn trial_pair(const std::string& which) {
    return [which](Sampler& smp, long, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        Rational qv = smp.qvalue();
        Rational a = smp.rational();
        BaileyPair p = which == "PAIR-4.7"   ? make_pair_47(a, qv)
                       : which == "PAIR-4.8" ? make_pair_48(a, qv)
                                             : make_pair_57(a, qv);
        if (!verify_pair(p, cfg.caps))
            return Mismatch{0, "pair relation violated", which};
        return std::nullopt;
    };
}

TrialFn trial_step_fbtl() {
    return [](Sampler& smp, long t, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        long cap = cfg.caps;
        Rational qv = smp.qvalue();
        Rational a = smp.rational();
        Rational b = smp.rational(), c = smp.rational();
        Rational bp = smp.rational(), cp = smp.rational();
        BaileyPair base = (t % 3 == 0)   ? make_pair_unit(a, qv)
                          : (t % 3 == 1) ? make_pair_47(a, qv)
                                         : make_pair_48(a, qv);
        BaileyPair stepped = fbtl_step(base, b, c, bp, cp);
        if (!verify_pair(stepped, cap))
            return Mismatch{0, "stepped pair violates the defining relation", base.id};
        return std::nullopt;
    };
}

TrialFn trial_step_sbtl() {
    return [](Sampler& smp, long t, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        long cap = std::min(cfg.caps, 4L);
        Rational qv = smp.qvalue();
        Rational a = smp.rational();
        Rational b = smp.rational(), c = smp.rational();
        Rational bp = smp.rational(), cp = smp.rational();
        Rational bpp = smp.rational(), cpp = smp.rational();
        BaileyPair base = (t % 2 == 0) ? make_pair_unit_triple(a, qv) : make_pair_57(a, qv);
        BaileyPair stepped = sbtl_step(base, b, c, bp, cp, bpp, cpp);
        if (!verify_pair(stepped, cap))
            return Mismatch{0, "stepped pair violates the defining relation", base.id};
        return std::nullopt;
    };
}

TrialFn trial_key45() {
    return [](Sampler& smp, long t, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        Rational qv = smp.qvalue();
        Rational a = smp.rational();
        Rational b = smp.rational(), c = smp.rational();
        Rational bp = smp.rational(), cp = smp.rational();
        long M = smp.cap_index(cfg.caps), N = smp.cap_index(cfg.caps);
        BaileyPair base = (t % 3 == 0)   ? make_pair_unit(a, qv)
                          : (t % 3 == 1) ? make_pair_47(a, qv)
                                         : make_pair_48(a, qv);
        BaileyPair stepped = fbtl_step(base, b, c, bp, cp);
        return mismatch_of(stepped.beta(M, N, 0), pair_relation_rhs(stepped, M, N));
    };
}

TrialFn trial_key55() {
    return [](Sampler& smp, long t, const VerificationConfig& cfg) -> std::optional<Mismatch> {
        Rational qv = smp.qvalue();
        Rational a = smp.rational();
        Rational b = smp.rational(), c = smp.rational();
        Rational bp = smp.rational(), cp = smp.rational();
        Rational bpp = smp.rational(), cpp = smp.rational();
        long tc = std::min(cfg.caps, 3L);
        long N = smp.cap_index(tc), L = smp.cap_index(tc), K = smp.cap_index(tc);
        BaileyPair base = (t % 2 == 0) ? make_pair_unit_triple(a, qv) : make_pair_57(a, qv);
        BaileyPair stepped = sbtl_step(base, b, c, bp, cp, bpp, cpp);
        return mismatch_of(stepped.beta(N, L, K), pair_relation_rhs(stepped, N, L, K));
    };
}

// chain theorem, double: printed two sides at depth k
Rational thm42_lhs(const BaileyPair& pair, const std::vector<std::array<Rational, 4>>& steps,
                   long M, long N) {
    const Rational& qv = pair.qv;
    const Rational& a = pair.a;
    long kk = static_cast<long>(steps.size());
    Rational sum(0);
    for (long m = 0; m <= std::min(M, N); ++m) {
        Rational t = pair.alpha(m);
        Rational prod_bc(1);
        for (const auto& s : steps) {
            t *= qpoch_value(s[0], m, qv) * qpoch_value(s[1], m, qv) *
                 qpoch_value(s[2], m, qv) * qpoch_value(s[3], m, qv);
            Rational den = qpoch_value(a * qv / s[0], m, qv) * qpoch_value(a * qv / s[1], m, qv) *
                           qpoch_value(a * qv / s[2], m, qv) * qpoch_value(a * qv / s[3], m, qv);
            if (den.is_zero()) throw PoleHit();
            t /= den;
            prod_bc *= s[0] * s[1] * s[2] * s[3];
        }
        Rational den2 = qpoch_value(a * qv.pow(1 + M), m, qv) * qpoch_value(a * qv.pow(1 + N), m, qv);
        if (den2.is_zero()) throw PoleHit();
        t *= qpoch_value(qv.pow(-M), m, qv) * qpoch_value(qv.pow(-N), m, qv) / den2;
        t *= (a.pow(2 * kk) * qv.pow(2 * kk + M + N) / prod_bc).pow(m);
        t *= qv.pow(-m * m + m);
        sum += t;
    }
    return sum;
}

Rational thm42_rhs(const BaileyPair& pair, const std::vector<std::array<Rational, 4>>& steps,
                   long M, long N) {
    const Rational& qv = pair.qv;
    const Rational& a = pair.a;
    size_t kk = steps.size();
    const auto& last = steps[kk - 1];
    auto bracket = [&](const Rational& x, const Rational& y, long n) {
        Rational den = qpoch_value(a * qv / x, n, qv) * qpoch_value(a * qv / y, n, qv);
        if (den.is_zero()) throw PoleHit();
        return qpoch_value(a * qv, n, qv) * qpoch_value(a * qv / (x * y), n, qv) / den;
    };
    Rational pre = bracket(last[0], last[1], M) * bracket(last[2], last[3], N);

    // nested sum over n_k >= ... >= n_1 >= 0 (bounded by M) and the primed chain
    std::vector<std::vector<long>> nss, lss;
    {
        std::vector<long> cur;
        std::function<void(long, std::vector<std::vector<long>>&, long)> rec =
            [&](long bound, std::vector<std::vector<long>>& out, long lo) {
                if (static_cast<long>(cur.size()) == static_cast<long>(kk)) {
                    out.push_back(cur);
                    return;
                }
                for (long x = lo; x <= bound; ++x) {
                    cur.push_back(x);
                    rec(bound, out, x);
                    cur.pop_back();
                }
            };
        rec(M, nss, 0);
        rec(N, lss, 0);
    }
    auto chain_part = [&](const std::vector<long>& xs, bool primed, long cap) {
        Rational t(1);
        for (size_t i = 0; i < kk; ++i) {
            const auto& s = steps[i];
            Rational bi = primed ? s[2] : s[0];
            Rational ci = primed ? s[3] : s[1];
            t *= qpoch_value(bi, xs[i], qv) * qpoch_value(ci, xs[i], qv);
        }
        for (size_t i = 0; i + 1 < kk; ++i) {
            Rational den = qpoch_value(qv, xs[i + 1] - xs[i], qv);
            if (den.is_zero()) throw PoleHit();
            t /= den;
        }
        const Rational bk = primed ? last[2] : last[0];
        const Rational ck = primed ? last[3] : last[1];
        Rational den = qpoch_value(bk * ck * qv.pow(-cap) / a, xs[kk - 1], qv);
        if (den.is_zero()) throw PoleHit();
        t *= qpoch_value(qv.pow(-cap), xs[kk - 1], qv) / den;
        for (size_t i = 0; i + 1 < kk; ++i) {
            const auto& s = steps[i];
            Rational bi = primed ? s[2] : s[0];
            Rational ci = primed ? s[3] : s[1];
            Rational den2 = qpoch_value(a * qv / bi, xs[i + 1], qv) *
                            qpoch_value(a * qv / ci, xs[i + 1], qv);
            if (den2.is_zero()) throw PoleHit();
            t *= qpoch_value(a * qv / (bi * ci), xs[i + 1] - xs[i], qv) / den2;
            t *= (bi * ci).pow(-xs[i]);
        }
        long total = 0, head_total = 0;
        for (size_t i = 0; i < kk; ++i) total += xs[i];
        for (size_t i = 0; i + 1 < kk; ++i) head_total += xs[i];
        t *= qv.pow(total) * a.pow(head_total);
        return t;
    };
    Rational sum(0);
    for (const auto& ns : nss)
        for (const auto& ls : lss)
            sum += chain_part(ns, false, M) * chain_part(ls, true, N) *
                   pair.beta(ns[0], ls[0], 0);
    return pre * sum;
}

TrialFn trial_fam415() {
    return [](Sampler& smp, long t, const VerificationConfig&) -> std::optional<Mismatch> {
        Rational qv = smp.qvalue();
        Rational a = smp.rational();
        std::vector<std::array<Rational, 4>> steps;
        for (int i = 0; i < 2; ++i)
            steps.push_back({smp.rational(), smp.rational(), smp.rational(), smp.rational()});
        long M = smp.cap_index(2), N = smp.cap_index(2);
        BaileyPair base = (t % 2 == 0) ? make_pair_47(a, qv) : make_pair_unit(a, qv);
        return mismatch_of(thm42_lhs(base, steps, M, N), thm42_rhs(base, steps, M, N));
    };
}

// chain theorem, triple, with the (-1)^m factor the double case does not have
Rational thm52_lhs(const BaileyPair& pair, const std::vector<std::array<Rational, 6>>& steps,
                   long N, long L, long K) {
    const Rational& qv = pair.qv;
    const Rational& a = pair.a;
    long ss = static_cast<long>(steps.size());
    Rational sum(0);
    for (long m = 0; m <= std::min({N, L, K}); ++m) {
        Rational t = pair.alpha(m);
        Rational prod_bc(1);
        for (const auto& s : steps) {
            for (int j = 0; j < 6; ++j) {
                t *= qpoch_value(s[static_cast<size_t>(j)], m, qv);
                Rational den = qpoch_value(a * qv / s[static_cast<size_t>(j)], m, qv);
                if (den.is_zero()) throw PoleHit();
                t /= den;
                prod_bc *= s[static_cast<size_t>(j)];
            }
        }
        Rational den2 = qpoch_value(a * qv.pow(1 + N), m, qv) *
                        qpoch_value(a * qv.pow(1 + L), m, qv) *
                        qpoch_value(a * qv.pow(1 + K), m, qv);
        if (den2.is_zero()) throw PoleHit();
        t *= qpoch_value(qv.pow(-N), m, qv) * qpoch_value(qv.pow(-L), m, qv) *
             qpoch_value(qv.pow(-K), m, qv) / den2;
        t *= (a.pow(3 * ss) * qv.pow(3 * ss + N + L + K) / prod_bc).pow(m);
        long e2 = 3 * (-m * m + m);
        t *= qv.pow(e2 / 2);
        if (m % 2 != 0) t = -t;
        sum += t;
    }
    return sum;
}

Rational thm52_rhs(const BaileyPair& pair, const std::vector<std::array<Rational, 6>>& steps,
                   long N, long L, long K) {
    const Rational& qv = pair.qv;
    const Rational& a = pair.a;
    size_t ss = steps.size();
    const auto& last = steps[ss - 1];
    auto bracket = [&](const Rational& x, const Rational& y, long n) {
        Rational den = qpoch_value(a * qv / x, n, qv) * qpoch_value(a * qv / y, n, qv);
        if (den.is_zero()) throw PoleHit();
        return qpoch_value(a * qv, n, qv) * qpoch_value(a * qv / (x * y), n, qv) / den;
    };
    Rational pre = bracket(last[0], last[1], N) * bracket(last[2], last[3], L) *
                   bracket(last[4], last[5], K);
    auto chains = [&](long bound) {
        std::vector<std::vector<long>> out;
        std::vector<long> cur;
        std::function<void(long)> rec = [&](long lo) {
            if (cur.size() == ss) {
                out.push_back(cur);
                return;
            }
            for (long x = lo; x <= bound; ++x) {
                cur.push_back(x);
                rec(x);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    };
    auto chain_part = [&](const std::vector<long>& xs, int group, long cap) {
        Rational t(1);
        for (size_t i = 0; i < ss; ++i) {
            const auto& s = steps[i];
            t *= qpoch_value(s[static_cast<size_t>(2 * group)], xs[i], qv) *
                 qpoch_value(s[static_cast<size_t>(2 * group + 1)], xs[i], qv);
        }
        for (size_t i = 0; i + 1 < ss; ++i) {
            Rational den = qpoch_value(qv, xs[i + 1] - xs[i], qv);
            if (den.is_zero()) throw PoleHit();
            t /= den;
        }
        Rational bs = last[static_cast<size_t>(2 * group)];
        Rational cs = last[static_cast<size_t>(2 * group + 1)];
        Rational den = qpoch_value(bs * cs * qv.pow(-cap) / a, xs[ss - 1], qv);
        if (den.is_zero()) throw PoleHit();
        t *= qpoch_value(qv.pow(-cap), xs[ss - 1], qv) / den;
        for (size_t i = 0; i + 1 < ss; ++i) {
            const auto& s = steps[i];
            Rational bi = s[static_cast<size_t>(2 * group)];
            Rational ci = s[static_cast<size_t>(2 * group + 1)];
            Rational den2 = qpoch_value(a * qv / bi, xs[i + 1], qv) *
                            qpoch_value(a * qv / ci, xs[i + 1], qv);
            if (den2.is_zero()) throw PoleHit();
            t *= qpoch_value(a * qv / (bi * ci), xs[i + 1] - xs[i], qv) / den2;
            t *= (bi * ci).pow(-xs[i]);
        }
        long total = 0, head_total = 0;
        for (size_t i = 0; i < ss; ++i) total += xs[i];
        for (size_t i = 0; i + 1 < ss; ++i) head_total += xs[i];
        t *= qv.pow(total) * a.pow(head_total);
        return t;
    };
    Rational sum(0);
    for (const auto& ns : chains(N))
        for (const auto& ls : chains(L))
            for (const auto& ks : chains(K))
                sum += chain_part(ns, 0, N) * chain_part(ls, 1, L) * chain_part(ks, 2, K) *
                       pair.beta(ns[0], ls[0], ks[0]);
    return pre * sum;
}

TrialFn trial_fam511() {
    return [](Sampler& smp, long t, const VerificationConfig&) -> std::optional<Mismatch> {
        Rational qv = smp.qvalue();
        Rational a = smp.rational();
        std::vector<std::array<Rational, 6>> steps;
        for (int i = 0; i < 2; ++i)
            steps.push_back({smp.rational(), smp.rational(), smp.rational(), smp.rational(),
                             smp.rational(), smp.rational()});
        long N = smp.cap_index(2), L = smp.cap_index(2), K = smp.cap_index(1);
        BaileyPair base = (t % 2 == 0) ? make_pair_57(a, qv) : make_pair_unit_triple(a, qv);
        return mismatch_of(thm52_lhs(base, steps, N, L, K), thm52_rhs(base, steps, N, L, K));
    };
}

TrialFn trial_sum(const std::string& which) {
    return [which](Sampler& smp, long, const VerificationConfig&) -> std::optional<Mismatch> {
        Rational qv = smp.qvalue();
        std::uniform_int_distribution<long> mdist(0, 8);
        long M = mdist(smp.rng);
        QMonomial a = QMonomial::constant(smp.rational());
        QMonomial b = QMonomial::constant(smp.rational());
        QMonomial c = QMonomial::constant(smp.rational());
        if (which == "SUM-SAALSCHUTZ") {
            QMonomial ct = QMonomial::constant(smp.rational());
            Rational direct = phi_eval(make_saalschutz_phi(a, b, M, ct), qv);
            Rational closed = saalschutz_closed_form(a, b, M, qv, ct);
            return mismatch_of(direct, closed);
        }
        if (which == "SUM-6PHI5") {
            Rational direct = vwp_eval(make_sixphi5_vwp(a, b, c, M), qv);
            Rational closed = sixphi5_closed_form(a, b, c, M, qv);
            return mismatch_of(direct, closed);
        }
        QMonomial d = QMonomial::constant(smp.rational());
        Rational direct = vwp_eval(make_jackson_vwp(a, b, c, d, M), qv);
        Rational closed = jackson_8phi7_closed_form(a, b, c, d, M, qv);
        return mismatch_of(direct, closed);
    };
}

// ------------------------------------------------------------------ engine B bodies

struct RrSpec {
    PairKind pair;
    QMonomial a;
    SpdtSpec spdt;
};

RrSpec rr_spec(const std::string& id, int k) {
    auto q1 = QMonomial::one();
    auto qq = QMonomial::q_power(1);
    if (id == "RR-4.11") return {PairKind::P47, q1, SpdtSpec(7, {0, 3}, 1, 1)};
    if (id == "RR-4.12") return {PairKind::P47, qq, SpdtSpec(7, {0, 1}, 1, 2)};
    if (id == "RR-4.13") return {PairKind::P48, q1, SpdtSpec(5, {0, 2}, 1, 1)};
    if (id == "RR-4.14") return {PairKind::P48, qq, SpdtSpec(5, {0, 1}, 1, 2)};
    if (id == "RR-5.9") return {PairKind::P57, q1, SpdtSpec(9, {0, 4}, 2, 1)};
    if (id == "RR-5.10") return {PairKind::P57, qq, SpdtSpec(9, {0, 1}, 2, 2)};
    if (id == "FAM-4.17") return {PairKind::P47, q1, SpdtSpec(4 * k + 3, {0, 2 * k + 1}, 1, 1)};
    if (id == "FAM-4.18") return {PairKind::P47, qq, SpdtSpec(4 * k + 3, {0, 1}, 1, 2)};
    if (id == "FAM-4.19") return {PairKind::P48, q1, SpdtSpec(4 * k + 1, {0, 2 * k}, 1, 1)};
    if (id == "FAM-4.20") return {PairKind::P48, qq, SpdtSpec(4 * k + 1, {0, 1}, 1, 2)};
    if (id == "FAM-5.13") return {PairKind::P57, q1, SpdtSpec(6 * k + 3, {0, 3 * k + 1}, 2, 1)};
    if (id == "FAM-5.14") return {PairKind::P57, qq, SpdtSpec(6 * k + 3, {0, 1}, 2, 2)};
    throw UnknownIdentity(id);
}

VerificationReport run_rr(const std::string& id, const VerificationConfig& cfg, int dflt_order) {
    auto t0 = std::chrono::steady_clock::now();
    int order = cfg.order > 0 ? cfg.order : dflt_order;
    RrSpec spec = rr_spec(id, 1);
    TruncatedSeries lhs = multisum_series({spec.pair, 1, spec.a}, order);
    TruncatedSeries rhs = rr_rhs_series(spec.spdt, order);
    return finish_engine_b(id, order, cfg.seed, compare_series(lhs, rhs), t0);
}

AlphaShape base_shape(PairKind kind) {
    switch (kind) {
        case PairKind::P47: return {1, 3, -1};
        case PairKind::P48: return {0, 1, -1};
        case PairKind::P57: return {1, 3, -1};
        default: throw QSeriesError("no alpha shape for the unit pairs");
    }
}

VerificationReport run_lim(const std::string& id, const VerificationConfig& cfg, int dflt_order) {
    auto t0 = std::chrono::steady_clock::now();
    int order = cfg.order > 0 ? cfg.order : dflt_order;
    PairKind kind = id == "LIM-4.9" ? PairKind::P47
                    : id == "LIM-4.10" ? PairKind::P48
                                       : PairKind::P57;
    bool triple = kind == PairKind::P57;
    AlphaShape shape = triple ? sbtl_limit_shape(base_shape(kind))
                              : fbtl_limit_shape(base_shape(kind));
    int poch_power = triple ? 3 : 2;
    const QMonomial specials[4] = {QMonomial::one(), QMonomial::q_power(1),
                                   QMonomial::q_power(2), QMonomial::constant(Rational(2, 3))};
    for (const auto& a : specials) {
        TruncatedSeries lhs = multisum_series({kind, 1, a}, order);
        TruncatedSeries rhs = alpha_sum_rhs(shape, a, poch_power, order);
        if (auto mm = compare_series(lhs, rhs))
            return finish_engine_b(id, order, cfg.seed, mm, t0, "a = " + a.str());
    }
    return finish_engine_b(id, order, cfg.seed, std::nullopt, t0);
}

VerificationReport run_chain_limit(const std::string& id, const VerificationConfig& cfg,
                                   int dflt_order, int param) {
    // FAM-4.16 / FAM-5.12 at one chain depth, general a
    auto t0 = std::chrono::steady_clock::now();
    int order = cfg.order > 0 ? cfg.order : dflt_order;
    bool triple = id == "FAM-5.12";
    std::vector<PairKind> kinds =
        triple ? std::vector<PairKind>{PairKind::P57}
               : std::vector<PairKind>{PairKind::P47, PairKind::P48};
    std::vector<QMonomial> specials = {QMonomial::one(), QMonomial::q_power(1)};
    if (!triple) specials.push_back(QMonomial::constant(Rational(2, 3)));
    for (PairKind kind : kinds) {
        AlphaShape shape = triple ? sbtl_limit_shape(base_shape(kind), param)
                                  : fbtl_limit_shape(base_shape(kind), param);
        for (const auto& a : specials) {
            TruncatedSeries lhs = multisum_series({kind, param, a}, order);
            TruncatedSeries rhs = alpha_sum_rhs(shape, a, triple ? 3 : 2, order);
            if (auto mm = compare_series(lhs, rhs))
                return finish_engine_b(id, order, cfg.seed, mm, t0, "a = " + a.str());
        }
    }
    return finish_engine_b(id, order, cfg.seed, std::nullopt, t0);
}

VerificationReport run_fam_rr(const std::string& id, const VerificationConfig& cfg,
                              int dflt_order, int param) {
    auto t0 = std::chrono::steady_clock::now();
    int order = cfg.order > 0 ? cfg.order : dflt_order;
    RrSpec spec = rr_spec(id, param);
    TruncatedSeries lhs = multisum_series({spec.pair, param, spec.a}, order);
    TruncatedSeries rhs = rr_rhs_series(spec.spdt, order);
    return finish_engine_b(id, order, cfg.seed, compare_series(lhs, rhs), t0,
                           "k = " + std::to_string(param));
}

VerificationReport run_family(const std::string& id, const VerificationConfig& cfg,
                              int dflt_order,
                              const std::function<VerificationReport(const VerificationConfig&, int)>& one) {
    auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= cfg.family_max; ++k) {
        VerificationReport rep = one(cfg, k);
        if (!rep.passed()) {
            rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0).count();
            return rep;
        }
    }
    VerificationReport rep;
    rep.id = id;
    rep.engine = 'B';
    rep.order = cfg.order > 0 ? cfg.order : dflt_order;
    rep.seed = cfg.seed;
    rep.status = "pass";
    rep.detail = "parameters 1.." + std::to_string(cfg.family_max);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<ThetaSpec> jtp_catalog_specs() {
    std::vector<ThetaSpec> specs = {{2, 0}};
    for (int k = 1; k <= 2; ++k) {
        specs.emplace_back(4 * k + 3, -1);
        specs.emplace_back(4 * k + 3, 4 * k + 1);
        specs.emplace_back(4 * k + 1, -1);
        specs.emplace_back(4 * k + 1, 4 * k - 1);
        specs.emplace_back(6 * k + 3, -1);
        specs.emplace_back(6 * k + 3, 6 * k + 1);
    }
    return specs;
}

VerificationReport run_jtp(const VerificationConfig& cfg, int dflt_order) {
    auto t0 = std::chrono::steady_clock::now();
    int order = cfg.order > 0 ? cfg.order : dflt_order;
    for (const auto& spec : jtp_catalog_specs()) {
        TruncatedSeries lhs = theta_series(spec, order);
        TruncatedSeries rhs = jtp_product(QMonomial::q_power((spec.A + spec.B) / 2), spec.A, order);
        if (auto mm = compare_series(lhs, rhs))
            return finish_engine_b("JTP", order, cfg.seed, mm, t0,
                                   "(A,B) = (" + std::to_string(spec.A) + "," +
                                       std::to_string(spec.B) + ")");
        // bilateral completion at a = 1: 1 + sum_{m>=1} (1+q^m)(-1)^m q^{(Am^2-m)/2}
        if (spec.B == -1) {
            TruncatedSeries acc = TruncatedSeries::zero(order);
            for (long m = 0;; ++m) {
                long e = (spec.A * m * m - m) / 2;
                if (m > 0 && e > order) break;
                TruncatedSeries w = vwp_weight_series(m, QMonomial::one(), order);
                acc.add_in_place(w.shifted_scaled(Rational(m % 2 == 0 ? 1 : -1), e));
            }
            if (auto mm = compare_series(acc, lhs))
                return finish_engine_b("JTP", order, cfg.seed, mm, t0,
                                       "bilateral completion A = " + std::to_string(spec.A));
        }
    }
    return finish_engine_b("JTP", order, cfg.seed, std::nullopt, t0);
}

// ------------------------------------------------------------------ registry

std::vector<IdentityRecord> build_catalog() {
    std::vector<IdentityRecord> recs;
    auto add_a = [&recs](std::string id, std::string desc, TrialFn fn) {
        IdentityRecord r;
        r.id = id;
        r.engine = 'A';
        r.description = std::move(desc);
        r.run = [id, fn](const VerificationConfig& cfg) { return run_engine_a(id, cfg, fn); };
        recs.push_back(std::move(r));
    };

    for (const char* id : {"EQ-3.1", "EQ-3.2", "EQ-3.3", "EQ-3.5"})
        add_a(id, "terminating double/triple series to very-well-poised W form", trial_transform_instance(id));
    add_a("EQ-3.4",
          "Jackson-summed closed beta double series equals the terminating transform m-sum "
          "(the W-product form of this entry is not recoverable; see docs)",
          trial_transform_instance("EQ-3.4"));
    for (const char* id : {"EQ-3.1", "EQ-3.2", "EQ-3.3", "EQ-3.4", "EQ-3.5"}) {
        std::string base(id);
        std::string tag = base.substr(3); // "3.1"
        add_a("DERIV-" + tag + "-beta", "closed beta form vs direct inner-sum evaluation",
              trial_deriv_beta(base));
        add_a("DERIV-" + tag + "-gamma", "closed gamma form vs direct double-sum evaluation",
              trial_deriv_gamma(base));
    }
    add_a("THM-2.1", "double-index transform: both sides by direct summation", trial_thm21());
    add_a("THM-2.2", "triple-index transform: both sides by direct summation", trial_thm22());
    add_a("KEY-4.5", "stepped-pair double sum equals its terminating m-sum", trial_key45());
    add_a("KEY-5.5", "stepped-pair triple sum equals its terminating m-sum", trial_key55());
    add_a("PAIR-4.7", "double pair: beta equals the defining alpha sum", trial_pair("PAIR-4.7"));
    add_a("PAIR-4.8", "double pair with q^{nl} beta", trial_pair("PAIR-4.8"));
    add_a("PAIR-5.7", "triple pair with (aq)_{n+l+k} numerator", trial_pair("PAIR-5.7"));
    add_a("STEP-4.1", "double lemma step preserves the pair relation", trial_step_fbtl());
    add_a("STEP-5.1", "triple lemma step preserves the pair relation", trial_step_sbtl());
    add_a("FAM-4.15", "two-fold double chain, unrolled nested form", trial_fam415());
    add_a("FAM-5.11", "two-fold triple chain, unrolled nested form", trial_fam511());
    add_a("SUM-SAALSCHUTZ", "balanced terminating 3phi2 product form", trial_sum("SUM-SAALSCHUTZ"));
    add_a("SUM-6PHI5", "terminating very-well-poised 6W5 product form", trial_sum("SUM-6PHI5"));
    add_a("SUM-8PHI7", "terminating balanced 8W7 product form", trial_sum("SUM-8PHI7"));

    auto add_b = [&recs](std::string id, std::string desc, int dflt,
                         std::function<VerificationReport(const VerificationConfig&)> run) {
        IdentityRecord r;
        r.id = std::move(id);
        r.engine = 'B';
        r.description = std::move(desc);
        r.default_order = dflt;
        r.run = std::move(run);
        recs.push_back(std::move(r));
    };
    auto add_fam = [&recs](std::string id, std::string desc, int dflt, std::string k1,
                           std::function<VerificationReport(const VerificationConfig&, int)> one) {
        IdentityRecord r;
        r.id = id;
        r.engine = 'B';
        r.description = std::move(desc);
        r.default_order = dflt;
        r.family = true;
        r.k1_equals = std::move(k1);
        r.run_family = one;
        r.run = [id, dflt, one](const VerificationConfig& cfg) {
            return run_family(id, cfg, dflt, one);
        };
        recs.push_back(std::move(r));
    };

    for (const char* id : {"RR-4.11", "RR-4.12", "RR-4.13", "RR-4.14"})
        add_b(id, "double series vs modular product, coefficient-wise", 50,
              [id](const VerificationConfig& cfg) { return run_rr(id, cfg, 50); });
    for (const char* id : {"RR-5.9", "RR-5.10"})
        add_b(id, "triple series vs modular product, coefficient-wise", 40,
              [id](const VerificationConfig& cfg) { return run_rr(id, cfg, 40); });
    for (const char* id : {"LIM-4.9", "LIM-4.10", "LIM-5.8"})
        add_b(id, "limit identity at a in {1, q, q^2, 2/3}", 40,
              [id](const VerificationConfig& cfg) { return run_lim(id, cfg, 40); });
    add_fam("FAM-4.16", "k-fold double chain limit identity, general a", 40, "",
            [](const VerificationConfig& cfg, int k) {
                return run_chain_limit("FAM-4.16", cfg, 40, k);
            });
    add_fam("FAM-5.12", "s-fold triple chain limit identity, general a", 30, "",
            [](const VerificationConfig& cfg, int s) {
                return run_chain_limit("FAM-5.12", cfg, 30, s);
            });
    struct FamRow { const char* id; int dflt; const char* k1; };
    for (auto [id, dflt, k1] : {FamRow{"FAM-4.17", 40, "RR-4.11"}, FamRow{"FAM-4.18", 40, "RR-4.12"},
                                FamRow{"FAM-4.19", 40, "RR-4.13"}, FamRow{"FAM-4.20", 40, "RR-4.14"},
                                FamRow{"FAM-5.13", 30, "RR-5.9"}, FamRow{"FAM-5.14", 30, "RR-5.10"}}) {
        std::string sid(id);
        add_fam(sid, std::string("chain family vs modular product; matches ") + k1 + " at depth 1",
                dflt, k1,
                [sid, d = dflt](const VerificationConfig& cfg, int k) {
                    return run_fam_rr(sid, cfg, d, k);
                });
    }
    add_b("JTP", "bilateral theta sums vs triple products; bilateral completion at a = 1", 100,
          [](const VerificationConfig& cfg) { return run_jtp(cfg, 100); });

    std::sort(recs.begin(), recs.end(),
              [](const IdentityRecord& x, const IdentityRecord& y) { return x.id < y.id; });
    return recs;
}

} // namespace

const std::vector<IdentityRecord>& catalog() {
    static const std::vector<IdentityRecord> recs = build_catalog();
    return recs;
}

const IdentityRecord& find_identity(const std::string& id) {
    for (const auto& r : catalog())
        if (r.id == id) return r;
    throw UnknownIdentity(id);
}

VerificationReport verify(const std::string& id, const VerificationConfig& cfg) {
    auto open = id.find('[');
    if (open != std::string::npos && id.back() == ']') {
        std::string base = id.substr(0, open);
        int param = std::stoi(id.substr(open + 1, id.size() - open - 2));
        return verify_family(base, param, cfg);
    }
    return find_identity(id).run(cfg);
}

VerificationReport verify_family(const std::string& base_id, int param,
                                 const VerificationConfig& cfg) {
    const auto& rec = find_identity(base_id);
    if (!rec.family || !rec.run_family) throw UnknownIdentity(base_id + "[k]");
    if (param < 1) throw QSeriesError("family parameter must be >= 1");
    VerificationReport rep = rec.run_family(cfg, param);
    rep.id = base_id + "[" + std::to_string(param) + "]";
    return rep;
}

std::string report_to_json(const VerificationReport& r, bool include_elapsed) {
    nlohmann::json j;
    j["id"] = r.id;
    j["engine"] = std::string(1, r.engine);
    j["status"] = r.status;
    if (r.engine == 'B')
        j["order"] = r.order;
    else
        j["trials"] = r.trials;
    j["seed"] = r.seed;
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"index", r.first_mismatch->index},
                               {"lhs", r.first_mismatch->lhs},
                               {"rhs", r.first_mismatch->rhs}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

std::string reports_to_json(const std::vector<VerificationReport>& rs, bool include_elapsed) {
    std::string out = "[";
    for (size_t i = 0; i < rs.size(); ++i) {
        if (i) out += ",";
        out += report_to_json(rs[i], include_elapsed);
    }
    out += "]";
    return out;
}

} // namespace qseries
