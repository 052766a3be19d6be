#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qseries/bailey.hpp"

#include <map>
#include <random>

using namespace qseries;

namespace {

struct Rng {
    std::mt19937_64 rng;
    explicit Rng(unsigned s) : rng(s) {}
    Rational rational() {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
        long n = 0;
        while (n == 0) n = num(rng);
        return Rational(n, den(rng));
    }
    Rational qv() {
        for (;;) {
            Rational r = rational();
            if (!r.is_one() && !(-r).is_one()) return r;
        }
    }
    long index(long cap) { return std::uniform_int_distribution<long>(0, cap)(rng); }
};

} // namespace

TEST_CASE("reordering lemma on random finitely-supported arrays") {
    // sum_{m,n,l} A(m,n,l) = sum_{n,l} sum_{m<=min(n,l)} A(m, n-m, l-m)
    Rng rng(59);
    for (int rep = 0; rep < 20; ++rep) {
        std::map<std::tuple<long, long, long>, Rational> A;
        for (int i = 0; i < 12; ++i)
            A[{rng.index(3), rng.index(3), rng.index(3)}] = rng.rational();
        auto at = [&](long m, long n, long l) {
            auto it = A.find({m, n, l});
            return it == A.end() ? Rational(0) : it->second;
        };
        Rational lhs(0);
        for (auto& [k, v] : A) lhs += v;
        Rational rhs(0);
        for (long n = 0; n <= 8; ++n)
            for (long l = 0; l <= 8; ++l)
                for (long m = 0; m <= std::min(n, l); ++m) rhs += at(m, n - m, l - m);
        CHECK(lhs == rhs);
    }
    // four-index version
    for (int rep = 0; rep < 10; ++rep) {
        std::map<std::tuple<long, long, long, long>, Rational> A;
        for (int i = 0; i < 12; ++i)
            A[{rng.index(2), rng.index(2), rng.index(2), rng.index(2)}] = rng.rational();
        auto at = [&](long m, long n, long l, long k) {
            auto it = A.find({m, n, l, k});
            return it == A.end() ? Rational(0) : it->second;
        };
        Rational lhs(0);
        for (auto& [k, v] : A) lhs += v;
        Rational rhs(0);
        for (long n = 0; n <= 6; ++n)
            for (long l = 0; l <= 6; ++l)
                for (long k = 0; k <= 6; ++k)
                    for (long m = 0; m <= std::min({n, l, k}); ++m)
                        rhs += at(m, n - m, l - m, k - m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("catalogued pairs satisfy the defining relation") {
    Rational q(2, 5), a(2, 3);
    CHECK(verify_pair(make_pair_47(a, q), 5));
    CHECK(verify_pair(make_pair_48(a, q), 5));
    CHECK(verify_pair(make_pair_unit(a, q), 5));
    CHECK(verify_pair(make_pair_57(a, q), 4));
    CHECK(verify_pair(make_pair_unit_triple(a, q), 3));
    // (0,0) of the first pair: both sides 1
    BaileyPair p = make_pair_47(a, q);
    CHECK(p.beta(0, 0, 0) == Rational(1));
    CHECK(pair_relation_rhs(p, 0, 0) == Rational(1));
}

TEST_CASE("pair sum evaluated through the very-well-poised route") {
    // the defining m-sum, rewritten with shifted parameters, is a correction-
    // power W series; both routes must agree with the closed beta
    Rng rng(61);
    for (int rep = 0; rep < 15; ++rep) {
        Rational q = rng.qv(), a = rng.rational();
        if (a.is_one()) continue;
        try {
            BaileyPair p47 = make_pair_47(a, q);
            BaileyPair p48 = make_pair_48(a, q);
            for (long n = 0; n <= 3; ++n)
                for (long l = 0; l <= 3; ++l) {
                    Rational norm = qpoch_value(q, n, q) * qpoch_value(q, l, q) *
                                    qpoch_value(a * q, n, q) * qpoch_value(a * q, l, q);
                    VwpSpec w47{QMonomial::constant(a),
                                {QMonomial::q_power(-n), QMonomial::q_power(-l)},
                                QMonomial{a, 1 + n + l}, std::min(n, l), 1};
                    Rational v47 = vwp_eval(w47, q), b47 = p47.beta(n, l, 0) * norm;
                    CHECK(v47 == b47);
                    VwpSpec w48{QMonomial::constant(a),
                                {QMonomial::q_power(-n), QMonomial::q_power(-l)},
                                QMonomial::q_power(n + l), std::min(n, l), -1};
                    Rational v48 = vwp_eval(w48, q), b48 = p48.beta(n, l, 0) * norm;
                    CHECK(v48 == b48);
                }
        } catch (const PoleHit&) {
        }
    }
}

TEST_CASE("step keeps the pair relation; the defective bracket variant breaks it") {
    Rng rng(67);
    int done = 0;
    for (int rep = 0; done < 20 && rep < 400; ++rep) {
        try {
            Rational q = rng.qv(), a = rng.rational();
            Rational b = rng.rational(), c = rng.rational();
            Rational bp = rng.rational(), cp = rng.rational();
            BaileyPair base = rep % 3 == 0   ? make_pair_unit(a, q)
                              : rep % 3 == 1 ? make_pair_47(a, q)
                                             : make_pair_48(a, q);
            bool ok = verify_pair(fbtl_step(base, b, c, bp, cp), 4);
            CHECK(ok);
            ++done;
        } catch (const PoleHit&) {
        } catch (const KernelSingularity&) {
        }
    }
    CHECK(done >= 20);

    // the defective bracket must fail for generic parameters
    int broken = 0, tried = 0;
    for (int rep = 0; tried < 10 && rep < 200; ++rep) {
        try {
            Rational q = rng.qv(), a = rng.rational();
            Rational b = rng.rational(), c = rng.rational();
            Rational bp = rng.rational(), cp = rng.rational();
            if (c == cp || b == bp || b * c == bp * cp) continue;
            BaileyPair stepped = fbtl_step(make_pair_47(a, q), b, c, bp, cp, false);
            bool bad = !verify_pair(stepped, 3);
            ++tried;
            if (bad) ++broken;
        } catch (const PoleHit&) {
        } catch (const KernelSingularity&) {
        }
    }
    CHECK(tried == 10);
    CHECK(broken == 10);
}

TEST_CASE("triple step keeps the pair relation") {
    Rng rng(71);
    int done = 0;
    for (int rep = 0; done < 8 && rep < 200; ++rep) {
        try {
            Rational q = rng.qv(), a = rng.rational();
            BaileyPair base = rep % 2 == 0 ? make_pair_unit_triple(a, q) : make_pair_57(a, q);
            BaileyPair stepped = sbtl_step(base, rng.rational(), rng.rational(), rng.rational(),
                                           rng.rational(), rng.rational(), rng.rational());
            // alpha' at m = 0 equals alpha at m = 0
            Rational a0s = stepped.alpha(0), a0b = base.alpha(0);
            bool ok = verify_pair(stepped, 3);
            CHECK(a0s == a0b);
            CHECK(ok);
            ++done;
        } catch (const PoleHit&) {
        } catch (const KernelSingularity&) {
        }
    }
    CHECK(done >= 8);
}

TEST_CASE("chain iteration: empty chain, two steps, intermediate validity") {
    Rng rng(73);
    Rational q(2, 7), a(3, 5);
    BaileyPair base = make_pair_47(a, q);
    CHECK(chain_iterate(base, {}).beta(2, 1, 0) == base.beta(2, 1, 0));
    int done = 0;
    for (int rep = 0; done < 5 && rep < 100; ++rep) {
        try {
            std::vector<std::vector<Rational>> steps = {
                {rng.rational(), rng.rational(), rng.rational(), rng.rational()},
                {rng.rational(), rng.rational(), rng.rational(), rng.rational()}};
            BaileyPair one = chain_iterate(base, {steps[0]});
            bool ok1 = verify_pair(one, 3);
            BaileyPair two = chain_iterate(base, steps);
            bool ok2 = verify_pair(two, 2);
            CHECK(ok1);
            CHECK(ok2);
            ++done;
        } catch (const PoleHit&) {
        } catch (const KernelSingularity&) {
        }
    }
    CHECK(done >= 5);
}

TEST_CASE("limit-shape bookkeeping") {
    AlphaShape p47{1, 3, -1};
    CHECK(fbtl_limit_shape(p47) == AlphaShape{3, 7, -1});
    AlphaShape p48{0, 1, -1};
    CHECK(fbtl_limit_shape(p48) == AlphaShape{2, 5, -1});
    CHECK(sbtl_limit_shape(p47) == AlphaShape{4, 9, -1});
    CHECK(fbtl_limit_shape(p47, 2) == AlphaShape{5, 11, -1});
    CHECK(sbtl_limit_shape(p47, 2) == AlphaShape{7, 15, -1});
}

TEST_CASE("gamma vanishes beyond the termination caps; all-unit choices") {
    TransformChoices unit;
    unit.arity = 2;
    unit.n_cap = 0;
    unit.l_cap = 0;
    unit.alpha = [](long m) { return Rational(m == 0 ? 1 : 0); };
    unit.delta = unit.delta_p = [](long r) { return Rational(r == 0 ? 1 : 0); };
    unit.u = unit.u_p = unit.v = unit.v_p = unit.t = unit.w = [](long) { return Rational(1); };
    CHECK(gamma_from_delta(unit, 0) == Rational(1));
    CHECK(gamma_from_delta(unit, 1) == Rational(0));
    CHECK(beta_from_alpha(unit, 0, 0) == Rational(1));
    CHECK(check_transform(unit));
}

TEST_CASE("triple pair sum through the 6W5 closed form") {
    // the defining m-sum of the triple pair is a terminating 6W5 instance:
    //   6W5(a; q^{-n}, q^{-l}, q^{-k}; q, a q^{1+n+l+k})
    // whose product form reassembles exactly the closed beta
    Rng rng(79);
    int done = 0;
    for (int rep = 0; done < 10 && rep < 100; ++rep) {
        try {
            Rational q = rng.qv(), a = rng.rational();
            BaileyPair p = make_pair_57(a, q);
            for (long n = 0; n <= 3; ++n)
                for (long l = 0; l <= 3; ++l)
                    for (long k = 0; k <= 3; ++k) {
                        VwpSpec w{QMonomial::constant(a),
                                  {QMonomial::q_power(-n), QMonomial::q_power(-l),
                                   QMonomial::q_power(-k)},
                                  QMonomial{a, 1 + n + l + k},
                                  std::min({n, l, k}),
                                  0};
                        Rational norm = qpoch_value(q, n, q) * qpoch_value(q, l, q) *
                                        qpoch_value(q, k, q) * qpoch_value(a * q, n, q) *
                                        qpoch_value(a * q, l, q) * qpoch_value(a * q, k, q);
                        Rational via_w = vwp_eval(w, q);
                        Rational closed =
                            sixphi5_closed_form(QMonomial::constant(a), QMonomial::q_power(-n),
                                                QMonomial::q_power(-l), k, q);
                        Rational beta = p.beta(n, l, k);
                        CHECK(via_w == beta * norm);
                        CHECK(closed == beta * norm);
                    }
            ++done;
        } catch (const PoleHit&) {
        } catch (const KernelSingularity&) {
        }
    }
    CHECK(done >= 10);
}

TEST_CASE("two-fold chain: m-sum form equals the composed-step evaluation") {
    // the depth-2 left side (a single terminating m-sum) must equal the
    // twice-stepped pair's beta at (M, N), normalized by (q, aq)_M (q, aq)_N
    Rational q(2, 5), a(2, 3);
    std::vector<std::vector<Rational>> steps = {
        {Rational(3, 2), Rational(5, 3), Rational(7, 4), Rational(9, 5)},
        {Rational(5, 4), Rational(7, 5), Rational(9, 7), Rational(11, 8)}};
    long M = 2, N = 3;
    for (auto make : {make_pair_47, make_pair_unit}) {
        BaileyPair base = make(a, q);
        BaileyPair chained = chain_iterate(base, steps);
        Rational msum(0);
        for (long m = 0; m <= std::min(M, N); ++m) {
            Rational t = base.alpha(m);
            Rational prod_bc(1);
            for (const auto& s : steps) {
                for (const auto& x : s) {
                    t *= qpoch_value(x, m, q) / qpoch_value(a * q / x, m, q);
                    prod_bc *= x;
                }
            }
            t *= qpoch_value(q.pow(-M), m, q) * qpoch_value(q.pow(-N), m, q) /
                 (qpoch_value(a * q.pow(1 + M), m, q) * qpoch_value(a * q.pow(1 + N), m, q));
            t *= (a.pow(4) * q.pow(4 + M + N) / prod_bc).pow(m) * q.pow(-m * m + m);
            msum += t;
        }
        Rational norm = qpoch_value(q, M, q) * qpoch_value(a * q, M, q) *
                        qpoch_value(q, N, q) * qpoch_value(a * q, N, q);
        CHECK(msum == chained.beta(M, N, 0) * norm);
        CHECK(msum == pair_relation_rhs(chained, M, N) * norm);
    }
}
