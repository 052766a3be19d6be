// Acceptance suite: runs every exit criterion at its stated strength and
// prints one pass/fail line per criterion. Everything is exact equality;
// there are no tolerances anywhere.
#include "qseries/catalog.hpp"
#include "qseries/instances.hpp"
#include "qseries/multisum.hpp"
#include "qseries/theta.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace qseries;

namespace {

int failures = 0;

void report(const char* name, bool ok, double ms) {
    std::printf("%-66s %s  (%.0f ms)\n", name, ok ? "PASS" : "FAIL", ms);
    if (!ok) ++failures;
}

template <typename F>
void criterion(const char* name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
        ok = false;
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
    report(name, ok, ms);
}

bool all_pass(std::initializer_list<const char*> ids, const VerificationConfig& cfg) {
    for (const char* id : ids) {
        auto rep = verify(id, cfg);
        if (!rep.passed()) {
            std::printf("  %s: %s", id, rep.status.c_str());
            if (rep.first_mismatch)
                std::printf(" at %ld: %s != %s", rep.first_mismatch->index,
                            rep.first_mismatch->lhs.c_str(), rep.first_mismatch->rhs.c_str());
            std::printf("\n");
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    // 1. pair relations at caps 6 (double) / 4 (triple), 20 random points each
    criterion("1. pair relations (caps 6/4, 20 points, exact)", [] {
        VerificationConfig c2;
        c2.trials = 20;
        c2.caps = 6;
        if (!all_pass({"PAIR-4.7", "PAIR-4.8"}, c2)) return false;
        VerificationConfig c3;
        c3.trials = 20;
        c3.caps = 4;
        return all_pass({"PAIR-5.7"}, c3);
    });

    // 2. generic transform checks, 50 points, caps 3
    criterion("2. transform theorems (50 points, caps 3, exact)", [] {
        VerificationConfig cfg;
        cfg.trials = 50;
        cfg.caps = 3;
        return all_pass({"THM-2.1", "THM-2.2"}, cfg);
    });

    // 3. terminating identities, 50 trials each at caps 3
    criterion("3. terminating identities EQ-3.1..3.5, KEY-4.5, KEY-5.5 (50 trials)", [] {
        VerificationConfig cfg;
        cfg.trials = 50;
        cfg.caps = 3;
        return all_pass({"EQ-3.1", "EQ-3.2", "EQ-3.3", "EQ-3.4", "EQ-3.5", "KEY-4.5", "KEY-5.5"},
                        cfg);
    });

    // 4. lemma steps preserve the pair relation at caps 4; the defective
    //    second-bracket variant must fail and the corrected one pass
    criterion("4. lemma steps at caps 4 + defective-bracket negative control", [] {
        VerificationConfig cfg;
        cfg.trials = 20;
        cfg.caps = 4;
        if (!all_pass({"STEP-4.1", "STEP-5.1"}, cfg)) return false;
        std::mt19937_64 rng(20240817);
        auto rnd = [&rng] {
            std::uniform_int_distribution<long> num(2, 9), den(1, 9);
            return Rational(num(rng), den(rng));
        };
        int checked = 0, broken = 0;
        while (checked < 5) {
            try {
                Rational q(2, 5);
                Rational a = rnd(), b = rnd(), c = rnd(), bp = rnd(), cp = rnd();
                // the defect collapses to the corrected form at degenerate choices
                if (c == cp || b == bp || b * c == bp * cp || a.is_one()) continue;
                BaileyPair good = fbtl_step(make_pair_47(a, q), b, c, bp, cp, true);
                BaileyPair bad = fbtl_step(make_pair_47(a, q), b, c, bp, cp, false);
                if (!verify_pair(good, 4)) return false;
                if (!verify_pair(bad, 4)) ++broken;
                ++checked;
            } catch (const PoleHit&) {
            } catch (const KernelSingularity&) {
            }
        }
        return broken == checked;
    });

    // 5. coefficient match to order 50 / 40, with the frozen leading values
    criterion("5. double/triple series identities to order 50/40 + frozen values", [] {
        VerificationConfig c50;
        c50.order = 50;
        if (!all_pass({"RR-4.11", "RR-4.12", "RR-4.13", "RR-4.14"}, c50)) return false;
        VerificationConfig c40;
        c40.order = 40;
        if (!all_pass({"RR-5.9", "RR-5.10"}, c40)) return false;
        TruncatedSeries s411 = multisum_series({PairKind::P47, 1, QMonomial::one()}, 4);
        const long expect411[] = {1, 2, 5, 9, 17};
        for (int i = 0; i <= 4; ++i)
            if (s411.at(i) != Rational(expect411[i])) return false;
        TruncatedSeries s413 = multisum_series({PairKind::P48, 1, QMonomial::one()}, 2);
        const long expect413[] = {1, 2, 4};
        for (int i = 0; i <= 2; ++i)
            if (s413.at(i) != Rational(expect413[i])) return false;
        return true;
    });

    // 6. limit identities with general a to order 40
    criterion("6. limit identities at a in {1, q, q^2, 2/3} to order 40", [] {
        VerificationConfig cfg;
        cfg.order = 40;
        return all_pass({"LIM-4.9", "LIM-4.10", "LIM-5.8"}, cfg);
    });

    // 7. families at depth 1, 2; depth-1 bit-identical to the plain records
    criterion("7. chain families to order 40/30; depth 1 equals the base records", [] {
        VerificationConfig c40;
        c40.order = 40;
        c40.family_max = 2;
        if (!all_pass({"FAM-4.16", "FAM-4.17", "FAM-4.18", "FAM-4.19", "FAM-4.20"}, c40))
            return false;
        VerificationConfig c30;
        c30.order = 30;
        c30.family_max = 2;
        if (!all_pass({"FAM-5.12", "FAM-5.13", "FAM-5.14"}, c30)) return false;
        struct Row { PairKind pair; QMonomial a; SpdtSpec spdt; int order; };
        const Row rows[] = {
            {PairKind::P47, QMonomial::one(), SpdtSpec(7, {0, 3}, 1, 1), 40},
            {PairKind::P47, QMonomial::q_power(1), SpdtSpec(7, {0, 1}, 1, 2), 40},
            {PairKind::P48, QMonomial::one(), SpdtSpec(5, {0, 2}, 1, 1), 40},
            {PairKind::P48, QMonomial::q_power(1), SpdtSpec(5, {0, 1}, 1, 2), 40},
            {PairKind::P57, QMonomial::one(), SpdtSpec(9, {0, 4}, 2, 1), 30},
            {PairKind::P57, QMonomial::q_power(1), SpdtSpec(9, {0, 1}, 2, 2), 30},
        };
        for (const auto& row : rows) {
            TruncatedSeries depth1 = multisum_series({row.pair, 1, row.a}, row.order);
            if (!(depth1 == rr_rhs_series(row.spdt, row.order))) return false;
        }
        return true;
    });

    // 8. summation theorems: closed form == direct summation, 50 instances, M <= 8
    criterion("8. summation theorems on 50 terminating instances (index <= 8)", [] {
        VerificationConfig cfg;
        cfg.trials = 50;
        return all_pass({"SUM-SAALSCHUTZ", "SUM-6PHI5", "SUM-8PHI7"}, cfg);
    });

    // 9. theta <-> triple product to order 100 + bilateral completion
    criterion("9. triple-product and bilateral completion to order 100", [] {
        VerificationConfig cfg;
        cfg.order = 100;
        return all_pass({"JTP"}, cfg);
    });

    // 10. determinism: byte-identical aggregate JSON under one seed
    criterion("10. byte-identical reports for identical (id, config, seed)", [] {
        VerificationConfig cfg;
        cfg.seed = 42;
        cfg.trials = 8;
        cfg.caps = 2;
        cfg.order = 14;
        cfg.family_max = 1;
        std::string first, second;
        for (int round = 0; round < 2; ++round) {
            std::vector<VerificationReport> reports;
            for (const auto& rec : catalog()) reports.push_back(rec.run(cfg));
            (round == 0 ? first : second) = reports_to_json(reports);
        }
        return !first.empty() && first == second;
    });

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass"
                                      : "acceptance: FAILURES present");
    return failures == 0 ? 0 : 1;
}
