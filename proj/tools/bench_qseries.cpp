// Compares the serial reference kernels against the OpenMP ones and reports
// speedups. Results must be bit-identical (exact arithmetic); timing is the
// only thing allowed to differ.
#include "qseries/multisum.hpp"
#include "qseries/qpoch.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace qseries;

namespace {

template <typename F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    int order = argc > 1 ? std::atoi(argv[1]) : 160;
    std::printf("threads available: %d, order %d\n", omp_get_max_threads(), order);

    struct Case {
        const char* name;
        MultiSumSpec spec;
    };
    const Case cases[] = {
        {"double sum, depth 1", {PairKind::P47, 1, QMonomial::one()}},
        {"double chain, depth 2", {PairKind::P48, 2, QMonomial::one()}},
        {"triple sum, depth 1", {PairKind::P57, 1, QMonomial::q_power(1)}},
    };
    for (const auto& c : cases) {
        TruncatedSeries serial, parallel;
        double ts = time_ms([&] { serial = multisum_series_serial(c.spec, order); });
        double tp = time_ms([&] { parallel = multisum_series(c.spec, order); });
        bool same = serial == parallel;
        std::printf("%-22s serial %8.1f ms   omp %8.1f ms   speedup %.2fx   identical: %s\n",
                    c.name, ts, tp, ts / tp, same ? "yes" : "NO");
        if (!same) return 1;
    }

    {
        TruncatedSeries a = series_recip(
            qpoch_series(PochSpec::infinite(QMonomial::q_power(1)), 4 * order));
        TruncatedSeries b = qpoch_series(PochSpec::infinite(QMonomial::q_power(2)), 4 * order);
        TruncatedSeries s1, s2;
        double ts = time_ms([&] { s1 = series_mul_serial(a, b); });
        double tp = time_ms([&] { s2 = series_mul_parallel(a, b); });
        std::printf("%-22s serial %8.1f ms   omp %8.1f ms   speedup %.2fx   identical: %s\n",
                    "series product", ts, tp, ts / tp, s1 == s2 ? "yes" : "NO");
        if (!(s1 == s2)) return 1;
    }
    return 0;
}
