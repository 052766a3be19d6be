#pragma once

#include "qseries/series.hpp"

#include <vector>

namespace qseries {

/// Catalogued pair kinds whose beta has a series form at a monomial a.
enum class PairKind { Unit2, P47, P48, Unit3, P57 };

/// Sum-side description of a (chain of) Bailey-type pair(s): index groups of
/// nondecreasing chains x_1 <= ... <= x_depth, two groups for double pairs and
/// three for triple ones, with term
///   a^{sum all} q^{sum of squares} beta(x_1 of each group) / prod (q;q)_{x_{i+1}-x_i}.
/// Every index contributes at least idx^2 to the q-exponent, which bounds the
/// enumeration; a.qexp < 0 breaks that bound and is rejected.
struct MultiSumSpec {
    PairKind pair = PairKind::P47;
    int chain_depth = 1;
    QMonomial a = QMonomial::one();

    int groups() const {
        return (pair == PairKind::Unit3 || pair == PairKind::P57) ? 3 : 2;
    }
};

/// Exact truncated series of the multisum; OpenMP over enumerated index tuples.
TruncatedSeries multisum_series(const MultiSumSpec& spec, int order);

/// Serial reference implementation (identical results; kept for testing and
/// benchmarking the parallel kernel).
TruncatedSeries multisum_series_serial(const MultiSumSpec& spec, int order);

} // namespace qseries
