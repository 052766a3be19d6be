#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

struct QSeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by an exact zero while evaluating a Pochhammer quotient or term.
struct PoleHit : QSeriesError {
    PoleHit() : QSeriesError("pole hit: exact zero denominator") {}
    explicit PoleHit(const std::string& what) : QSeriesError(what) {}
};

/// Very-well-poised kernel (1-a q^{2n})/(1-a) with a = 1.
struct KernelSingularity : QSeriesError {
    KernelSingularity() : QSeriesError("kernel singularity: special parameter evaluates to 1") {}
};

/// Random parameter sampling kept hitting poles past the retry cap.
struct SamplingExhausted : QSeriesError {
    SamplingExhausted() : QSeriesError("sampling exhausted: 100 pole-free retries failed") {}
};

struct ZeroConstantTerm : QSeriesError {
    ZeroConstantTerm() : QSeriesError("series reciprocal of a series with zero constant term") {}
};

struct NonconvergentTruncation : QSeriesError {
    explicit NonconvergentTruncation(const std::string& what = "infinite product factor does not perturb positive q-orders")
        : QSeriesError(what) {}
};

struct InfiniteLengthInEngineA : QSeriesError {
    InfiniteLengthInEngineA() : QSeriesError("infinite Pochhammer length has no exact rational value") {}
};

struct BoundDerivationFailure : QSeriesError {
    BoundDerivationFailure() : QSeriesError("multisum term exponent lower bound not established") {}
};

struct UnknownIdentity : QSeriesError {
    explicit UnknownIdentity(const std::string& id) : QSeriesError("unknown identity: " + id) {}
};

} // namespace qseries
