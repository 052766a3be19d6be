#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

struct VerificationConfig {
    int order = -1;          // engine B truncation; -1 = record default
    int trials = 50;         // engine A random points
    std::uint64_t seed = 42;
    long caps = 3;           // M, N, L, K sampling cap (engine A)
    int family_max = 2;      // k or s range for family records
};

struct Mismatch {
    long index = 0;          // trial index (engine A) or coefficient index (engine B)
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string id;
    char engine = 'A';
    std::string status;      // "pass" | "fail" | "sampling-exhausted"
    int order = 0;           // engine B
    int trials = 0;          // engine A
    std::uint64_t seed = 0;
    std::optional<Mismatch> first_mismatch;
    double elapsed_ms = 0.0;
    std::string detail;      // human-readable context (not part of the JSON schema)

    bool passed() const { return status == "pass"; }
};

struct IdentityRecord {
    std::string id;
    char engine = 'A';
    std::string description;
    int default_order = 0;                    // engine B records
    bool family = false;                      // k/s-indexed record
    std::string k1_equals;                    // id this record matches at k=1 (families)
    std::function<VerificationReport(const VerificationConfig&)> run;
    /// family records only: verify a single k (or s)
    std::function<VerificationReport(const VerificationConfig&, int)> run_family;
};

/// All records, sorted by id. Census >= 35.
const std::vector<IdentityRecord>& catalog();

const IdentityRecord& find_identity(const std::string& id);

/// Verify one identity. Family ids accept the "FAM-4.17[2]" form.
VerificationReport verify(const std::string& id, const VerificationConfig& cfg);

VerificationReport verify_family(const std::string& base_id, int param,
                                 const VerificationConfig& cfg);

/// Schema: { id, engine, status, order|trials, seed, first_mismatch, elapsed_ms? }.
/// elapsed_ms is emitted only when include_elapsed (it breaks byte-determinism).
std::string report_to_json(const VerificationReport& r, bool include_elapsed = false);
std::string reports_to_json(const std::vector<VerificationReport>& rs,
                            bool include_elapsed = false);

} // namespace qseries
