#pragma once

#include "cusp/families.hpp"

#include <chrono>
#include <cstdint>

namespace cusp {

class BoundTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationStats {
    std::uint64_t scanned = 0;           // valid quadruples with delta within bound
    std::uint64_t no_integer_degree = 0; // degree-genus admits no integer degree
    std::uint64_t sdp_failures = 0;      // counting criterion failed
    std::uint64_t passes = 0;
    bool operator==(const EnumerationStats&) const = default;
};

/// A criterion-passing candidate, annotated with every family that produces
/// it and whether it is one of the two spectrum-excluded types.
struct PassEntry {
    NewtonPairType type;
    i128 degree = 0;
    i128 delta = 0;
    i128 cbar_sq = 0;
    std::vector<std::pair<FamilyId, FamilyParams>> families;
    bool known_exception = false;

    bool unexpected() const { return families.empty() && !known_exception; }
};

struct EnumerationReport {
    i128 max_degree = 0;
    std::vector<PassEntry> candidates; // sorted by (degree, p1, q1, p2, q2)
    EnumerationStats stats;
    std::chrono::milliseconds elapsed{0}; // diagnostics only, never serialized
};

struct CrossCheckDiff {
    std::vector<FamilyInstance> missing; // family instances absent from the pass list
    std::vector<PassEntry> unexpected;   // passes with no family and not a known exception

    bool empty() const { return missing.empty() && unexpected.empty(); }
};

/// Visits every quadruple (p1,q1,p2,q2) with p1 >= 2, p1 < q1, p2 >= 2,
/// q2 >= 1, coprime pairs and delta <= delta_max, in ascending
/// (p2, p1, q1, q2) order. Loop cuts are exact: delta is strictly increasing
/// in q1 and (because p2 >= 2) in q2, so each loop stops at its true bound.
void for_each_valid_type(i128 delta_max,
                         const std::function<void(i128 p1, i128 q1, i128 p2, i128 q2, i128 delta)>& fn);

/// Exhaustive scan up to the degree bound: every valid type with
/// delta <= (max_degree-1)(max_degree-2)/2 runs the full pipeline, and the
/// survivors come back annotated and sorted. Output is identical for any
/// worker count.
EnumerationReport enumerate_candidates(i128 max_degree, unsigned workers = 1);

/// Set comparison of the pass list against the family instances (two-pair
/// ones) and the exceptions registry. Both lists are empty on a correct
/// implementation.
CrossCheckDiff cross_check(const EnumerationReport& report);
CrossCheckDiff cross_check(i128 max_degree, unsigned workers = 1);

} // namespace cusp
