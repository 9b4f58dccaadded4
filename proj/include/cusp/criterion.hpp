#pragma once

#include "cusp/semigroup.hpp"

#include <optional>

namespace cusp {

class DegreeMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InconsistentDegree : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class KodairaHint { MinusInfinity, OneOrTwo };

struct DegreeFromDelta {
    enum class Status {
        Found,            // unique d >= 3 with (d-1)(d-2) = 2*delta
        NoIntegerDegree,  // no integer solution: not realizable on a rational unicuspidal curve
        DegenerateDegree, // delta = 0 solves at d in {1,2}, below any cuspidal degree
    };
    Status status = Status::NoIntegerDegree;
    i128 degree = 0; // valid only when status == Found

    bool found() const { return status == Status::Found; }
};

/// Solves (d-1)(d-2) = 2*delta exactly over the integers (no floating point;
/// the discriminant test uses exact isqrt).
DegreeFromDelta degree_from_delta(i128 delta);

struct CriterionRow {
    i128 j;
    i128 r;      // R(j*d)
    i128 target; // (j+1)(j+2)/2
    bool operator==(const CriterionRow&) const = default;
};

/// Full row table for j = 0..d-3 plus the verdict. fail_at holds the
/// smallest failing j; absent means every row matched.
struct CriterionReport {
    std::vector<CriterionRow> rows;
    std::optional<i128> fail_at;

    bool passed() const { return !fail_at.has_value(); }
};

/// Tests R(j*d) = (j+1)(j+2)/2 for j = 0..d-3. Throws DegreeMismatch unless
/// (d-1)(d-2) = 2*delta for the semigroup's delta.
CriterionReport check_sdp(const NumericalSemigroup& s, i128 d);
CriterionReport check_sdp(const ValidatedType& t, i128 d);

/// Self-intersection of the strict transform, via the linear formula
///   3d - 1 - p1*p2 - q1*p2 - q2.
/// The quadratic route d^2 - p2*q2 - p1*q1*p2^2 is evaluated as well; the two
/// differ by exactly (d-1)(d-2) - 2*delta, so disagreement raises
/// InconsistentDegree.
i128 cbar_squared(const NewtonPairType& t, i128 d);
i128 cbar_squared_raw(i128 p1, i128 q1, i128 p2, i128 q2, i128 d);

/// Logarithmic Kodaira dimension indicator for unicuspidal curves:
/// kappa = -infinity exactly when cbar_sq >= -1, and kappa != 0, so the
/// complement is {1, 2}.
KodairaHint kodaira_hint(i128 cbar_sq);

} // namespace cusp
