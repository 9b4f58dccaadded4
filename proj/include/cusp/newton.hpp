#pragma once

#include "cusp/int128.hpp"

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cusp {

// Validation failures form a closed set of reason codes so CLI output stays
// stable across versions.
enum class RejectReason {
    NonPositiveEntry,
    NonCoprimeFirstPair,
    NonCoprimeSecondPair,
    OrderingViolation,
    SecondMultiplicityTooSmall,
};

std::string_view reject_reason_text(RejectReason reason);

struct RejectedType {
    RejectReason reason;
    bool operator==(const RejectedType&) const = default;
};

/// Local singularity type with two Newton pairs (p1,q1)(p2,q2):
/// gcd(p1,q1) = gcd(p2,q2) = 1, 2 <= p1 < q1, p2 >= 2, q2 >= 1.
/// Parametrized by x(t) = t^{p1 p2}, y(t) = t^{q1 p2} + t^{q1 p2 + q2}.
struct NewtonPairType {
    i128 p1;
    i128 q1;
    i128 p2;
    i128 q2;
    bool operator==(const NewtonPairType&) const = default;
};

/// One Puiseux pair (a,b), gcd(a,b) = 1, 2 <= a < b. A two-pair input with
/// p1 = 1 collapses to (p2, p2*q1 + q2).
struct DegeneratePuiseuxType {
    i128 a;
    i128 b;
    bool operator==(const DegeneratePuiseuxType&) const = default;
};

using ValidatedType = std::variant<NewtonPairType, DegeneratePuiseuxType>;
using ValidationResult = std::variant<NewtonPairType, DegeneratePuiseuxType, RejectedType>;

/// Checks the pair constraints. p1 = 1 is accepted and redirected to the
/// one-pair representation; everything else invalid maps to a RejectedType.
ValidationResult validate_type(i128 p1, i128 q1, i128 p2, i128 q2);

/// Direct one-pair construction (used for raw semigroups like (2,3)).
DegeneratePuiseuxType make_degenerate(i128 a, i128 b);

struct SemigroupGenerators {
    i128 g0;
    i128 g1;
    i128 g2;
    bool operator==(const SemigroupGenerators&) const = default;
};

/// (g0, g1, g2) = (p1*p2, q1*p2, p1*p2*q1 + q2). The triple gcd is verified
/// to be 1, not assumed.
SemigroupGenerators semigroup_generators(const NewtonPairType& t);
std::array<i128, 2> semigroup_generators(const DegeneratePuiseuxType& t);

/// Generators as a flat list, ready for the semigroup sieve.
std::vector<i128> generator_list(const ValidatedType& t);

/// Delta invariant. For two pairs:
///   delta = (p1*q1*p2^2 + p2*q2 - p1*p2 - q1*p2 - q2 + 1) / 2,
/// for one pair (a,b): delta = (a-1)(b-1)/2. The numerator is checked to be
/// even on every call.
i128 delta(const NewtonPairType& t);
i128 delta(const DegeneratePuiseuxType& t);
i128 delta(const ValidatedType& t);

struct ParametrizationExponents {
    i128 x_exp;
    i128 y_exp1;
    i128 y_exp2;
    bool operator==(const ParametrizationExponents&) const = default;
};

/// (p1*p2, q1*p2, q1*p2 + q2); x_exp < y_exp1 < y_exp2 and triple gcd 1.
ParametrizationExponents parametrization_exponents(const NewtonPairType& t);

/// F_0 = 0, F_1 = 1, F_{k+1} = F_k + F_{k-1}, exact; throws OverflowError
/// once the value leaves 128-bit range.
i128 fibonacci(i128 n);

// Canonical textual form: "(p1,q1)(p2,q2)" with no whitespace; (a,b) for the
// one-pair degeneration.
std::string format_type(const NewtonPairType& t);
std::string format_type(const DegeneratePuiseuxType& t);
std::string format_type(const ValidatedType& t);

struct ParseError {
    std::string message;
    bool operator==(const ParseError&) const = default;
};

/// Lenient parser for the canonical form: optional spaces are accepted
/// around every token, nothing else. Values flow into validate_type.
std::variant<std::array<i128, 4>, ParseError> parse_pair_string(std::string_view text);

} // namespace cusp
