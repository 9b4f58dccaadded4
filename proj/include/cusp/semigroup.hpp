#pragma once

#include "cusp/newton.hpp"

#include <span>
#include <vector>

namespace cusp {

class NonCoprimeGenerators : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The gap count or the largest gap disagrees with the claimed delta. For
/// the semigroup of an irreducible plane branch both are forced (delta gaps,
/// largest gap 2*delta - 1), so a mismatch means the generator triple does
/// not belong to the claimed singularity.
class SymmetryViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical semigroup as a membership sieve over [0, conductor) with a
/// cumulative table for O(1) counting queries. Immutable once built; safe to
/// share across threads.
struct NumericalSemigroup {
    std::vector<i128> generators;
    i128 delta = 0;                      // gap count
    i128 conductor = 0;                  // 2*delta; [conductor, inf) is inside
    std::vector<bool> membership;        // indexed 0..conductor-1
    std::vector<std::uint32_t> cumulative; // R(n) for n in 0..conductor-1

    bool is_member(i128 n) const {
        if (n < 0) return false;
        if (n >= conductor) return true;
        return membership[static_cast<std::size_t>(n)];
    }

    /// R(n) = #(semigroup intersect [0,n]); closed form n + 1 - delta once
    /// n >= conductor - 1.
    i128 count_upto(i128 n) const {
        if (n < 0) return 0;
        if (n >= conductor - 1) return n + 1 - delta;
        return static_cast<i128>(cumulative[static_cast<std::size_t>(n)]);
    }

    std::vector<i128> gaps() const;
};

/// Sieve construction by forward propagation: 0 is marked, and every member
/// n marks n + g for each generator g, up to 2*expected_delta. Fails loudly
/// (SymmetryViolation) if the gap count is not expected_delta or the largest
/// gap is not 2*expected_delta - 1.
NumericalSemigroup build_semigroup(std::span<const i128> generators, i128 expected_delta);
NumericalSemigroup build_semigroup(const SemigroupGenerators& generators, i128 expected_delta);
NumericalSemigroup build_semigroup(const ValidatedType& t);

} // namespace cusp
