#include "cusp/semigroup.hpp"

namespace cusp {

namespace {

// Largest table we are willing to materialize (bits + one uint32 per slot).
// 2*delta <= 5e7 covers degrees up to about 7000.
constexpr i128 kMaxTableSize = 50'000'000;

} // namespace

std::vector<i128> NumericalSemigroup::gaps() const {
    std::vector<i128> out;
    out.reserve(static_cast<std::size_t>(delta));
    for (std::size_t n = 0; n < membership.size(); ++n)
        if (!membership[n]) out.push_back(static_cast<i128>(n));
    return out;
}

NumericalSemigroup build_semigroup(std::span<const i128> generators, i128 expected_delta) {
    if (generators.empty())
        throw std::invalid_argument("semigroup needs at least one generator");
    for (const i128 g : generators)
        if (g < 1) throw std::invalid_argument("semigroup generators must be positive");
    if (expected_delta < 0)
        throw std::invalid_argument("delta must be non-negative");

    i128 g = 0;
    for (const i128 gen : generators) g = gcd_exact(g, gen);
    if (g != 1)
        throw NonCoprimeGenerators("generators have gcd " + to_dec(g) + ", expected 1");

    const i128 conductor = checked_mul(2, expected_delta);
    if (conductor > kMaxTableSize)
        throw std::length_error("semigroup table of size " + to_dec(conductor) +
                                " exceeds the supported bound " + to_dec(kMaxTableSize));

    const auto size = static_cast<std::size_t>(conductor);
    NumericalSemigroup s;
    s.generators.assign(generators.begin(), generators.end());
    s.delta = expected_delta;
    s.conductor = conductor;
    s.membership.assign(size, false);
    if (size > 0) {
        s.membership[0] = true;
        for (std::size_t n = 0; n < size; ++n) {
            if (!s.membership[n]) continue;
            for (const i128 gen : generators) {
                if (gen >= conductor - static_cast<i128>(n)) continue;
                s.membership[n + static_cast<std::size_t>(gen)] = true;
            }
        }
    }

    i128 gap_count = 0;
    i128 largest_gap = -1;
    for (std::size_t n = 0; n < size; ++n) {
        if (!s.membership[n]) {
            ++gap_count;
            largest_gap = static_cast<i128>(n);
        }
    }
    if (gap_count != expected_delta)
        throw SymmetryViolation("gap count " + to_dec(gap_count) + " does not match delta " +
                                to_dec(expected_delta));
    if (expected_delta > 0 && largest_gap != conductor - 1)
        throw SymmetryViolation("largest gap " + to_dec(largest_gap) + " is not 2*delta-1 = " +
                                to_dec(conductor - 1));

    s.cumulative.resize(size);
    std::uint32_t running = 0;
    for (std::size_t n = 0; n < size; ++n) {
        running += s.membership[n] ? 1u : 0u;
        s.cumulative[n] = running;
    }
    return s;
}

NumericalSemigroup build_semigroup(const SemigroupGenerators& generators, i128 expected_delta) {
    const std::array<i128, 3> g{generators.g0, generators.g1, generators.g2};
    return build_semigroup(std::span<const i128>(g), expected_delta);
}

NumericalSemigroup build_semigroup(const ValidatedType& t) {
    const auto gens = generator_list(t);
    return build_semigroup(std::span<const i128>(gens), delta(t));
}

} // namespace cusp
