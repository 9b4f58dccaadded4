#include "cusp/semigroup.hpp"
#include "cusp/enumerator.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cusp;
using helpers::two_pair;

TEST_SUITE("semigroup") {

TEST_CASE("sieve of <4,6,17>") {
    const auto s = build_semigroup(SemigroupGenerators{4, 6, 17}, 10);
    CHECK(s.delta == 10);
    CHECK(s.conductor == 20);
    CHECK(s.gaps() == std::vector<i128>{1, 2, 3, 5, 7, 9, 11, 13, 15, 19});

    CHECK(s.is_member(0));
    CHECK(s.is_member(4));
    CHECK(s.is_member(17));
    CHECK_FALSE(s.is_member(19));
    CHECK(s.is_member(20)); // conductor: everything from 2*delta on is inside
    CHECK(s.is_member(1000000));
    CHECK_FALSE(s.is_member(-1));

    CHECK(s.count_upto(0) == 1);
    CHECK(s.count_upto(6) == 3);
    CHECK(s.count_upto(18) == 10);
    CHECK(s.count_upto(100) == 91); // closed form n + 1 - delta
    CHECK(s.count_upto(s.conductor - 1) == s.conductor - s.delta);
}

TEST_CASE("two-generator semigroups") {
    const auto s = build_semigroup(generator_list(ValidatedType{DegeneratePuiseuxType{4, 25}}), 36);
    CHECK(s.delta == 36);
    const auto gaps = s.gaps();
    CHECK(gaps.size() == 36);
    CHECK(gaps.back() == 71);

    const auto cusp_23 = build_semigroup(std::array<i128, 2>{2, 3}, 1);
    CHECK(cusp_23.gaps() == std::vector<i128>{1});
}

TEST_CASE("construction failures") {
    CHECK_THROWS_AS(build_semigroup(std::array<i128, 3>{4, 6, 18}, 10), NonCoprimeGenerators);
    // <3,5,7> has gaps {1,2,4}: count 3 but largest gap 4 != 2*3-1
    CHECK_THROWS_AS(build_semigroup(std::array<i128, 3>{3, 5, 7}, 3), SymmetryViolation);
    // correct semigroup, wrong delta claim
    CHECK_THROWS_AS(build_semigroup(SemigroupGenerators{4, 6, 17}, 9), SymmetryViolation);
    CHECK_THROWS_AS(build_semigroup(std::array<i128, 1>{0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_semigroup(std::span<const i128>{}, 1), std::invalid_argument);
}

TEST_CASE("membership marks zero and the small generators") {
    const auto t = two_pair(2, 5, 2, 3); // <4,10,23>, delta 15
    const auto s = build_semigroup(semigroup_generators(t), delta(t));
    CHECK(s.is_member(0));
    for (const i128 g : s.generators)
        if (g < s.conductor) CHECK(s.is_member(g));
    CHECK(s.count_upto(7) == 2); // members up to 7 are {0,4}
}

TEST_CASE("counting function is monotone and steps by membership") {
    const auto s = build_semigroup(SemigroupGenerators{4, 6, 17}, 10);
    for (i128 n = 1; n < s.conductor; ++n) {
        const i128 step = s.count_upto(n) - s.count_upto(n - 1);
        CHECK(step == (s.is_member(n) ? 1 : 0));
    }
}

TEST_CASE("sieve agrees with the brute-force oracle up to delta 300") {
    std::size_t checked = 0;
    for_each_valid_type(300, [&](i128 p1, i128 q1, i128 p2, i128 q2, i128 dlt) {
        const auto t = two_pair(static_cast<long long>(p1), static_cast<long long>(q1),
                                static_cast<long long>(p2), static_cast<long long>(q2));
        const auto s = build_semigroup(semigroup_generators(t), dlt);
        const auto gens = semigroup_generators(t);
        const auto oracle = oracles::brute_force_membership(
            {static_cast<long long>(gens.g0), static_cast<long long>(gens.g1),
             static_cast<long long>(gens.g2)},
            static_cast<long long>(s.conductor));
        i128 gap_count = 0;
        for (i128 n = 0; n < s.conductor; ++n) {
            REQUIRE(s.is_member(n) == static_cast<bool>(oracle[static_cast<std::size_t>(n)]));
            if (!s.is_member(n)) ++gap_count;
            // symmetry of the plane-branch semigroup
            REQUIRE(s.is_member(n) == !s.is_member(s.conductor - 1 - n));
        }
        REQUIRE(gap_count == dlt);
        REQUIRE(oracle[static_cast<std::size_t>(s.conductor)] == 1);
        ++checked;
    });
    CHECK(checked > 1000); // the sweep has real coverage
}

TEST_CASE("members are closed under addition inside the table") {
    const auto t = two_pair(2, 3, 6, 31); // delta 171
    const auto s = build_semigroup(semigroup_generators(t), delta(t));
    std::vector<i128> members;
    for (i128 n = 0; n < s.conductor; ++n)
        if (s.is_member(n)) members.push_back(n);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const i128 a = members[pick(rng)];
        const i128 b = members[pick(rng)];
        if (a + b < s.conductor) CHECK(s.is_member(a + b));
    }
}

TEST_CASE("oversized tables are refused") {
    // delta of <2, 1000000001> is 500000000; the table would need 1e9 slots
    CHECK_THROWS_AS(build_semigroup(std::array<i128, 2>{2, 1000000001}, 500000000),
                    std::length_error);
}

} // TEST_SUITE
