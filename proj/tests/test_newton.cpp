#include "cusp/newton.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace cusp;
using helpers::two_pair;

TEST_SUITE("newton") {

TEST_CASE("validation accepts the canonical examples") {
    const auto a = validate_type(2, 3, 2, 5);
    REQUIRE(std::holds_alternative<NewtonPairType>(a));
    CHECK(std::get<NewtonPairType>(a) == NewtonPairType{2, 3, 2, 5});

    const auto degenerate = validate_type(1, 6, 4, 1);
    REQUIRE(std::holds_alternative<DegeneratePuiseuxType>(degenerate));
    CHECK(std::get<DegeneratePuiseuxType>(degenerate) == DegeneratePuiseuxType{4, 25});
}

TEST_CASE("validation rejects with stable reason codes") {
    const auto non_coprime = validate_type(2, 4, 2, 5);
    REQUIRE(std::holds_alternative<RejectedType>(non_coprime));
    CHECK(std::get<RejectedType>(non_coprime).reason == RejectReason::NonCoprimeFirstPair);

    const auto ordering = validate_type(3, 2, 2, 5);
    REQUIRE(std::holds_alternative<RejectedType>(ordering));
    CHECK(std::get<RejectedType>(ordering).reason == RejectReason::OrderingViolation);

    const auto second = validate_type(2, 3, 4, 6);
    REQUIRE(std::holds_alternative<RejectedType>(second));
    CHECK(std::get<RejectedType>(second).reason == RejectReason::NonCoprimeSecondPair);

    const auto small_p2 = validate_type(2, 3, 1, 5);
    REQUIRE(std::holds_alternative<RejectedType>(small_p2));
    CHECK(std::get<RejectedType>(small_p2).reason == RejectReason::SecondMultiplicityTooSmall);

    const auto negative = validate_type(2, 3, 2, -5);
    REQUIRE(std::holds_alternative<RejectedType>(negative));
    CHECK(std::get<RejectedType>(negative).reason == RejectReason::NonPositiveEntry);

    CHECK(reject_reason_text(RejectReason::NonCoprimeFirstPair) == "non-coprime first pair");
    CHECK(reject_reason_text(RejectReason::SecondMultiplicityTooSmall) == "p2 < 2");
}

TEST_CASE("q2 below p2 is a valid second pair") {
    const auto v = validate_type(7, 48, 3, 1);
    CHECK(std::holds_alternative<NewtonPairType>(v));
}

TEST_CASE("semigroup generators") {
    CHECK(semigroup_generators(two_pair(2, 3, 2, 5)) == SemigroupGenerators{4, 6, 17});
    CHECK(semigroup_generators(two_pair(2, 7, 4, 17)) == SemigroupGenerators{8, 28, 73});
    CHECK(semigroup_generators(two_pair(7, 48, 3, 1)) == SemigroupGenerators{21, 144, 1009});

    const auto degenerate = semigroup_generators(DegeneratePuiseuxType{4, 25});
    CHECK(degenerate[0] == 4);
    CHECK(degenerate[1] == 25);
}

TEST_CASE("delta invariant") {
    CHECK(delta(two_pair(2, 3, 2, 5)) == 10);
    CHECK(delta(two_pair(2, 7, 4, 17)) == 120);
    CHECK(delta(two_pair(2, 3, 6, 31)) == 171);
    CHECK(delta(DegeneratePuiseuxType{4, 25}) == 36);
    CHECK(delta(make_degenerate(2, 3)) == 1);
}

TEST_CASE("parametrization exponents") {
    CHECK(parametrization_exponents(two_pair(2, 3, 2, 5)) == ParametrizationExponents{4, 6, 11});
    CHECK(parametrization_exponents(two_pair(2, 7, 2, 3)) == ParametrizationExponents{4, 14, 17});
    CHECK(parametrization_exponents(two_pair(5, 31, 4, 5)) == ParametrizationExponents{20, 124, 129});
}

TEST_CASE("g2 is not the top parametrization exponent") {
    const auto t = two_pair(2, 3, 2, 5);
    const auto gens = semigroup_generators(t);
    const auto exps = parametrization_exponents(t);
    CHECK(gens.g0 == exps.x_exp);
    CHECK(gens.g1 == exps.y_exp1);
    CHECK(gens.g2 == 17);
    CHECK(exps.y_exp2 == 11);
    CHECK(gens.g2 != exps.y_exp2);
}

TEST_CASE("fibonacci values and identities") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(12) == 144);
    for (int k = 1; k <= 40; ++k) {
        const i128 fk = fibonacci(k);
        const i128 fk1 = fibonacci(k + 1);
        CHECK(fibonacci(2 * k) == fk * (2 * fk1 - fk));
    }
    CHECK_THROWS_AS(fibonacci(-1), std::invalid_argument);
    CHECK_THROWS_AS(fibonacci(200), OverflowError);
    CHECK_THROWS_AS(fibonacci(2000), OverflowError);
}

TEST_CASE("random valid types satisfy the structural invariants") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> small(1, 40);
    int seen = 0;
    while (seen < 500) {
        const long long p1 = small(rng), q1 = small(rng), p2 = small(rng), q2 = small(rng);
        const auto v = validate_type(p1, q1, p2, q2);
        const auto* t = std::get_if<NewtonPairType>(&v);
        if (!t) continue;
        ++seen;
        // delta() checks numerator parity internally; generator and exponent
        // builders check their gcd invariants.
        CHECK(delta(*t) >= 0);
        const auto gens = semigroup_generators(*t);
        CHECK(gcd_exact(gens.g0, gcd_exact(gens.g1, gens.g2)) == 1);
        const auto exps = parametrization_exponents(*t);
        CHECK(exps.x_exp < exps.y_exp1);
        CHECK(exps.y_exp1 < exps.y_exp2);
    }
}

TEST_CASE("canonical format and lenient parse") {
    const auto t = two_pair(2, 3, 2, 5);
    CHECK(format_type(t) == "(2,3)(2,5)");
    CHECK(format_type(ValidatedType{DegeneratePuiseuxType{4, 25}}) == "(4,25)");

    const auto strict = parse_pair_string("(2,3)(2,5)");
    REQUIRE(std::holds_alternative<std::array<i128, 4>>(strict));
    CHECK(std::get<std::array<i128, 4>>(strict) == std::array<i128, 4>{2, 3, 2, 5});

    const auto spaced = parse_pair_string("  ( 2 , 3 ) ( 2 , 5 )  ");
    REQUIRE(std::holds_alternative<std::array<i128, 4>>(spaced));
    CHECK(std::get<std::array<i128, 4>>(spaced) == std::array<i128, 4>{2, 3, 2, 5});

    CHECK(std::holds_alternative<ParseError>(parse_pair_string("(2,3)(2,5")));
    CHECK(std::holds_alternative<ParseError>(parse_pair_string("(2,3)(2,5) extra")));
    CHECK(std::holds_alternative<ParseError>(parse_pair_string("2,3,2,5")));
    CHECK(std::holds_alternative<ParseError>(parse_pair_string("")));

    // negative entries parse and then fail validation, with the right code
    const auto negative = parse_pair_string("(-2,3)(2,5)");
    REQUIRE(std::holds_alternative<std::array<i128, 4>>(negative));
    const auto& v = std::get<std::array<i128, 4>>(negative);
    const auto rejected = validate_type(v[0], v[1], v[2], v[3]);
    REQUIRE(std::holds_alternative<RejectedType>(rejected));
    CHECK(std::get<RejectedType>(rejected).reason == RejectReason::NonPositiveEntry);
}

TEST_CASE("decimal helpers round-trip 128-bit values") {
    CHECK(to_dec(0) == "0");
    CHECK(to_dec(-42) == "-42");
    const i128 big = checked_mul(checked_mul(1000000000000000000LL, 1000000000000000000LL), 77);
    CHECK(parse_decimal(to_dec(big)) == big);
    CHECK(parse_decimal(to_dec(-big)) == -big);
    CHECK(!parse_decimal("12x").has_value());
    CHECK(!parse_decimal("-").has_value());
    CHECK(!parse_decimal("999999999999999999999999999999999999999999").has_value());
}

} // TEST_SUITE
