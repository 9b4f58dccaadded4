#include "cusp/newton.hpp"

#include <cctype>
#include <stdexcept>

namespace cusp {

std::string_view reject_reason_text(RejectReason reason) {
    switch (reason) {
    case RejectReason::NonPositiveEntry: return "non-positive entry";
    case RejectReason::NonCoprimeFirstPair: return "non-coprime first pair";
    case RejectReason::NonCoprimeSecondPair: return "non-coprime second pair";
    case RejectReason::OrderingViolation: return "ordering violation p1 >= q1";
    case RejectReason::SecondMultiplicityTooSmall: return "p2 < 2";
    }
    return "unknown";
}

ValidationResult validate_type(i128 p1, i128 q1, i128 p2, i128 q2) {
    if (p1 < 1 || q1 < 1 || p2 < 1 || q2 < 1)
        return RejectedType{RejectReason::NonPositiveEntry};
    if (gcd_exact(p1, q1) != 1)
        return RejectedType{RejectReason::NonCoprimeFirstPair};
    if (p1 >= q1)
        return RejectedType{RejectReason::OrderingViolation};
    if (p2 < 2)
        return RejectedType{RejectReason::SecondMultiplicityTooSmall};
    if (gcd_exact(p2, q2) != 1)
        return RejectedType{RejectReason::NonCoprimeSecondPair};
    if (p1 == 1)
        return DegeneratePuiseuxType{p2, checked_add(checked_mul(p2, q1), q2)};
    return NewtonPairType{p1, q1, p2, q2};
}

DegeneratePuiseuxType make_degenerate(i128 a, i128 b) {
    if (a < 2 || b <= a)
        throw std::invalid_argument("one-pair type requires 2 <= a < b");
    if (gcd_exact(a, b) != 1)
        throw std::invalid_argument("one-pair type requires gcd(a,b) = 1");
    return DegeneratePuiseuxType{a, b};
}

SemigroupGenerators semigroup_generators(const NewtonPairType& t) {
    const i128 g0 = checked_mul(t.p1, t.p2);
    const i128 g1 = checked_mul(t.q1, t.p2);
    const i128 g2 = checked_add(checked_mul(g0, t.q1), t.q2);
    if (gcd_exact(g0, gcd_exact(g1, g2)) != 1)
        throw std::logic_error("semigroup generators of a valid type must be coprime");
    return SemigroupGenerators{g0, g1, g2};
}

std::array<i128, 2> semigroup_generators(const DegeneratePuiseuxType& t) {
    return {t.a, t.b};
}

std::vector<i128> generator_list(const ValidatedType& t) {
    if (const auto* two = std::get_if<NewtonPairType>(&t)) {
        const auto g = semigroup_generators(*two);
        return {g.g0, g.g1, g.g2};
    }
    const auto& one = std::get<DegeneratePuiseuxType>(t);
    return {one.a, one.b};
}

i128 delta(const NewtonPairType& t) {
    const i128 p2sq = checked_mul(t.p2, t.p2);
    i128 numerator = checked_mul(checked_mul(t.p1, t.q1), p2sq);
    numerator = checked_add(numerator, checked_mul(t.p2, t.q2));
    numerator = checked_sub(numerator, checked_mul(t.p1, t.p2));
    numerator = checked_sub(numerator, checked_mul(t.q1, t.p2));
    numerator = checked_sub(numerator, t.q2);
    numerator = checked_add(numerator, 1);
    if (numerator % 2 != 0)
        throw std::logic_error("delta numerator must be even for a coprime pair type");
    if (numerator < 0)
        throw std::logic_error("delta must be non-negative for a valid type");
    return numerator / 2;
}

i128 delta(const DegeneratePuiseuxType& t) {
    const i128 numerator = checked_mul(t.a - 1, t.b - 1);
    if (numerator % 2 != 0)
        throw std::logic_error("delta numerator must be even for a coprime pair type");
    return numerator / 2;
}

i128 delta(const ValidatedType& t) {
    return std::visit([](const auto& v) { return delta(v); }, t);
}

ParametrizationExponents parametrization_exponents(const NewtonPairType& t) {
    const i128 x = checked_mul(t.p1, t.p2);
    const i128 y1 = checked_mul(t.q1, t.p2);
    const i128 y2 = checked_add(y1, t.q2);
    if (!(x < y1 && y1 < y2))
        throw std::logic_error("parametrization exponents must be strictly increasing");
    if (gcd_exact(x, gcd_exact(y1, y2)) != 1)
        throw std::logic_error("parametrization exponents must have gcd 1");
    return ParametrizationExponents{x, y1, y2};
}

i128 fibonacci(i128 n) {
    if (n < 0)
        throw std::invalid_argument("Fibonacci index must be non-negative");
    if (n > 1000)
        throw OverflowError("Fibonacci value exceeds 128-bit range");
    i128 a = 0;
    i128 b = 1;
    for (i128 i = 0; i < n; ++i) {
        const i128 next = checked_add(a, b);
        a = b;
        b = next;
    }
    return a;
}

std::string format_type(const NewtonPairType& t) {
    return "(" + to_dec(t.p1) + "," + to_dec(t.q1) + ")(" + to_dec(t.p2) + "," + to_dec(t.q2) + ")";
}

std::string format_type(const DegeneratePuiseuxType& t) {
    return "(" + to_dec(t.a) + "," + to_dec(t.b) + ")";
}

std::string format_type(const ValidatedType& t) {
    return std::visit([](const auto& v) { return format_type(v); }, t);
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_spaces();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::optional<i128> integer() {
        skip_spaces();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return parse_decimal(text.substr(start, pos - start));
    }

    bool at_end() {
        skip_spaces();
        return pos == text.size();
    }
};

} // namespace

std::variant<std::array<i128, 4>, ParseError> parse_pair_string(std::string_view text) {
    Cursor cur{text};
    std::array<i128, 4> values{};
    for (int pair = 0; pair < 2; ++pair) {
        if (!cur.eat('('))
            return ParseError{"expected '(' in \"(p1,q1)(p2,q2)\""};
        const auto first = cur.integer();
        if (!first)
            return ParseError{"expected an integer"};
        if (!cur.eat(','))
            return ParseError{"expected ',' between pair entries"};
        const auto second = cur.integer();
        if (!second)
            return ParseError{"expected an integer"};
        if (!cur.eat(')'))
            return ParseError{"expected ')' closing a pair"};
        values[2 * pair] = *first;
        values[2 * pair + 1] = *second;
    }
    if (!cur.at_end())
        return ParseError{"trailing characters after \"(p1,q1)(p2,q2)\""};
    return values;
}

} // namespace cusp
