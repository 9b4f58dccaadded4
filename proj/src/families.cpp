#include "cusp/families.hpp"

#include <algorithm>
#include <cctype>

namespace cusp {

namespace {

struct Bounds {
    i128 a_min;
    i128 b_min; // ignored for unary families
    bool unary;
};

Bounds family_bounds(FamilyId f) {
    switch (f) {
    case FamilyId::I: return {2, 0, false};
    case FamilyId::II: return {3, 0, false};
    case FamilyId::III: return {3, 2, false};
    case FamilyId::IV: return {2, 2, false};
    case FamilyId::V: return {3, 0, true};
    case FamilyId::VI: return {2, 0, true};
    case FamilyId::VII: return {2, 0, true};
    case FamilyId::VIII: return {2, 0, true};
    }
    throw std::logic_error("unknown family");
}

struct RawInstance {
    std::array<i128, 4> pairs; // p1, q1, p2, q2
    i128 degree;
};

i128 square(i128 v) { return checked_mul(v, v); }

i128 fib_at_least_one(i128 index) {
    if (index < 1)
        throw ConstructionInconsistency("Fibonacci index dropped below 1");
    return fibonacci(index);
}

// The printed formulas of the eight families, verbatim. `b` is ignored for
// the unary ones.
RawInstance raw_instance(FamilyId f, i128 a, i128 b) {
    switch (f) {
    case FamilyId::I: {
        const i128 k = a, l = b;
        const i128 f_lo = fib_at_least_one(2 * k - 3);
        const i128 f_mid = fib_at_least_one(2 * k - 1);
        const i128 f_hi = fib_at_least_one(2 * k + 1);
        const i128 p1 = checked_add(checked_mul(l, square(f_mid)), square(f_lo));
        const i128 q1 = checked_add(checked_add(checked_mul(l, square(f_hi)), square(f_mid)), 2);
        const i128 p2 = square(f_mid);
        const i128 q2 = p1;
        const i128 d = checked_mul(checked_mul(f_mid, f_hi), p1);
        return {{p1, q1, p2, q2}, d};
    }
    case FamilyId::II: {
        const i128 k = a, l = b;
        const i128 f_lo2 = fib_at_least_one(2 * k - 5);
        const i128 f_lo = fib_at_least_one(2 * k - 3);
        const i128 f_mid = fib_at_least_one(2 * k - 1);
        const i128 f_hi = fib_at_least_one(2 * k + 1);
        const i128 p1 = checked_add(checked_mul(l, square(f_mid)), square(f_lo));
        const i128 q1 = checked_add(checked_add(checked_mul(l, square(f_hi)), square(f_mid)), 2);
        const i128 p2 = f_mid;
        const i128 q2 = checked_add(checked_mul(l, f_mid), f_lo2);
        const i128 d = checked_mul(f_hi, p1);
        return {{p1, q1, p2, q2}, d};
    }
    case FamilyId::III: {
        const i128 n = a, m = b;
        return {{n - 1, n, m, checked_sub(checked_mul(n, m), 1)}, checked_mul(n, m)};
    }
    case FamilyId::IV: {
        const i128 n = a, m = b;
        return {{n, checked_sub(checked_mul(4, n), 1), m, checked_sub(checked_mul(n, m), 1)},
                checked_mul(2, checked_mul(n, m))};
    }
    case FamilyId::V: {
        const i128 n = a;
        return {{n - 1, n, n, square(n + 1)}, checked_add(square(n), 1)};
    }
    case FamilyId::VI: {
        const i128 n = a;
        const i128 u = checked_add(checked_mul(4, n), 1);
        const i128 d = checked_add(checked_mul(checked_mul(8, n), n), checked_mul(4, n) + 1);
        return {{n, u, u, square(checked_add(checked_mul(2, n), 1))}, d};
    }
    case FamilyId::VII:
    case FamilyId::VIII: {
        const i128 k = a;
        const i128 f4k = fibonacci(4 * k);
        const i128 f4k4 = fibonacci(4 * k + 4);
        if (f4k % 3 != 0 || f4k4 % 3 != 0)
            throw ConstructionInconsistency("F_{4k} and F_{4k+4} must be divisible by 3");
        const i128 d = fibonacci(4 * k + 2);
        if (f == FamilyId::VII)
            return {{f4k / 3, f4k4 / 3, 3, 1}, d};
        return {{f4k / 3, f4k4 / 3, 6, 1}, checked_mul(2, d)};
    }
    }
    throw std::logic_error("unknown family");
}

i128 expected_cbar(FamilyId f, const FamilyParams& p) {
    switch (f) {
    case FamilyId::I: return 0;
    case FamilyId::II: return -1;
    case FamilyId::III: return *p.b;
    case FamilyId::IV: return *p.b;
    case FamilyId::V: return 1 - p.a;
    case FamilyId::VI: return -p.a;
    case FamilyId::VII: return -2;
    case FamilyId::VIII: return -2;
    }
    throw std::logic_error("unknown family");
}

KodairaExpect expected_kappa(FamilyId f) {
    switch (f) {
    case FamilyId::I:
    case FamilyId::II:
    case FamilyId::III:
    case FamilyId::IV: return KodairaExpect::MinusInfinity;
    case FamilyId::V:
    case FamilyId::VI: return KodairaExpect::One;
    case FamilyId::VII:
    case FamilyId::VIII: return KodairaExpect::Two;
    }
    throw std::logic_error("unknown family");
}

void check_params(FamilyId f, const FamilyParams& p) {
    const Bounds bounds = family_bounds(f);
    if (bounds.unary) {
        if (p.b.has_value())
            throw ParamsOutOfRange("family " + std::string(family_name(f)) +
                                   " takes a single parameter");
    } else if (!p.b.has_value()) {
        throw ParamsOutOfRange("family " + std::string(family_name(f)) +
                               " takes two parameters");
    }
    if (p.a < bounds.a_min || (!bounds.unary && *p.b < bounds.b_min))
        throw ParamsOutOfRange("parameters " + format_params(f, p) + " out of range for family " +
                               std::string(family_name(f)));
}

} // namespace

std::string_view family_name(FamilyId f) {
    switch (f) {
    case FamilyId::I: return "I";
    case FamilyId::II: return "II";
    case FamilyId::III: return "III";
    case FamilyId::IV: return "IV";
    case FamilyId::V: return "V";
    case FamilyId::VI: return "VI";
    case FamilyId::VII: return "VII";
    case FamilyId::VIII: return "VIII";
    }
    return "?";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
    std::string lower;
    lower.reserve(name.size());
    for (const char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (const FamilyId f : kAllFamilies) {
        std::string expect;
        for (const char c : family_name(f))
            expect.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (lower == expect) return f;
    }
    return std::nullopt;
}

std::pair<std::string_view, std::string_view> param_names(FamilyId f) {
    switch (f) {
    case FamilyId::I:
    case FamilyId::II: return {"k", "l"};
    case FamilyId::III:
    case FamilyId::IV: return {"n", "m"};
    case FamilyId::V:
    case FamilyId::VI: return {"n", ""};
    case FamilyId::VII:
    case FamilyId::VIII: return {"k", ""};
    }
    return {"?", ""};
}

std::string format_params(FamilyId f, const FamilyParams& p) {
    const auto [first, second] = param_names(f);
    std::string out = std::string(first) + "=" + to_dec(p.a);
    if (p.b.has_value())
        out += "," + std::string(second) + "=" + to_dec(*p.b);
    return out;
}

FamilyInstance instantiate(FamilyId f, const FamilyParams& p) {
    check_params(f, p);
    const RawInstance raw = raw_instance(f, p.a, p.b.value_or(0));

    const ValidationResult validated = validate_type(raw.pairs[0], raw.pairs[1], raw.pairs[2], raw.pairs[3]);
    if (std::holds_alternative<RejectedType>(validated))
        throw ConstructionInconsistency(
            "family " + std::string(family_name(f)) + " at " + format_params(f, p) +
            " produced an invalid type: " +
            std::string(reject_reason_text(std::get<RejectedType>(validated).reason)));

    FamilyInstance inst;
    inst.family = f;
    inst.params = p;
    inst.raw_pairs = raw.pairs;
    inst.degree = raw.degree;
    if (const auto* two = std::get_if<NewtonPairType>(&validated)) {
        inst.ntype = *two;
        inst.degenerate = false;
    } else {
        inst.ntype = std::get<DegeneratePuiseuxType>(validated);
        inst.degenerate = true;
    }
    inst.delta = delta(inst.ntype);
    if (checked_mul(inst.degree - 1, inst.degree - 2) != checked_mul(2, inst.delta))
        throw ConstructionInconsistency("degree-genus fails for family " +
                                        std::string(family_name(f)) + " at " + format_params(f, p));
    inst.cbar_sq = cbar_squared_raw(raw.pairs[0], raw.pairs[1], raw.pairs[2], raw.pairs[3], raw.degree);
    if (inst.cbar_sq != expected_cbar(f, p))
        throw ConstructionInconsistency("self-intersection mismatch for family " +
                                        std::string(family_name(f)) + " at " + format_params(f, p));
    inst.expected_kappa = expected_kappa(f);
    return inst;
}

void for_each_instance(FamilyId f, i128 max_degree,
                       const std::function<void(const FamilyInstance&)>& fn) {
    const Bounds bounds = family_bounds(f);
    i128 prev_outer = -1;
    for (i128 a = bounds.a_min;; ++a) {
        const i128 d_outer = raw_instance(f, a, bounds.b_min).degree;
        if (d_outer <= prev_outer)
            throw ConstructionInconsistency("family degree must grow with every parameter");
        prev_outer = d_outer;
        if (d_outer > max_degree) break;
        if (bounds.unary) {
            fn(instantiate(f, FamilyParams{a, std::nullopt}));
            continue;
        }
        i128 prev_inner = -1;
        for (i128 b = bounds.b_min;; ++b) {
            const i128 d = raw_instance(f, a, b).degree;
            if (d <= prev_inner)
                throw ConstructionInconsistency("family degree must grow with every parameter");
            prev_inner = d;
            if (d > max_degree) break;
            fn(instantiate(f, FamilyParams{a, b}));
        }
    }
}

std::vector<FamilyInstance> enumerate_family(FamilyId f, i128 max_degree) {
    std::vector<FamilyInstance> out;
    for_each_instance(f, max_degree, [&](const FamilyInstance& inst) { out.push_back(inst); });
    return out;
}

std::vector<std::pair<FamilyId, FamilyParams>> identify(const ValidatedType& t, i128 d) {
    if (d < 3)
        throw std::invalid_argument("degree must be at least 3");
    std::vector<std::pair<FamilyId, FamilyParams>> out;
    for (const FamilyId f : kAllFamilies) {
        for_each_instance(f, d, [&](const FamilyInstance& inst) {
            if (inst.degree == d && inst.ntype == t)
                out.emplace_back(f, inst.params);
        });
    }
    return out;
}

const std::vector<ExceptionalType>& known_exceptions() {
    static const std::vector<ExceptionalType> exceptions = {
        {NewtonPairType{2, 7, 4, 17}, 17, "SS fails at l = 12"},
        {NewtonPairType{2, 3, 6, 31}, 20, "SS fails at l = 13"},
    };
    return exceptions;
}

} // namespace cusp
