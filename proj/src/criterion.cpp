#include "cusp/criterion.hpp"

namespace cusp {

DegreeFromDelta degree_from_delta(i128 delta) {
    if (delta < 0)
        throw std::invalid_argument("delta must be non-negative");
    if (delta == 0)
        return {DegreeFromDelta::Status::DegenerateDegree, 0};
    const i128 disc = checked_add(checked_mul(8, delta), 1);
    const u128 root = isqrt(static_cast<u128>(disc));
    if (static_cast<i128>(root * root) != disc)
        return {DegreeFromDelta::Status::NoIntegerDegree, 0};
    // disc is odd, so its root is odd and (3 + root) is even.
    return {DegreeFromDelta::Status::Found, (3 + static_cast<i128>(root)) / 2};
}

CriterionReport check_sdp(const NumericalSemigroup& s, i128 d) {
    if (d < 3)
        throw DegreeMismatch("degree " + to_dec(d) + " is below 3");
    if (checked_mul(d - 1, d - 2) != checked_mul(2, s.delta))
        throw DegreeMismatch("(d-1)(d-2) != 2*delta for d = " + to_dec(d) + ", delta = " +
                             to_dec(s.delta));
    CriterionReport report;
    report.rows.reserve(static_cast<std::size_t>(d - 2));
    for (i128 j = 0; j <= d - 3; ++j) {
        const i128 r = s.count_upto(j * d);
        const i128 target = (j + 1) * (j + 2) / 2;
        report.rows.push_back(CriterionRow{j, r, target});
        if (r != target && !report.fail_at)
            report.fail_at = j;
    }
    return report;
}

CriterionReport check_sdp(const ValidatedType& t, i128 d) {
    const i128 dlt = delta(t);
    if (d < 3 || checked_mul(d - 1, d - 2) != checked_mul(2, dlt))
        throw DegreeMismatch("degree " + to_dec(d) + " does not satisfy degree-genus for delta " +
                             to_dec(dlt));
    return check_sdp(build_semigroup(t), d);
}

i128 cbar_squared_raw(i128 p1, i128 q1, i128 p2, i128 q2, i128 d) {
    i128 linear = checked_sub(checked_mul(3, d), 1);
    linear = checked_sub(linear, checked_mul(p1, p2));
    linear = checked_sub(linear, checked_mul(q1, p2));
    linear = checked_sub(linear, q2);

    i128 quadratic = checked_mul(d, d);
    quadratic = checked_sub(quadratic, checked_mul(p2, q2));
    quadratic = checked_sub(quadratic, checked_mul(checked_mul(p1, q1), checked_mul(p2, p2)));

    if (linear != quadratic)
        throw InconsistentDegree("self-intersection formulas disagree at d = " + to_dec(d) +
                                 ": degree-genus fails for this degree");
    return linear;
}

i128 cbar_squared(const NewtonPairType& t, i128 d) {
    if (d < 3)
        throw std::invalid_argument("degree must be at least 3");
    return cbar_squared_raw(t.p1, t.q1, t.p2, t.q2, d);
}

KodairaHint kodaira_hint(i128 cbar_sq) {
    return cbar_sq >= -1 ? KodairaHint::MinusInfinity : KodairaHint::OneOrTwo;
}

} // namespace cusp
