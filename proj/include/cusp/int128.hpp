#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cusp {

// Every quantity in the pipeline is exact. 128-bit checked operations cover
// all values we ever materialize (the Fibonacci-parametrized degrees grow
// exponentially and leave 64-bit range around k = 12); anything past 128 bits
// raises OverflowError instead of wrapping.
using i128 = __int128;
using u128 = unsigned __int128;

class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline i128 checked_add(i128 a, i128 b) {
    i128 out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("integer addition exceeds 128-bit range");
    return out;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("integer subtraction exceeds 128-bit range");
    return out;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer multiplication exceeds 128-bit range");
    return out;
}

constexpr i128 gcd_exact(i128 a, i128 b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Exact floor square root; never trusts the floating-point seed.
u128 isqrt(u128 n) noexcept;

std::string to_dec(i128 value);

/// Strict decimal parse (optional leading '-', digits only). Empty or
/// out-of-range input yields nullopt.
std::optional<i128> parse_decimal(std::string_view text);

} // namespace cusp
