#include "cusp/int128.hpp"

#include <algorithm>
#include <cmath>

namespace cusp {

u128 isqrt(u128 n) noexcept {
    if (n == 0) return 0;
    auto x = static_cast<u128>(std::sqrt(static_cast<double>(n)));
    if (x == 0) x = 1;
    // The double seed can be off by a few ulps; fix with division-based
    // comparisons so no intermediate product can overflow.
    while (x > n / x) --x;
    while (x + 1 <= n / (x + 1)) ++x;
    return x;
}

std::string to_dec(i128 value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    u128 mag = negative ? u128(0) - static_cast<u128>(value) : static_cast<u128>(value);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::optional<i128> parse_decimal(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-') {
        negative = true;
        i = 1;
    }
    if (i == text.size()) return std::nullopt;
    const u128 limit = negative ? (u128(1) << 127) : (u128(1) << 127) - 1;
    u128 mag = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') return std::nullopt;
        const u128 digit = static_cast<u128>(c - '0');
        if (mag > (limit - digit) / 10) return std::nullopt;
        mag = mag * 10 + digit;
    }
    return negative ? static_cast<i128>(u128(0) - mag) : static_cast<i128>(mag);
}

} // namespace cusp
