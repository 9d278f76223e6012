#pragma once

// Checked unsigned arithmetic. Overflow raises LedgerError(Overflow); nothing
// wraps.

#include <cstdint>

#include "carbon/errors.hpp"

namespace carbon {

__extension__ typedef unsigned __int128 u128;

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit addition");
    return r;
}

inline u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "128-bit multiplication");
    return r;
}

inline u128 checked_add(u128 a, u128 b) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "128-bit addition");
    return r;
}

inline std::uint64_t narrow_u64(u128 v) {
    if (v > UINT64_MAX) fail(ErrorCode::Overflow, "result exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

/// floor(sqrt(n)).
inline std::uint64_t isqrt(u128 n) {
    if (n == 0) return 0;
    // Newton iteration from an over-estimate converges monotonically down.
    int bits = 128 - (static_cast<std::uint64_t>(n >> 64) != 0 ? __builtin_clzll(static_cast<std::uint64_t>(n >> 64))
                                                                 : 64 + __builtin_clzll(static_cast<std::uint64_t>(n)));
    u128 x = u128{1} << ((bits + 1) / 2);
    for (;;) {
        u128 y = (x + n / x) / 2;
        if (y >= x) return static_cast<std::uint64_t>(x);
        x = y;
    }
}

}  // namespace carbon
