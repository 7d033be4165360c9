#pragma once

#include <cstdint>
#include <limits>
#include <numeric>

#include "gpselect/error.hpp"

namespace gpsel::detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool fits64(i128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t narrow64(i128 v, const char* what) {
    if (!fits64(v)) fail(ErrorKind::overflow, what);
    return static_cast<std::int64_t>(v);
}

inline std::uint64_t narrow_u64(u128 v, const char* what) {
    if (v > std::numeric_limits<std::uint64_t>::max()) fail(ErrorKind::overflow, what);
    return static_cast<std::uint64_t>(v);
}

inline int sign128(i128 v) { return (v > 0) - (v < 0); }

// Sign of (b - a) x (c - a) on integer coordinates. Inputs must satisfy
// |coord| < 2^62 so differences fit in 63 bits and products in 127.
inline int orient_int(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
                      std::int64_t cx, std::int64_t cy) {
    const i128 ux = bx - ax, uy = by - ay, vx = cx - ax, vy = cy - ay;
    return sign128(ux * vy - uy * vx);
}

inline std::uint64_t binom2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// C(n, k) with overflow detection.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) fail(ErrorKind::overflow, "binomial coefficient overflow");
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace gpsel::detail
