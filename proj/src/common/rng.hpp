#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "common/wide.hpp"
#include "gpselect/rational.hpp"

namespace gpsel::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent stream for (seed, tag).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(splitmix64(seed) ^ splitmix64(tag + 0x5851F42D4C957F2DULL));
}

// mt19937_64 with hand-rolled draws; the std distributions are not
// specified bit-for-bit, so results would differ across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t v;
        do v = eng_();
        while (v >= limit);
        return v % bound;
    }

    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return lo + static_cast<std::int64_t>(below(span));
    }

    // Exact: P(true) = p for a rational p in [0, 1].
    bool bernoulli(const Rational& p) {
        const u128 u = eng_();
        return u * static_cast<u128>(p.den()) < (static_cast<u128>(p.num()) << 64);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace gpsel::detail
