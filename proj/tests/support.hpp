// Independent reference computations for tests. Everything here works
// directly from coordinates with Rational cross products, never through
// slope_key, line_key or the counting sweeps.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gpselect/geometry.hpp"

namespace ref {

using gpsel::Point;
using gpsel::PointSet;
using gpsel::Rational;

inline Rational cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

inline bool collinear(const Point& p, const Point& q, const Point& r) { return cross(p, q, r).sign() == 0; }

inline bool parallel(const Point& a, const Point& b, const Point& c, const Point& d) {
    return ((b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x)).sign() == 0;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::uint64_t triples(const PointSet& P) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j)
            for (std::size_t k = j + 1; k < P.size(); ++k) c += collinear(P[i], P[j], P[k]);
    return c;
}

// Same count on the scaled integer image, for coordinates whose
// denominators are too large for Rational cross products.
inline std::uint64_t triples_wide(const PointSet& P) {
    const auto& X = P.image().x;
    const auto& Y = P.image().y;
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j)
            for (std::size_t k = j + 1; k < X.size(); ++k) {
                const __int128 ux = X[j] - X[i], uy = Y[j] - Y[i], wx = X[k] - X[i], wy = Y[k] - Y[i];
                c += ux * wy == uy * wx;
            }
    return c;
}

// Pairs of disjoint pairs that are parallel but not on one line.
inline std::uint64_t trapezoids(const PointSet& P) {
    const std::size_t n = P.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::uint64_t c = 0;
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            const auto [i, j] = pairs[a];
            const auto [k, l] = pairs[b];
            if (i == k || i == l || j == k || j == l) continue;
            if (parallel(P[i], P[j], P[k], P[l]) && !collinear(P[i], P[j], P[k])) ++c;
        }
    return c;
}

// k_m: lines with exactly m points. Each line with m points is met by
// C(m, 2) of the pairs.
inline std::map<int, std::uint64_t> line_profile(const PointSet& P) {
    std::map<int, std::uint64_t> pair_hits;
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j) {
            int m = 2;
            for (std::size_t k = 0; k < P.size(); ++k)
                if (k != i && k != j && collinear(P[i], P[j], P[k])) ++m;
            ++pair_hits[m];
        }
    std::map<int, std::uint64_t> k;
    for (const auto& [m, hits] : pair_hits) k[m] = hits / choose(m, 2);
    return k;
}

inline std::uint64_t descending_pairs(const PointSet& P) {
    std::uint64_t c = 0;
    for (const auto& u : P)
        for (const auto& v : P) c += (u.x < v.x && u.y > v.y);
    return c;
}

inline bool general_position(const std::vector<Point>& S) {
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            for (std::size_t k = j + 1; k < S.size(); ++k)
                if (collinear(S[i], S[j], S[k])) return false;
    return true;
}

inline bool distinct_slopes(const std::vector<Point>& S) {
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            for (std::size_t k = 0; k < S.size(); ++k)
                for (std::size_t l = k + 1; l < S.size(); ++l) {
                    if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
                    if (parallel(S[i], S[j], S[k], S[l])) return false;
                }
    return true;
}

inline bool monotone(const std::vector<Point>& S) {
    bool up = true, down = true;
    for (const auto& u : S)
        for (const auto& v : S)
            if (u.x < v.x) {
                up = up && u.y <= v.y;
                down = down && u.y >= v.y;
            }
    return up || down;
}

// Largest subset satisfying `ok`, by enumerating all 2^n subsets.
template <class Pred>
std::size_t max_subset(const PointSet& P, Pred ok) {
    const std::size_t n = P.size();
    std::size_t best = 0;
    std::vector<Point> S;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best) continue;
        S.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) S.push_back(P[i]);
        if (ok(S)) best = size;
    }
    return best;
}

// Collinear triples of the k x k grid: every pair of endpoints with
// difference (a, b) has gcd(a, b) - 1 lattice points strictly between.
inline std::uint64_t grid_triples(std::int64_t k) {
    std::uint64_t c = 0;
    for (std::int64_t a = 0; a < k; ++a)
        for (std::int64_t b = -(k - 1); b < k; ++b) {
            if (a == 0 && b <= 0) continue;
            const std::int64_t g = std::gcd(a, b < 0 ? -b : b);
            c += static_cast<std::uint64_t>((k - a) * (k - (b < 0 ? -b : b)) * (g - 1));
        }
    return c;
}

inline PointSet random_integer_set(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    const auto side = static_cast<std::uint64_t>(hi - lo + 1);
    n = static_cast<std::size_t>(std::min<std::uint64_t>(n, side * side));
    while (seen.size() < n) seen.emplace(d(rng), d(rng));
    std::vector<Point> pts;
    for (const auto& [x, y] : seen) pts.push_back({Rational(x), Rational(y)});
    return PointSet(std::move(pts));
}

inline PointSet from_coords(std::initializer_list<std::pair<std::int64_t, std::int64_t>> coords) {
    std::vector<Point> pts;
    for (const auto& [x, y] : coords) pts.push_back({Rational(x), Rational(y)});
    return PointSet(std::move(pts));
}

inline PointSet line_of(std::int64_t m) {
    std::vector<Point> pts;
    for (std::int64_t i = 0; i < m; ++i) pts.push_back({Rational(i), Rational(2 * i + 1)});
    return PointSet(std::move(pts));
}

}  // namespace ref
