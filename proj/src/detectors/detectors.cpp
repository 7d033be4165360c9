#include "gpselect/detectors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "common/directions.hpp"
#include "common/wide.hpp"
#include "detectors/sweep.hpp"
#include "gpselect/error.hpp"

namespace gpsel {

namespace {

LineStatistics stats_from_tail(std::size_t n, const std::vector<std::uint64_t>& tail) {
    LineStatistics st;
    st.n = n;
    st.s_max = static_cast<int>(tail.size()) - 1;
    for (int i = 2; i <= st.s_max; ++i) {
        st.b[i] = tail[i];
        const std::uint64_t next = (i + 1 <= st.s_max) ? tail[i + 1] : 0;
        if (tail[i] > next) st.k[i] = tail[i] - next;
    }
    return st;
}

}  // namespace

LineStatistics line_statistics(const PointSet& points) {
    require(points.size() >= 2, "insufficient points");
    const detail::DirectionIndex index(points.image());
    const auto sweep = detail::pair_sweep(points.image(), index, false);
    return stats_from_tail(points.size(), sweep.tail);
}

std::uint64_t count_collinear_tuples(const LineStatistics& stats, int t) {
    require(t >= 3, "collinear tuple size must be at least 3");
    detail::u128 total = 0;
    for (const auto& [i, k] : stats.k) total += detail::u128(k) * detail::binom(i, t);
    return detail::narrow_u64(total, "collinear tuple count overflow");
}

std::uint64_t count_collinear_tuples(const PointSet& points, int t) {
    require(t >= 3, "collinear tuple size must be at least 3");
    if (points.size() < 3) return 0;
    return count_collinear_tuples(line_statistics(points), t);
}

std::uint64_t count_trapezoids(const PointSet& points) {
    require(points.size() >= 4, "trapezoid counting needs at least 4 points");
    const detail::DirectionIndex index(points.image());
    return detail::pair_sweep(points.image(), index, true).trapezoids;
}

std::uint64_t count_descending_pairs(const PointSet& points) {
    const auto& img = points.image();
    const std::size_t n = img.x.size();
    if (n < 2) return 0;
    std::vector<std::int64_t> ys = img.y;
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::vector<std::uint64_t> fenwick(ys.size() + 1, 0);
    auto rank = [&](std::int64_t y) { return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()) + 1; };
    auto prefix = [&](std::size_t r) {
        std::uint64_t s = 0;
        for (; r > 0; r -= r & (~r + 1)) s += fenwick[r];
        return s;
    };
    std::uint64_t inserted = 0, total = 0;
    std::size_t g = 0;
    while (g < n) {
        std::size_t e = g;
        while (e < n && img.x[e] == img.x[g]) ++e;
        // points of strictly smaller x with larger y
        for (std::size_t i = g; i < e; ++i) total += inserted - prefix(rank(img.y[i]));
        for (std::size_t i = g; i < e; ++i) {
            for (std::size_t r = rank(img.y[i]); r < fenwick.size(); r += r & (~r + 1)) ++fenwick[r];
            ++inserted;
        }
        g = e;
    }
    return total;
}

std::optional<CollinearTriple> verify_general_position(const PointSet& points) {
    const auto& img = points.image();
    const std::size_t n = points.size();
    if (n < 3) return std::nullopt;
    const detail::DirectionIndex index(img);
    if (index.dense()) {
        constexpr std::uint32_t kNone = ~0u;
        std::vector<std::uint32_t> first(index.slots(), kNone);
        std::vector<std::uint32_t> touched;
        for (std::size_t a = 0; a + 2 < n; ++a) {
            for (std::size_t q = a + 1; q < n; ++q) {
                const auto s = index.forward_slot(img.x[q] - img.x[a], img.y[q] - img.y[a]);
                if (first[s] != kNone) return CollinearTriple{points[a], points[first[s]], points[q]};
                first[s] = static_cast<std::uint32_t>(q);
                touched.push_back(s);
            }
            for (auto s : touched) first[s] = kNone;
            touched.clear();
        }
        return std::nullopt;
    }
    std::unordered_map<SlopeKey, std::uint32_t, SlopeKeyHash> first;
    for (std::size_t a = 0; a + 2 < n; ++a) {
        first.clear();
        for (std::size_t q = a + 1; q < n; ++q) {
            auto [it, fresh] = first.try_emplace(detail::reduce_direction(img.x[q] - img.x[a], img.y[q] - img.y[a]),
                                                 static_cast<std::uint32_t>(q));
            if (!fresh) return CollinearTriple{points[a], points[it->second], points[q]};
        }
    }
    return std::nullopt;
}

std::optional<PairOfPairs> verify_distinct_slopes(const PointSet& points) {
    const auto& img = points.image();
    const std::size_t n = points.size();
    if (n < 3) return std::nullopt;
    const detail::DirectionIndex index(img);
    auto witness = [&](std::uint64_t packed, std::size_t a, std::size_t q) {
        const auto i = static_cast<std::size_t>(packed >> 32), j = static_cast<std::size_t>(packed & 0xffffffffu);
        return PairOfPairs{{points[i], points[j]}, {points[a], points[q]}};
    };
    if (index.dense()) {
        constexpr std::uint64_t kNone = ~std::uint64_t(0);
        std::vector<std::uint64_t> first(index.slots(), kNone);
        for (std::size_t a = 0; a + 1 < n; ++a)
            for (std::size_t q = a + 1; q < n; ++q) {
                const auto s = index.forward_slot(img.x[q] - img.x[a], img.y[q] - img.y[a]);
                if (first[s] != kNone) return witness(first[s], a, q);
                first[s] = (std::uint64_t(a) << 32) | q;
            }
        return std::nullopt;
    }
    std::unordered_map<SlopeKey, std::uint64_t, SlopeKeyHash> first;
    for (std::size_t a = 0; a + 1 < n; ++a)
        for (std::size_t q = a + 1; q < n; ++q) {
            auto [it, fresh] = first.try_emplace(detail::reduce_direction(img.x[q] - img.x[a], img.y[q] - img.y[a]),
                                                 (std::uint64_t(a) << 32) | q);
            if (!fresh) return witness(it->second, a, q);
        }
    return std::nullopt;
}

MonotoneCheck verify_monotone(const PointSet& points) {
    MonotoneCheck out;
    const std::size_t n = points.size();
    std::size_t g = 0;
    std::optional<std::size_t> hi, lo;  // argmax / argmin y over strictly smaller x
    while (g < n) {
        std::size_t e = g;
        while (e < n && points[e].x == points[g].x) ++e;
        for (std::size_t i = g; i < e; ++i) {
            if (out.non_decreasing && hi && points[*hi].y > points[i].y) {
                out.non_decreasing = false;
                out.non_decreasing_violation = PointPair{points[*hi], points[i]};
            }
            if (out.non_increasing && lo && points[*lo].y < points[i].y) {
                out.non_increasing = false;
                out.non_increasing_violation = PointPair{points[*lo], points[i]};
            }
        }
        for (std::size_t i = g; i < e; ++i) {
            if (!hi || points[i].y > points[*hi].y) hi = i;
            if (!lo || points[i].y < points[*lo].y) lo = i;
        }
        g = e;
    }
    return out;
}

std::vector<StProfileRow> st_profile_check(const LineStatistics& stats, const Rational& c) {
    require(c.sign() > 0, "Szemeredi-Trotter constant must be positive");
    require(stats.n >= 2, "insufficient points");
    const long double n = static_cast<long double>(stats.n);
    const long double cc = static_cast<long double>(c.num()) / static_cast<long double>(c.den());
    std::vector<StProfileRow> rows;
    for (const auto& [i, b] : stats.b) {
        const long double li = i;
        const long double bound = cc * (n * n / (li * li * li) + n / li);
        rows.push_back({i, b, static_cast<double>(bound), static_cast<long double>(b) <= bound});
    }
    return rows;
}

std::vector<StProfileRow> st_profile_check(const PointSet& points, const Rational& c) {
    require(c.sign() > 0, "Szemeredi-Trotter constant must be positive");
    return st_profile_check(line_statistics(points), c);
}

ObstacleReport obstacle_report(const PointSet& points, std::size_t witness_limit) {
    ObstacleReport rep;
    const std::size_t n = points.size();
    if (n >= 2) {
        const detail::DirectionIndex index(points.image());
        const auto sweep = detail::pair_sweep(points.image(), index, n >= 4);
        rep.collinear_triples = count_collinear_tuples(stats_from_tail(n, sweep.tail), 3);
        rep.trapezoids = sweep.trapezoids;
    }
    rep.descending_pairs = count_descending_pairs(points);
    if (witness_limit == 0) return rep;

    const auto& img = points.image();
    if (rep.collinear_triples > 0) {
        std::unordered_map<SlopeKey, std::uint32_t, SlopeKeyHash> first;
        for (std::size_t a = 0; a + 2 < n && rep.triple_witnesses.size() < witness_limit; ++a) {
            first.clear();
            for (std::size_t q = a + 1; q < n && rep.triple_witnesses.size() < witness_limit; ++q) {
                auto [it, fresh] = first.try_emplace(
                    detail::reduce_direction(img.x[q] - img.x[a], img.y[q] - img.y[a]), static_cast<std::uint32_t>(q));
                if (!fresh) rep.triple_witnesses.push_back({points[a], points[it->second], points[q]});
            }
        }
    }
    if (rep.trapezoids > 0) {
        std::unordered_map<SlopeKey, std::pair<std::uint32_t, std::uint32_t>, SlopeKeyHash> first;
        for (std::size_t a = 0; a + 1 < n && rep.trapezoid_witnesses.size() < witness_limit; ++a)
            for (std::size_t q = a + 1; q < n && rep.trapezoid_witnesses.size() < witness_limit; ++q) {
                auto [it, fresh] =
                    first.try_emplace(detail::reduce_direction(img.x[q] - img.x[a], img.y[q] - img.y[a]),
                                      std::pair{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(q)});
                if (fresh) continue;
                const auto [i, j] = it->second;
                if (i == a || j == a || i == q || j == q) continue;
                if (detail::orient_int(img.x[i], img.y[i], img.x[j], img.y[j], img.x[a], img.y[a]) == 0) continue;
                rep.trapezoid_witnesses.push_back({{points[i], points[j]}, {points[a], points[q]}});
            }
    }
    if (rep.descending_pairs > 0) {
        for (std::size_t a = 0; a + 1 < n && rep.descending_witnesses.size() < witness_limit; ++a)
            for (std::size_t q = a + 1; q < n && rep.descending_witnesses.size() < witness_limit; ++q)
                if (img.x[a] < img.x[q] && img.y[a] > img.y[q]) rep.descending_witnesses.push_back({points[a], points[q]});
    }
    return rep;
}

std::optional<PairOfPairs> parabola_sum_collision(const PointSet& points) {
    for (const Point& p : points) require(p.y == p.x * p.x, "point " + p.x.to_string() + " is not on y = x^2");
    std::map<Rational, std::pair<std::size_t, std::size_t>> sums;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            auto [it, fresh] = sums.try_emplace(points[i].x + points[j].x, std::pair{i, j});
            if (!fresh) {
                const auto [a, b] = it->second;
                return PairOfPairs{{points[a], points[b]}, {points[i], points[j]}};
            }
        }
    return std::nullopt;
}

LineStatistics line_statistics_3d(const std::vector<Point3>& input) {
    std::vector<Point3> pts = input;
    std::sort(pts.begin(), pts.end());
    require(std::adjacent_find(pts.begin(), pts.end()) == pts.end(), "duplicate point");
    require(pts.size() >= 2, "insufficient points");
    const std::size_t n = pts.size();

    struct Dir3 {
        std::int64_t x, y, z;
        bool operator==(const Dir3&) const = default;
    };
    struct Dir3Hash {
        std::size_t operator()(const Dir3& d) const noexcept {
            std::uint64_t h = static_cast<std::uint64_t>(d.x) * 0x9E3779B97F4A7C15ULL;
            h ^= static_cast<std::uint64_t>(d.y) * 0xBF58476D1CE4E5B9ULL + (h << 6) + (h >> 2);
            h ^= static_cast<std::uint64_t>(d.z) * 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::unordered_map<Dir3, std::uint32_t, Dir3Hash> count;
    count.reserve(2 * n);
    for (std::size_t a = 0; a + 1 < n; ++a) {
        count.clear();
        for (std::size_t q = a + 1; q < n; ++q) {
            // Lexicographic order makes the first nonzero component positive.
            std::int64_t dx = pts[q].x - pts[a].x, dy = pts[q].y - pts[a].y, dz = pts[q].z - pts[a].z;
            const auto g = static_cast<std::int64_t>(std::gcd(std::gcd(static_cast<std::uint64_t>(dx < 0 ? -dx : dx),
                                                                       static_cast<std::uint64_t>(dy < 0 ? -dy : dy)),
                                                              static_cast<std::uint64_t>(dz < 0 ? -dz : dz)));
            ++count[Dir3{dx / g, dy / g, dz / g}];
        }
        for (const auto& [d, t] : count) ++hist[t];
    }
    std::size_t last = 1;
    for (std::size_t t = 1; t < hist.size(); ++t)
        if (hist[t] != 0) last = t;
    std::vector<std::uint64_t> tail(last + 2, 0);
    for (std::size_t t = 1; t <= last; ++t) tail[t + 1] = hist[t];
    return stats_from_tail(n, tail);
}

}  // namespace gpsel
