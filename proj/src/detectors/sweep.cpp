#include "detectors/sweep.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "common/wide.hpp"

namespace gpsel::detail {

namespace {

// C(C(t+1,2),2) - C(C(t,2),2): contribution of one anchor seeing t later
// points on a line, so that the t-values of a line with i points sum to
// C(C(i,2),2).
inline u128 pair_pair_increment(std::uint64_t t) {
    const u128 a = binom2(t + 1);
    const u128 b = binom2(t);
    return a * (a - 1) / 2 - (b < 2 ? 0 : b * (b - 1) / 2);
}

struct SlopeAccum {
    u128 pairs = 0;
    u128 same_line = 0;
};

void finish_tail(std::vector<std::uint64_t>& hist, SweepResult& out) {
    // hist[t] = lines with >= t+1 points
    std::size_t last = 0;
    for (std::size_t t = 1; t < hist.size(); ++t)
        if (hist[t] != 0) last = t;
    out.tail.assign(last + 2, 0);
    for (std::size_t t = 1; t <= last; ++t) out.tail[t + 1] = hist[t];
}

SweepResult sweep_dense(const IntegerImage& img, const DirectionIndex& index, bool with_trap) {
    const std::size_t n = img.x.size();
    std::vector<std::int64_t> linear(n);
    for (std::size_t i = 0; i < n; ++i) linear[i] = index.linear(img.x[i], img.y[i]);
    const std::uint32_t* canon = index.canon();
    const std::int64_t h = index.half_height();

    std::vector<std::uint32_t> count(index.slots(), 0);
    std::vector<std::uint32_t> touched;
    touched.reserve(n);
    std::vector<std::uint64_t> hist(n + 1, 0);

    std::vector<std::uint64_t> q_pairs;
    std::vector<std::uint32_t> slope_touched;
    std::vector<u128> s_wide;
    if (with_trap) {
        q_pairs.assign(index.slots(), 0);
        s_wide.assign(index.slots(), 0);
    }

    for (std::size_t a = 0; a + 1 < n; ++a) {
        const std::int64_t base = h - linear[a];
        for (std::size_t q = a + 1; q < n; ++q) {
            const std::uint32_t s = canon[linear[q] + base];
            if (count[s]++ == 0) touched.push_back(s);
        }
        if (with_trap) {
            for (auto s : touched) {
                const std::uint32_t t = count[s];
                ++hist[t];
                if (q_pairs[s] == 0) slope_touched.push_back(s);
                q_pairs[s] += t;
                if (t > 1) s_wide[s] += pair_pair_increment(t);
                count[s] = 0;
            }
        } else {
            for (auto s : touched) {
                ++hist[count[s]];
                count[s] = 0;
            }
        }
        touched.clear();
    }

    SweepResult out;
    finish_tail(hist, out);
    if (with_trap) {
        u128 total = 0;
        for (auto s : slope_touched) {
            const u128 q = q_pairs[s];
            total += q * (q - 1) / 2 - s_wide[s];
        }
        out.trapezoids = narrow_u64(total, "trapezoid count overflow");
    }
    return out;
}

SweepResult sweep_sparse(const IntegerImage& img, bool with_trap) {
    const std::size_t n = img.x.size();
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::unordered_map<SlopeKey, SlopeAccum, SlopeKeyHash> classes;

    // Open addressing keyed by reduced direction, cleared via stamps.
    std::size_t cap = 16;
    while (cap < 2 * n + 2) cap <<= 1;
    const std::size_t mask = cap - 1;
    std::vector<SlopeKey> keys(cap);
    std::vector<std::uint32_t> counts(cap, 0), stamps(cap, 0);
    std::vector<std::uint32_t> touched;
    touched.reserve(n);
    std::uint32_t stamp = 0;

    for (std::size_t a = 0; a + 1 < n; ++a) {
        ++stamp;
        const std::int64_t ax = img.x[a], ay = img.y[a];
        for (std::size_t q = a + 1; q < n; ++q) {
            const std::int64_t dx = img.x[q] - ax;  // >= 0 by canonical order
            const std::int64_t dy = img.y[q] - ay;
            const auto g = static_cast<std::int64_t>(
                ugcd(static_cast<std::uint64_t>(dx), static_cast<std::uint64_t>(dy < 0 ? -dy : dy)));
            const SlopeKey key{dx / g, dy / g};
            std::size_t pos = SlopeKeyHash{}(key) & mask;
            while (stamps[pos] == stamp && keys[pos] != key) pos = (pos + 1) & mask;
            if (stamps[pos] != stamp) {
                stamps[pos] = stamp;
                keys[pos] = key;
                counts[pos] = 1;
                touched.push_back(static_cast<std::uint32_t>(pos));
            } else {
                ++counts[pos];
            }
        }
        for (auto pos : touched) {
            const std::uint32_t t = counts[pos];
            ++hist[t];
            if (with_trap) {
                auto& acc = classes[keys[pos]];
                acc.pairs += t;
                if (t > 1) acc.same_line += pair_pair_increment(t);
            }
        }
        touched.clear();
    }

    SweepResult out;
    finish_tail(hist, out);
    if (with_trap) {
        u128 total = 0;
        for (const auto& [key, acc] : classes) total += acc.pairs * (acc.pairs - 1) / 2 - acc.same_line;
        out.trapezoids = narrow_u64(total, "trapezoid count overflow");
    }
    return out;
}

struct WideLineKey {
    std::int64_t a;
    std::int64_t b;
    i128 c;
    bool operator==(const WideLineKey&) const = default;
};

struct WideLineKeyHash {
    std::size_t operator()(const WideLineKey& k) const noexcept {
        std::uint64_t h = SlopeKeyHash{}(SlopeKey{k.a, k.b});
        const auto lo = static_cast<std::uint64_t>(k.c);
        const auto hi = static_cast<std::uint64_t>(static_cast<u128>(k.c) >> 64);
        h ^= lo * 0xBF58476D1CE4E5B9ULL + (h << 6) + (h >> 2);
        h ^= hi * 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Line through integer point (px, py) with reduced direction d; as d is
// primitive, (d.dy, -d.dx, c) is already the canonical integer form.
WideLineKey wide_line(const SlopeKey& d, std::int64_t px, std::int64_t py) {
    return {d.dy, -d.dx, i128(d.dx) * py - i128(d.dy) * px};
}

}  // namespace

SweepResult pair_sweep(const IntegerImage& image, const DirectionIndex& index, bool with_trapezoids) {
    if (image.x.size() < 2) return SweepResult{{0, 0}, 0};
    if (index.dense()) return sweep_dense(image, index, with_trapezoids);
    return sweep_sparse(image, with_trapezoids);
}

std::vector<std::uint64_t> triple_degrees(const IntegerImage& image, const DirectionIndex& index,
                                          std::span<const std::uint32_t> members) {
    std::vector<std::uint64_t> deg(members.size(), 0);
    if (members.size() < 3) return deg;

    if (index.dense()) {
        std::vector<std::uint32_t> count(index.slots(), 0);
        std::vector<std::uint32_t> touched;
        touched.reserve(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            const std::uint32_t p = members[i];
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (i == j) continue;
                const std::uint32_t q = members[j];
                const auto s = index.slot(image.x[q] - image.x[p], image.y[q] - image.y[p]);
                if (count[s]++ == 0) touched.push_back(s);
            }
            std::uint64_t d = 0;
            for (auto s : touched) {
                d += binom2(count[s]);
                count[s] = 0;
            }
            touched.clear();
            deg[i] = d;
        }
        return deg;
    }

    for (std::size_t i = 0; i < members.size(); ++i) {
        std::unordered_map<SlopeKey, std::uint32_t, SlopeKeyHash> count;
        const std::uint32_t p = members[i];
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (i == j) continue;
            const std::uint32_t q = members[j];
            ++count[reduce_direction(image.x[q] - image.x[p], image.y[q] - image.y[p])];
        }
        std::uint64_t d = 0;
        for (const auto& [k, c] : count) d += binom2(c);
        deg[i] = d;
    }
    return deg;
}

std::vector<std::vector<std::uint32_t>> rich_lines(const IntegerImage& image, std::size_t min_points) {
    std::vector<std::vector<std::uint32_t>> lines;
    const std::size_t n = image.x.size();
    if (min_points < 2) min_points = 2;
    std::unordered_set<WideLineKey, WideLineKeyHash> seen;
    for (std::size_t a = 0; a + 1 < n; ++a) {
        std::map<SlopeKey, std::vector<std::uint32_t>> groups;
        for (std::size_t q = a + 1; q < n; ++q)
            groups[reduce_direction(image.x[q] - image.x[a], image.y[q] - image.y[a])].push_back(
                static_cast<std::uint32_t>(q));
        for (auto& [dir, pts] : groups) {
            if (pts.size() + 1 < min_points) continue;
            if (!seen.insert(wide_line(dir, image.x[a], image.y[a])).second) continue;
            std::vector<std::uint32_t> line;
            line.reserve(pts.size() + 1);
            line.push_back(static_cast<std::uint32_t>(a));
            line.insert(line.end(), pts.begin(), pts.end());
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

std::vector<std::array<std::uint32_t, 4>> trapezoid_quads(const IntegerImage& image) {
    // Group all spanned lines by direction, then pair up pairs across lines.
    const auto lines = rich_lines(image, 2);
    std::map<SlopeKey, std::vector<std::size_t>> by_slope;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& l = lines[li];
        by_slope[reduce_direction(image.x[l[1]] - image.x[l[0]], image.y[l[1]] - image.y[l[0]])].push_back(li);
    }
    std::vector<std::array<std::uint32_t, 4>> quads;
    for (const auto& [dir, ids] : by_slope) {
        if (ids.size() < 2) continue;
        for (std::size_t u = 0; u < ids.size(); ++u) {
            const auto& l1 = lines[ids[u]];
            for (std::size_t v = u + 1; v < ids.size(); ++v) {
                const auto& l2 = lines[ids[v]];
                for (std::size_t i = 0; i < l1.size(); ++i)
                    for (std::size_t j = i + 1; j < l1.size(); ++j)
                        for (std::size_t k = 0; k < l2.size(); ++k)
                            for (std::size_t m = k + 1; m < l2.size(); ++m) {
                                std::array<std::uint32_t, 2> p1{l1[i], l1[j]}, p2{l2[k], l2[m]};
                                if (p2 < p1) std::swap(p1, p2);
                                quads.push_back({p1[0], p1[1], p2[0], p2[1]});
                            }
            }
        }
    }
    std::sort(quads.begin(), quads.end());
    return quads;
}

}  // namespace gpsel::detail
