#include "gpselect/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "common/rng.hpp"
#include "common/wide.hpp"
#include "gpselect/detectors.hpp"
#include "gpselect/error.hpp"

namespace gpsel {

namespace {

constexpr int kClusterRetries = 64;
constexpr int kProjectionRetries = 32;
constexpr std::int64_t kProjectionPrime = 2147483647;  // 2^31 - 1

Point ipoint(std::int64_t x, std::int64_t y) { return Point{Rational(x), Rational(y)}; }

}  // namespace

PointSet grid(std::int64_t w, std::int64_t h) {
    require(w >= 1 && h >= 1, "grid dimensions must be positive");
    require(w <= (std::int64_t(1) << 31) / h, "grid too large");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(w * h));
    for (std::int64_t x = 1; x <= w; ++x)
        for (std::int64_t y = 1; y <= h; ++y) pts.push_back(ipoint(x, y));
    return PointSet(std::move(pts));
}

PointSet bernoulli_sample(const PointSet& points, const SeededSampler& sampler) {
    require(sampler.prob.sign() > 0 && sampler.prob < Rational(1), "sampling probability must lie in (0, 1)");
    detail::Rng rng(sampler.seed);
    std::vector<Point> kept;
    for (const Point& p : points)
        if (rng.bernoulli(sampler.prob)) kept.push_back(p);
    return PointSet(std::move(kept));
}

PointSet perturbed_cluster_grid(int k, int s, std::uint64_t seed) {
    require(k >= 2, "cluster grid needs k >= 2");
    require(s >= 2 && s <= 512, "cluster size must lie in [2, 512]");
    require(std::int64_t(k) * k * s <= (std::int64_t(1) << 20), "cluster grid too large");

    // Offsets and the segment each stay within eps/2, eps = 1/(64 k s).
    const std::int64_t den = (std::int64_t(1) << 20) * 64 * k * s;
    const std::int64_t step = (std::int64_t(1) << 9) / (s - 1);
    const std::uint64_t expected = std::uint64_t(k) * k * detail::binom(s, 3);

    detail::Rng rng(detail::derive_seed(seed, 0xC1));
    for (int attempt = 0; attempt < kClusterRetries; ++attempt) {
        std::vector<Point> pts;
        pts.reserve(std::size_t(k) * k * s);
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                const std::int64_t ou = rng.between(-(1 << 19), 1 << 19);
                const std::int64_t ov = rng.between(-(1 << 19), 1 << 19);
                std::int64_t a = 0, b = 0;
                while (a == 0 && b == 0) {
                    a = rng.between(-(1 << 10), 1 << 10);
                    b = rng.between(-(1 << 10), 1 << 10);
                }
                for (int t = 0; t < s; ++t)
                    pts.push_back(Point{Rational(i) + Rational(ou + t * a * step, den),
                                        Rational(j) + Rational(ov + t * b * step, den)});
            }
        PointSet out(std::move(pts));
        const auto stats = line_statistics(out);
        if (count_collinear_tuples(stats, 3) == expected && stats.s_max == std::max(s, 2)) return out;
    }
    fail(ErrorKind::budget, "could not realize generic perturbation");
}

PointSet parabola_set(std::int64_t n) {
    require(n >= 1, "parabola set needs n >= 1");
    require(n <= (std::int64_t(1) << 30), "parabola set too large");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (std::int64_t x = 1; x <= n; ++x) pts.push_back(ipoint(x, x * x));
    return PointSet(std::move(pts));
}

std::vector<std::int64_t> sidon_set(std::int64_t n) {
    require(n >= 1, "Sidon set needs n >= 1");
    require(n <= (std::int64_t(1) << 24), "Sidon set bound too large");
    std::vector<std::int64_t> set;
    std::vector<char> used(static_cast<std::size_t>(2 * n + 1), 0);
    for (std::int64_t x = 1; x <= n; ++x) {
        bool ok = true;
        for (auto a : set)
            if (used[a + x]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (auto a : set) used[a + x] = 1;
        set.push_back(x);
    }
    return set;
}

PointSet sidon_parabola_set(std::int64_t n) {
    std::vector<Point> pts;
    for (auto x : sidon_set(n)) pts.push_back(ipoint(x, x * x));
    return PointSet(std::move(pts));
}

namespace {

PointSet annulus_points(std::int64_t m, const Rational& x, bool sector) {
    const Rational inner = Rational(m) - x;
    const Rational inner2 = inner * inner;
    const std::int64_t outer2 = m * m;
    std::vector<Point> pts;
    for (std::int64_t px = 0; px <= 2 * m; ++px)
        for (std::int64_t py = 0; py <= 2 * m; ++py) {
            const std::int64_t wx = px - m, wy = py - m;
            const std::int64_t d2 = wx * wx + wy * wy;
            if (d2 > outer2 || Rational(d2) < inner2) continue;
            if (sector) {
                // between the rays along (97,-56) and (56,-97)
                if (97 * wy + 56 * wx > 0) continue;
                if (56 * wy + 97 * wx < 0) continue;
            }
            pts.push_back(ipoint(px, py));
        }
    return PointSet(std::move(pts));
}

}  // namespace

PointSet annulus(std::int64_t m, const Rational& x) {
    require(m >= 1 && m <= (std::int64_t(1) << 20), "annulus radius out of range");
    require(x.sign() > 0 && x <= Rational(m), "annulus width must lie in (0, m]");
    return annulus_points(m, x, false);
}

PointSet annulus_sector(std::int64_t m, const Rational& x) {
    require(m >= 4 && m <= (std::int64_t(1) << 20), "annulus sector radius out of range");
    require(x.sign() > 0 && x < Rational(m), "annulus sector width must lie in (0, m)");
    return annulus_points(m, x, true);
}

PointSet jarnik_arc(std::int64_t m) {
    require(m >= 2 && m <= (std::int64_t(1) << 24), "arc box size out of range");
    // Shells a + b = r. Whole shells are taken while they fit; the next
    // shell contributes mirrored pairs (a, b), (b, a) while they fit.
    struct Vec {
        std::int64_t a, b;
    };
    std::vector<Vec> vecs;
    std::int64_t sum = 0;  // sum of a (equal to sum of b by symmetry)
    for (std::int64_t r = 2;; ++r) {
        std::vector<Vec> shell;
        std::int64_t add = 0;
        for (std::int64_t a = 1; a < r; ++a)
            if (std::gcd(a, r - a) == 1) {
                shell.push_back({a, r - a});
                add += a;
            }
        if (sum + add <= m) {
            vecs.insert(vecs.end(), shell.begin(), shell.end());
            sum += add;
            continue;
        }
        for (std::int64_t a = 1; 2 * a < r; ++a) {
            if (std::gcd(a, r - a) != 1) continue;
            if (sum + r > m) break;
            vecs.push_back({a, r - a});
            vecs.push_back({r - a, a});
            sum += r;
        }
        break;
    }
    std::sort(vecs.begin(), vecs.end(), [](const Vec& u, const Vec& v) { return u.b * v.a < v.b * u.a; });
    std::vector<Point> pts{ipoint(0, 0)};
    std::int64_t cx = 0, cy = 0;
    for (const auto& v : vecs) {
        cx += v.a;
        cy += v.b;
        pts.push_back(ipoint(cx, cy));
    }
    return PointSet(std::move(pts));
}

std::vector<Point3> grid3_sample(std::int64_t n, const Rational& alpha, std::uint64_t seed) {
    require(n >= 8 && n <= 1024, "3D grid side must lie in [8, 1024]");
    require(alpha.sign() > 0 && alpha <= Rational(1), "alpha must lie in (0, 1]");
    const double p = 0.5 * std::pow(static_cast<double>(n), alpha.to_double() - 1.0);
    const Rational prob = alpha == Rational(1) ? Rational(1, 2) : Rational::floor_of(p, std::int64_t(1) << 40);
    detail::Rng rng(detail::derive_seed(seed, 0x3D));
    std::vector<Point3> out;
    for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t b = 1; b <= n; ++b)
            for (std::int64_t c = 1; c <= n; ++c)
                if (rng.bernoulli(prob)) out.push_back(Point3{a, b, c});
    return out;
}

PointSet grid3_projected_sample(std::int64_t n, const Rational& alpha, std::uint64_t seed) {
    const auto cloud = grid3_sample(n, alpha, seed);
    auto project = [&](std::int64_t lam, std::int64_t mu) {
        std::vector<Point> pts;
        pts.reserve(cloud.size());
        for (const auto& q : cloud)
            pts.push_back(Point{Rational(q.x) + Rational(lam * q.z, kProjectionPrime),
                                Rational(q.y) + Rational(mu * q.z, kProjectionPrime)});
        return pts;
    };
    if (cloud.size() <= 2) return PointSet(project(1, 1));

    const auto reference = line_statistics_3d(cloud);
    detail::Rng rng(detail::derive_seed(seed, 0x9E));
    for (int attempt = 0; attempt < kProjectionRetries; ++attempt) {
        const std::int64_t lam = rng.between(1, kProjectionPrime - 1);
        const std::int64_t mu = rng.between(1, kProjectionPrime - 1);
        auto pts = project(lam, mu);
        auto sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        PointSet out(std::move(pts));
        const auto stats = line_statistics(out);
        if (stats.b == reference.b) return out;
    }
    fail(ErrorKind::budget, "projection not generic");
}

}  // namespace gpsel
