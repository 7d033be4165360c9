#include "gpselect/selectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "common/directions.hpp"
#include "common/rng.hpp"
#include "detectors/sweep.hpp"
#include "gpselect/detectors.hpp"
#include "gpselect/error.hpp"
#include "gpselect/oracle.hpp"
#include "selectors/deletion.hpp"

namespace gpsel {

namespace {

constexpr std::uint64_t kMaxObstacleEdges = 50'000'000;

std::vector<std::uint32_t> iota_indices(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0u);
    return v;
}

std::vector<std::uint32_t> sample_indices(std::size_t n, const Rational& prob, std::uint64_t seed) {
    if (prob == Rational(1)) return iota_indices(n);
    detail::Rng rng(seed);
    std::vector<std::uint32_t> kept;
    for (std::uint32_t i = 0; i < n; ++i)
        if (rng.bernoulli(prob)) kept.push_back(i);
    return kept;
}

void check_edge_budget(std::uint64_t edges) {
    if (edges > kMaxObstacleEdges) fail(ErrorKind::budget, "too many obstacles to enumerate");
}

void add_triples(const PointSet& s, detail::Obstacles& h) {
    if (s.size() < 3) return;
    check_edge_budget(h.edges.size() + count_collinear_tuples(s, 3));
    for (const auto& line : detail::rich_lines(s.image(), 3))
        for (std::size_t a = 0; a < line.size(); ++a)
            for (std::size_t b = a + 1; b < line.size(); ++b)
                for (std::size_t c = b + 1; c < line.size(); ++c) h.add({line[a], line[b], line[c]});
}

void add_trapezoids(const PointSet& s, detail::Obstacles& h) {
    if (s.size() < 4) return;
    check_edge_budget(h.edges.size() + count_trapezoids(s));
    for (const auto& q : detail::trapezoid_quads(s.image())) h.add({q[0], q[1], q[2], q[3]});
}

void add_descending(const PointSet& s, detail::Obstacles& h) {
    check_edge_budget(h.edges.size() + count_descending_pairs(s));
    const auto& img = s.image();
    for (std::uint32_t i = 0; i < s.size(); ++i)
        for (std::uint32_t j = i + 1; j < s.size(); ++j)
            if (img.x[i] < img.x[j] && img.y[i] > img.y[j]) h.add({i, j});
}

SelectionResult delete_obstacles(const PointSet& sample, detail::Obstacles& h, Certificate cert,
                                 std::uint64_t seed) {
    h.n = static_cast<std::uint32_t>(sample.size());
    SelectionResult r;
    r.certificate = cert;
    r.seed = seed;
    r.trace.sampled = sample.size();
    r.trace.obstacles = h.edges.size();
    const auto kept = detail::delete_until_clean(h, &r.trace.deletions);
    r.chosen = sample.subset(kept);
    return r;
}

void certify(const SelectionResult& r) {
    bool ok = true;
    switch (r.certificate) {
        case Certificate::general_position:
            ok = !verify_general_position(r.chosen);
            break;
        case Certificate::monotone_general_position:
            ok = verify_monotone(r.chosen).ok() && !verify_general_position(r.chosen);
            break;
        case Certificate::distinct_slopes:
            ok = !verify_distinct_slopes(r.chosen);
            break;
        case Certificate::monotone:
            ok = verify_monotone(r.chosen).ok();
            break;
    }
    if (!ok) fail(ErrorKind::certification, "selection failed its " + std::string(to_string(r.certificate)) + " check");
}

// Points of `order` kept by the greedy rule, in acceptance order.
std::vector<std::uint32_t> greedy_indices(const IntegerImage& img, const detail::DirectionIndex& index,
                                          const std::vector<std::uint32_t>& order) {
    std::vector<std::uint32_t> chosen;
    detail::DirectionCounter dirs(index, 64);
    for (auto p : order) {
        dirs.reset();
        bool ok = true;
        for (auto c : chosen)
            if (dirs.add(img.x[c] - img.x[p], img.y[c] - img.y[p]) > 1) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(p);
    }
    return chosen;
}

bool fits_class(const IntegerImage& img, detail::DirectionCounter& dirs, const std::vector<std::uint32_t>& cls,
                std::uint32_t p) {
    dirs.reset();
    for (auto c : cls)
        if (dirs.add(img.x[c] - img.x[p], img.y[c] - img.y[p]) > 1) return false;
    return true;
}

// Indices of a longest non-decreasing subsequence of `v`.
std::vector<std::size_t> longest_non_decreasing(const std::vector<std::int64_t>& v) {
    std::vector<std::size_t> tails, parent(v.size(), SIZE_MAX);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto it = std::upper_bound(tails.begin(), tails.end(), v[i],
                                         [&](std::int64_t val, std::size_t t) { return val < v[t]; });
        const auto pos = static_cast<std::size_t>(it - tails.begin());
        if (pos > 0) parent[i] = tails[pos - 1];
        if (it == tails.end())
            tails.push_back(i);
        else
            *it = i;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = tails.empty() ? SIZE_MAX : tails.back(); i != SIZE_MAX; i = parent[i]) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

double ln(double v) { return std::log(v); }

Rational probability(double p) {
    if (p >= 1.0) return Rational(1);
    return Rational::floor_of(p, std::int64_t(1) << 40);
}

}  // namespace

std::string_view to_string(Certificate c) {
    switch (c) {
        case Certificate::general_position:
            return "general-position";
        case Certificate::monotone_general_position:
            return "monotone-general-position";
        case Certificate::distinct_slopes:
            return "distinct-slopes";
        case Certificate::monotone:
            return "monotone";
    }
    return "unknown";
}

SelectionResult greedy_general_position(const PointSet& points, std::uint64_t order_seed) {
    auto order = iota_indices(points.size());
    detail::Rng rng(detail::derive_seed(order_seed, 0x6E));
    rng.shuffle(order);
    const detail::DirectionIndex index(points.image());
    const auto kept = greedy_indices(points.image(), index, order);
    SelectionResult r;
    r.chosen = points.subset(kept);
    r.certificate = Certificate::general_position;
    r.seed = order_seed;
    r.trace.sampled = points.size();
    r.trace.deletions = points.size() - kept.size();
    r.trace.obstacles = r.trace.deletions;
    certify(r);
    return r;
}

SelectionResult sample_delete_general_position(const PointSet& points, const SeededSampler& sampler) {
    require(sampler.prob.sign() > 0 && sampler.prob <= Rational(1), "sampling probability must lie in (0, 1]");
    const PointSet sample = points.subset(sample_indices(points.size(), sampler.prob, sampler.seed));
    detail::Obstacles h;
    add_triples(sample, h);
    auto r = delete_obstacles(sample, h, Certificate::general_position, sampler.seed);
    certify(r);
    return r;
}

SelectionResult longest_monotone(const PointSet& points) {
    const auto& img = points.image();
    // Canonical order is (x, y) ascending: the non-decreasing pass.
    std::vector<std::size_t> best = longest_non_decreasing(img.y);
    std::vector<std::uint32_t> kept(best.begin(), best.end());

    // Non-increasing pass: x ascending, y descending, on -y.
    std::vector<std::uint32_t> order = iota_indices(points.size());
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (img.x[a] != img.x[b]) return img.x[a] < img.x[b];
        return img.y[a] > img.y[b];
    });
    std::vector<std::int64_t> neg;
    neg.reserve(order.size());
    for (auto i : order) neg.push_back(-img.y[i]);
    const auto down = longest_non_decreasing(neg);
    if (down.size() > kept.size()) {
        kept.clear();
        for (auto i : down) kept.push_back(order[i]);
    }

    SelectionResult r;
    r.chosen = points.subset(kept);
    r.certificate = Certificate::monotone;
    r.trace.sampled = points.size();
    r.trace.deletions = points.size() - kept.size();
    r.trace.obstacles = r.trace.deletions;
    certify(r);
    return r;
}

SelectionResult monotone_gp_two_stage(const PointSet& points, const SeededSampler& sampler) {
    auto greedy = greedy_general_position(points, sampler.seed);
    auto sampled = sample_delete_general_position(points, sampler);
    const SelectionResult& stage1 = sampled.chosen.size() > greedy.chosen.size() ? sampled : greedy;
    const auto mono = longest_monotone(stage1.chosen);

    SelectionResult r;
    r.chosen = mono.chosen;
    r.certificate = Certificate::monotone_general_position;
    r.seed = sampler.seed;
    r.trace.sampled = points.size();
    r.trace.deletions = points.size() - r.chosen.size();
    r.trace.obstacles = stage1.trace.obstacles + (stage1.chosen.size() - r.chosen.size()) +
                        (points.size() - stage1.trace.sampled);
    certify(r);
    return r;
}

AnnulusParameters annulus_parameters(std::int64_t m, const Rational& c) {
    require(m >= 32, "annulus selection needs m >= 32");
    require(c.sign() > 0, "constant c must be positive");
    AnnulusParameters a;
    a.n = static_cast<std::uint64_t>((2 * m + 1) * (2 * m + 1));
    const double n = static_cast<double>(a.n);
    a.x = Rational::floor_of(std::pow(n, 0.1) * std::pow(ln(n), 0.4), std::int64_t(1) << 20);
    a.prob = probability(c.to_double() / (std::pow(n, 0.2) * std::pow(ln(n), 0.8)));
    require(a.prob.sign() > 0, "sampling probability underflow");
    return a;
}

SelectionResult annulus_monotone_gp(std::int64_t m, std::uint64_t seed, const Rational& c) {
    const auto params = annulus_parameters(m, c);
    require(params.x < Rational(m), "annulus width must stay below m");
    const PointSet sector = annulus_sector(m, params.x);
    const PointSet sample = sector.subset(sample_indices(sector.size(), params.prob, seed));
    detail::Obstacles h;
    add_descending(sample, h);
    add_triples(sample, h);
    auto r = delete_obstacles(sample, h, Certificate::monotone_general_position, seed);
    if (!verify_monotone(r.chosen).non_decreasing) fail(ErrorKind::certification, "annulus selection not non-decreasing");
    certify(r);
    return r;
}

Rational distinct_slopes_probability(std::size_t n, int s, const Rational& c) {
    require(n >= 1 && s >= 2, "distinct slopes probability needs n >= 1, s >= 2");
    require(c.sign() > 0, "constant c must be positive");
    const double nn = static_cast<double>(n);
    const double k = c.to_double() * std::cbrt(nn / ln(static_cast<double>(s)));
    return probability(k / nn);
}

SelectionResult distinct_slopes_select(const PointSet& points, std::uint64_t seed, const Rational& c) {
    require(points.size() >= 4, "distinct slopes selection needs at least 4 points");
    return distinct_slopes_select(points, line_statistics(points).s_max, seed, c);
}

SelectionResult distinct_slopes_select(const PointSet& points, int s, std::uint64_t seed, const Rational& c) {
    require(points.size() >= 4, "distinct slopes selection needs at least 4 points");
    const Rational prob = distinct_slopes_probability(points.size(), s, c);
    const PointSet sample = points.subset(sample_indices(points.size(), prob, seed));
    detail::Obstacles h;
    add_triples(sample, h);
    add_trapezoids(sample, h);
    auto r = delete_obstacles(sample, h, Certificate::distinct_slopes, seed);
    certify(r);
    return r;
}

Coloring gp_coloring(const PointSet& points) {
    require(!points.empty(), "coloring needs at least one point");
    const auto& img = points.image();
    const detail::DirectionIndex index(img);
    detail::DirectionCounter dirs(index, 64);
    const std::size_t n = points.size();

    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<std::uint32_t> remaining = iota_indices(n);

    const double nn = static_cast<double>(n);
    const double rounds_real = n >= 4 ? std::log2(std::log2(nn)) - 2.0 * kColoringC : 0.0;
    const int rounds = rounds_real >= 1.0 ? static_cast<int>(std::floor(rounds_real)) : 0;

    for (int round = 0; round < rounds && remaining.size() >= 2; ++round) {
        const auto deg = detail::triple_degrees(img, index, remaining);
        std::vector<std::size_t> rank(remaining.size());
        std::iota(rank.begin(), rank.end(), std::size_t(0));
        std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
        const std::size_t half_size = (remaining.size() + 1) / 2;
        std::vector<std::uint32_t> half, rest;
        std::vector<char> in_half(remaining.size(), 0);
        for (std::size_t i = 0; i < half_size; ++i) in_half[rank[i]] = 1;
        for (std::size_t i = 0; i < remaining.size(); ++i) (in_half[i] ? half : rest).push_back(remaining[i]);

        const auto hdeg = detail::triple_degrees(img, index, half);
        std::vector<std::size_t> order(half.size());
        std::iota(order.begin(), order.end(), std::size_t(0));
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return hdeg[a] > hdeg[b]; });
        const std::size_t first_class = classes.size();
        for (auto i : order) {
            const std::uint32_t p = half[i];
            std::size_t c = first_class;
            while (c < classes.size() && !fits_class(img, dirs, classes[c], p)) ++c;
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(p);
        }
        remaining = std::move(rest);
    }

    for (std::uint64_t round = 0; !remaining.empty(); ++round) {
        std::vector<std::uint32_t> best;
        if (remaining.size() <= kColoringExactResidue) {
            const PointSet residue = points.subset(remaining);
            for (const Point& p : max_general_position_exact(residue, OracleBudget{kColoringExactResidue}))
                best.push_back(static_cast<std::uint32_t>(points.index_of(p)));
        } else {
            for (int j = 0; j < kColoringSeeds; ++j) {
                auto order = remaining;
                detail::Rng rng(detail::derive_seed(round, 0xC0 + j));
                rng.shuffle(order);
                auto found = greedy_indices(img, index, order);
                if (found.size() > best.size()) best = std::move(found);
            }
        }
        std::sort(best.begin(), best.end());
        std::vector<std::uint32_t> rest;
        std::set_difference(remaining.begin(), remaining.end(), best.begin(), best.end(), std::back_inserter(rest));
        classes.push_back(std::move(best));
        remaining = std::move(rest);
    }

    Coloring out;
    std::vector<char> seen(n, 0);
    for (auto& cls : classes) {
        for (auto i : cls) {
            if (seen[i]) fail(ErrorKind::certification, "color classes overlap");
            seen[i] = 1;
        }
        out.classes.push_back(points.subset(cls));
        if (verify_general_position(out.classes.back()))
            fail(ErrorKind::certification, "color class not in general position");
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) fail(ErrorKind::certification, "coloring misses points");
    out.colors_used = out.classes.size();
    return out;
}

}  // namespace gpsel
