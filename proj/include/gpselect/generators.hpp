#pragma once

#include <cstdint>
#include <vector>

#include "gpselect/geometry.hpp"

namespace gpsel {

// Independent per-point retention with probability `prob`, reproducible
// from `seed`.
struct SeededSampler {
    std::uint64_t seed = 0;
    Rational prob{1, 2};
};

// {1..w} x {1..h}.
PointSet grid(std::int64_t w, std::int64_t h);

// Requires 0 < prob < 1.
PointSet bernoulli_sample(const PointSet& points, const SeededSampler& sampler);

// k x k grid of clusters, each a collinear s-tuple of total extent below
// 1/(64 k s) around (i, j). Re-draws until the only collinear triples are
// the intra-cluster ones. Requires k >= 2, 2 <= s <= 512, k*k*s <= 2^20.
PointSet perturbed_cluster_grid(int k, int s, std::uint64_t seed);

// {(x, x^2) : 1 <= x <= n}.
PointSet parabola_set(std::int64_t n);

// Smallest-first greedy subset of [n] whose sums a + b over pairs a != b
// are pairwise distinct.
std::vector<std::int64_t> sidon_set(std::int64_t n);
PointSet sidon_parabola_set(std::int64_t n);

// Lattice points of [0, 2m]^2 whose squared distance d^2 from (m, m)
// satisfies (m - x)^2 <= d^2 <= m^2. Requires m >= 1, 0 < x <= m.
PointSet annulus(std::int64_t m, const Rational& x);

// annulus(m, x) restricted to the 30 degree cone bisected by the ray from
// the center towards the lower-right corner. The cone is bounded by the
// rays along (97, -56) and (56, -97) (slopes within 0.01% of tan 30 and
// tan 60). Requires m >= 4, 0 < x < m.
PointSet annulus_sector(std::int64_t m, const Rational& x);

// Convex lattice arc from (0, 0) inside [0, m]^2 built from the primitive
// vectors with positive coordinates, sorted by slope. Requires m >= 2.
PointSet jarnik_arc(std::int64_t m);

// Each point of [n]^3 kept with probability n^(alpha-1)/2.
// Requires n >= 8 and 0 < alpha <= 1.
std::vector<Point3> grid3_sample(std::int64_t n, const Rational& alpha, std::uint64_t seed);

// grid3_sample followed by (a, b, c) -> (a + lambda c, b + mu c) with
// lambda, mu random fractions over the prime 2^31 - 1. A projection is
// accepted only if no two points merge and the line profile (hence every
// collinear t-tuple count) equals the 3D one; otherwise lambda, mu are
// re-drawn, failing after a fixed budget with "projection not generic".
PointSet grid3_projected_sample(std::int64_t n, const Rational& alpha, std::uint64_t seed);

}  // namespace gpsel
