#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "common/directions.hpp"
#include "gpselect/geometry.hpp"

namespace gpsel::detail {

struct SweepResult {
    // tail[i] = number of lines with at least i points, for 2 <= i < tail.size().
    std::vector<std::uint64_t> tail;
    std::uint64_t trapezoids = 0;
};

// One pass over all forward pairs (q after p in canonical order). For an
// anchor p and direction d let t be the number of later points on the line
// through p with direction d. A line with i points is seen with
// t = i-1, i-2, ..., 1 (once each), so the histogram of t is exactly the
// tail profile b_{t+1}. Trapezoids per direction class are recovered from
// the per-direction pair total Q_d and sum_lines C(C(i,2),2), the latter by
// telescoping over the same t values.
SweepResult pair_sweep(const IntegerImage& image, const DirectionIndex& index, bool with_trapezoids);

// For each member p: number of collinear triples of the member set that
// contain p, i.e. sum over directions of C(m, 2) with m the count of other
// members on the line through p.
std::vector<std::uint64_t> triple_degrees(const IntegerImage& image, const DirectionIndex& index,
                                          std::span<const std::uint32_t> members);

// Lines with at least `min_points` points as sorted index lists, in order
// of their first point. Quadratic memory in the worst case; meant for
// sampled subsets.
std::vector<std::vector<std::uint32_t>> rich_lines(const IntegerImage& image, std::size_t min_points);

// Every trapezoid {a,b} || {c,d} on distinct lines, as (a, b, c, d) with
// a < b, c < d and (a, b) < (c, d).
std::vector<std::array<std::uint32_t, 4>> trapezoid_quads(const IntegerImage& image);

}  // namespace gpsel::detail
