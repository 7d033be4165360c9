#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gpselect/geometry.hpp"

namespace gpsel {

// Incidence profile of the lines spanned by a point set.
struct LineStatistics {
    std::size_t n = 0;
    std::map<int, std::uint64_t> k;  // i -> number of lines with exactly i points (only nonzero entries)
    std::map<int, std::uint64_t> b;  // i -> number of lines with at least i points, for 2 <= i <= s_max
    int s_max = 0;
};

using CollinearTriple = std::array<Point, 3>;
using PointPair = std::pair<Point, Point>;
using PairOfPairs = std::pair<PointPair, PointPair>;

struct ObstacleReport {
    std::uint64_t collinear_triples = 0;
    std::uint64_t trapezoids = 0;
    std::uint64_t descending_pairs = 0;
    std::vector<CollinearTriple> triple_witnesses;
    std::vector<PairOfPairs> trapezoid_witnesses;
    std::vector<PointPair> descending_witnesses;
};

struct MonotoneCheck {
    bool non_decreasing = true;
    bool non_increasing = true;
    std::optional<PointPair> non_decreasing_violation;  // u_x < v_x, u_y > v_y
    std::optional<PointPair> non_increasing_violation;  // u_x < v_x, u_y < v_y
    bool ok() const noexcept { return non_decreasing || non_increasing; }
};

struct StProfileRow {
    int i = 0;
    std::uint64_t b = 0;
    double bound = 0.0;
    bool pass = false;
};

// Requires |P| >= 2 ("insufficient points").
LineStatistics line_statistics(const PointSet& points);

// Number of collinear t-tuples, sum_i k_i * C(i, t). Requires t >= 3.
std::uint64_t count_collinear_tuples(const PointSet& points, int t);
std::uint64_t count_collinear_tuples(const LineStatistics& stats, int t);

// Unordered pairs of point pairs with equal direction lying on distinct
// lines; a parallelogram therefore counts twice. Requires |P| >= 4.
std::uint64_t count_trapezoids(const PointSet& points);

// Pairs (u, v) with u_x < v_x and u_y > v_y.
std::uint64_t count_descending_pairs(const PointSet& points);

// nullopt when P is in general position.
std::optional<CollinearTriple> verify_general_position(const PointSet& points);

// nullopt when every pair of P spans a different direction; otherwise two
// pairs sharing a direction.
std::optional<PairOfPairs> verify_distinct_slopes(const PointSet& points);

MonotoneCheck verify_monotone(const PointSet& points);

// Compares each tail b_i, 2 <= i <= s_max, with C * (n^2/i^3 + n/i).
// Requires |P| >= 2 and C > 0.
std::vector<StProfileRow> st_profile_check(const PointSet& points, const Rational& c);
std::vector<StProfileRow> st_profile_check(const LineStatistics& stats, const Rational& c);

// Counts plus up to `witness_limit` concrete witnesses per category.
// Trapezoids are only counted for |P| >= 4 (zero otherwise).
ObstacleReport obstacle_report(const PointSet& points, std::size_t witness_limit = 0);

// Points of the form (x, x^2): finds distinct x1, x2, x3, x4 with
// x1 + x2 = x3 + x4 by hashing pair sums, returning the trapezoid
// {(x1,.),(x2,.)} || {(x3,.),(x4,.)}. Requires every point on y = x^2.
std::optional<PairOfPairs> parabola_sum_collision(const PointSet& points);

// Profile of a 3D integer point set (lines through pairs), same
// conventions as line_statistics. Requires at least two distinct points.
LineStatistics line_statistics_3d(const std::vector<Point3>& points);

}  // namespace gpsel
