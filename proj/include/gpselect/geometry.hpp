#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gpselect/rational.hpp"

namespace gpsel {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

// Integer lattice point in three dimensions; used only by the projected
// 3D sampling construction.
struct Point3 {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend auto operator<=>(const Point3&, const Point3&) = default;
};

// Reduced direction: gcd(|dx|,|dy|) = 1, and dx > 0 or (dx, dy) = (0, 1).
struct SlopeKey {
    std::int64_t dx = 0;
    std::int64_t dy = 0;

    friend auto operator<=>(const SlopeKey&, const SlopeKey&) = default;
};

// Line a*x + b*y + c = 0 with gcd(|a|,|b|,|c|) = 1 and the first nonzero of
// (a, b) positive.
struct LineKey {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

struct SlopeKeyHash {
    std::size_t operator()(const SlopeKey& k) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(k.dx) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(k.dy) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

struct LineKeyHash {
    std::size_t operator()(const LineKey& k) const noexcept {
        std::uint64_t h = SlopeKeyHash{}(SlopeKey{k.a, k.b});
        h ^= static_cast<std::uint64_t>(k.c) * 0xBF58476D1CE4E5B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Sign of (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
// Throws ErrorKind::precondition ("degenerate triple") unless p, q, r are
// pairwise distinct.
int orientation(const Point& p, const Point& q, const Point& r);

// Throws ErrorKind::precondition ("zero direction") when p == q.
SlopeKey slope_key(const Point& p, const Point& q);
LineKey line_key(const Point& p, const Point& q);

// Per-axis scaled integer copy of a point set. x_i = X_i / scale_x exactly
// (same for y); collinearity, parallelism and coordinate order are
// preserved, so all counting runs on these integers.
struct IntegerImage {
    std::vector<std::int64_t> x;
    std::vector<std::int64_t> y;
    std::int64_t scale_x = 1;
    std::int64_t scale_y = 1;
    std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

// Sorted (lexicographic by (x, y)), duplicate-free point collection.
// Construction rejects duplicates with ErrorKind::precondition.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    const IntegerImage& image() const noexcept { return image_; }
    bool all_integer() const noexcept { return image_.scale_x == 1 && image_.scale_y == 1; }

    // Extremes; precondition: non-empty.
    const Rational& min_x() const { return points_.front().x; }
    const Rational& max_x() const { return points_.back().x; }
    const Rational& min_y() const;
    const Rational& max_y() const;

    bool contains(const Point& p) const;
    std::size_t index_of(const Point& p) const;  // size() if absent

    // Points at the given indices (any order, no repeats).
    PointSet subset(std::span<const std::uint32_t> indices) const;

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

private:
    void build_image();

    std::vector<Point> points_;
    IntegerImage image_;
    std::size_t min_y_index_ = 0;
    std::size_t max_y_index_ = 0;
};

PointSet make_point_set(std::span<const std::pair<std::int64_t, std::int64_t>> coords);

}  // namespace gpsel
