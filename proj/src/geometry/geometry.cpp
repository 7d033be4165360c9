#include "gpselect/geometry.hpp"

#include <algorithm>
#include <string>

#include "common/wide.hpp"

namespace gpsel {

using detail::i128;

namespace {

constexpr i128 kImageLimit = i128(1) << 62;

i128 lcm128(i128 a, i128 b) {
    const i128 g = detail::gcd128(a, b);
    const i128 r = a / g * b;
    if (r >= kImageLimit) fail(ErrorKind::overflow, "coordinate denominators exceed the exact integer kernel");
    return r;
}

}  // namespace

int orientation(const Point& p, const Point& q, const Point& r) {
    require(p != q && p != r && q != r, "degenerate triple");
    const Rational lhs = (q.x - p.x) * (r.y - p.y);
    const Rational rhs = (q.y - p.y) * (r.x - p.x);
    const auto c = lhs <=> rhs;
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

SlopeKey slope_key(const Point& p, const Point& q) {
    require(p != q, "zero direction");
    const Rational dx = q.x - p.x;
    const Rational dy = q.y - p.y;
    const i128 l = lcm128(dx.den(), dy.den());
    i128 x = i128(dx.num()) * (l / dx.den());
    i128 y = i128(dy.num()) * (l / dy.den());
    const i128 g = detail::gcd128(x, y);
    x /= g;
    y /= g;
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return {detail::narrow64(x, "slope key overflow"), detail::narrow64(y, "slope key overflow")};
}

LineKey line_key(const Point& p, const Point& q) {
    require(p != q, "zero direction");
    const Rational dx = q.x - p.x;
    const Rational dy = q.y - p.y;
    const Rational a = dy;
    const Rational b = -dx;
    const Rational c = dx * p.y - dy * p.x;
    const i128 l = lcm128(lcm128(a.den(), b.den()), c.den());
    i128 ia = i128(a.num()) * (l / a.den());
    i128 ib = i128(b.num()) * (l / b.den());
    i128 ic = i128(c.num()) * (l / c.den());
    const i128 g = detail::gcd128(detail::gcd128(ia, ib), ic);
    ia /= g;
    ib /= g;
    ic /= g;
    if (ia < 0 || (ia == 0 && ib < 0)) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return {detail::narrow64(ia, "line key overflow"), detail::narrow64(ib, "line key overflow"),
            detail::narrow64(ic, "line key overflow")};
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    const auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end())
        fail(ErrorKind::precondition, "duplicate point (" + dup->x.to_string() + ", " + dup->y.to_string() + ")");
    build_image();
}

void PointSet::build_image() {
    image_ = IntegerImage{};
    if (points_.empty()) return;
    i128 sx = 1, sy = 1;
    for (const Point& p : points_) {
        sx = lcm128(sx, p.x.den());
        sy = lcm128(sy, p.y.den());
    }
    image_.scale_x = static_cast<std::int64_t>(sx);
    image_.scale_y = static_cast<std::int64_t>(sy);
    image_.x.reserve(points_.size());
    image_.y.reserve(points_.size());
    auto scaled = [](const Rational& v, i128 s) {
        const i128 r = i128(v.num()) * (s / v.den());
        if (detail::abs128(r) >= kImageLimit) fail(ErrorKind::overflow, "coordinates exceed the exact integer kernel");
        return static_cast<std::int64_t>(r);
    };
    for (std::size_t i = 0; i < points_.size(); ++i) {
        image_.x.push_back(scaled(points_[i].x, sx));
        image_.y.push_back(scaled(points_[i].y, sy));
        if (points_[i].y < points_[min_y_index_].y) min_y_index_ = i;
        if (points_[i].y > points_[max_y_index_].y) max_y_index_ = i;
    }
    image_.min_x = image_.x.front();
    image_.max_x = image_.x.back();
    image_.min_y = image_.y[min_y_index_];
    image_.max_y = image_.y[max_y_index_];
}

const Rational& PointSet::min_y() const { return points_.at(min_y_index_).y; }
const Rational& PointSet::max_y() const { return points_.at(max_y_index_).y; }

bool PointSet::contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

std::size_t PointSet::index_of(const Point& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return points_.size();
    return static_cast<std::size_t>(it - points_.begin());
}

PointSet PointSet::subset(std::span<const std::uint32_t> indices) const {
    std::vector<Point> pts;
    pts.reserve(indices.size());
    for (auto i : indices) pts.push_back(points_.at(i));
    return PointSet(std::move(pts));
}

PointSet make_point_set(std::span<const std::pair<std::int64_t, std::int64_t>> coords) {
    std::vector<Point> pts;
    pts.reserve(coords.size());
    for (auto [x, y] : coords) pts.push_back({Rational(x), Rational(y)});
    return PointSet(std::move(pts));
}

}  // namespace gpsel
