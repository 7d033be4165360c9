#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "gpselect/geometry.hpp"

namespace gpsel::detail {

inline std::uint64_t ugcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Reduced, sign-normalized direction of an integer difference vector.
inline SlopeKey reduce_direction(std::int64_t dx, std::int64_t dy) {
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    const auto g = static_cast<std::int64_t>(
        ugcd(static_cast<std::uint64_t>(dx), static_cast<std::uint64_t>(dy < 0 ? -dy : dy)));
    return {dx / g, dy / g};
}

// Dense lookup from a difference vector (dx, dy) of an image to the slot of
// its reduced direction. Only built when the bounding box is small enough;
// otherwise callers fall back to hashing reduced SlopeKeys.
class DirectionIndex {
public:
    static constexpr std::size_t kDefaultCap = std::size_t(1) << 23;

    explicit DirectionIndex(const IntegerImage& image, std::size_t cap = kDefaultCap);

    bool dense() const noexcept { return !canon_.empty(); }
    std::size_t slots() const noexcept { return canon_.size(); }
    std::int64_t stride() const noexcept { return stride_; }
    std::int64_t half_height() const noexcept { return h_; }

    // Requires dense() and (dx > 0 || (dx == 0 && dy > 0)).
    std::uint32_t forward_slot(std::int64_t dx, std::int64_t dy) const {
        return canon_[static_cast<std::size_t>(dx * stride_ + dy + h_)];
    }
    // Requires dense() and (dx, dy) != (0, 0).
    std::uint32_t slot(std::int64_t dx, std::int64_t dy) const {
        if (dx < 0 || (dx == 0 && dy < 0)) {
            dx = -dx;
            dy = -dy;
        }
        return forward_slot(dx, dy);
    }
    // Flat key such that forward_slot(dx, dy) == canon()[linear(x_b) - linear(x_a) + h].
    std::int64_t linear(std::int64_t x, std::int64_t y) const noexcept { return x * stride_ + y; }
    const std::uint32_t* canon() const noexcept { return canon_.data(); }

    SlopeKey key_of_slot(std::uint32_t slot) const {
        const auto s = static_cast<std::int64_t>(slot);
        return {s / stride_, s % stride_ - h_};
    }

private:
    std::int64_t w_ = 0;
    std::int64_t h_ = 0;
    std::int64_t stride_ = 1;
    std::vector<std::uint32_t> canon_;
};

// Per-anchor multiset of directions. add() returns the count of the
// direction after insertion; reset() starts a new anchor.
class DirectionCounter {
public:
    DirectionCounter(const DirectionIndex& index, std::size_t expected);

    void reset();
    std::uint32_t add(std::int64_t dx, std::int64_t dy);

private:
    std::uint32_t add_sparse(const SlopeKey& key);

    const DirectionIndex& index_;
    // dense
    std::vector<std::uint32_t> dense_count_;
    std::vector<std::uint32_t> touched_;
    // sparse open addressing, invalidated by bumping stamp_
    std::vector<SlopeKey> keys_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint32_t> stamps_;
    std::uint32_t stamp_ = 1;
    std::size_t mask_ = 0;
    std::size_t used_ = 0;
};

}  // namespace gpsel::detail
