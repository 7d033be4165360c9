#include "common/directions.hpp"

#include <algorithm>
#include <bit>

#include "gpselect/geometry.hpp"

namespace gpsel::detail {

DirectionIndex::DirectionIndex(const IntegerImage& image, std::size_t cap) {
    if (image.x.empty()) return;
    const std::int64_t w = image.max_x - image.min_x;
    const std::int64_t h = image.max_y - image.min_y;
    // (w + 1) * (2h + 1) slots, guarded against overflow before multiplying.
    if (w >= std::int64_t(cap) || h >= std::int64_t(cap)) return;
    const std::uint64_t slots = static_cast<std::uint64_t>(w + 1) * static_cast<std::uint64_t>(2 * h + 1);
    if (slots > cap) return;
    w_ = w;
    h_ = h;
    stride_ = 2 * h + 1;
    canon_.assign(slots, 0);
    for (std::int64_t dx = 0; dx <= w; ++dx) {
        for (std::int64_t dy = -h; dy <= h; ++dy) {
            if (dx == 0 && dy <= 0) continue;  // not a forward direction
            const auto g = static_cast<std::int64_t>(ugcd(dx, dy < 0 ? -dy : dy));
            canon_[dx * stride_ + dy + h] = static_cast<std::uint32_t>((dx / g) * stride_ + dy / g + h);
        }
    }
}

DirectionCounter::DirectionCounter(const DirectionIndex& index, std::size_t expected) : index_(index) {
    if (index_.dense()) {
        dense_count_.assign(index_.slots(), 0);
        touched_.reserve(expected);
    } else {
        const std::size_t cap = std::bit_ceil(std::max<std::size_t>(16, 2 * expected + 2));
        keys_.resize(cap);
        counts_.assign(cap, 0);
        stamps_.assign(cap, 0);
        mask_ = cap - 1;
    }
}

void DirectionCounter::reset() {
    if (index_.dense()) {
        for (auto s : touched_) dense_count_[s] = 0;
        touched_.clear();
    } else {
        ++stamp_;
        used_ = 0;
        if (stamp_ == 0) {
            std::fill(stamps_.begin(), stamps_.end(), 0);
            stamp_ = 1;
        }
    }
}

std::uint32_t DirectionCounter::add(std::int64_t dx, std::int64_t dy) {
    if (index_.dense()) {
        const auto s = index_.slot(dx, dy);
        if (dense_count_[s]++ == 0) touched_.push_back(s);
        return dense_count_[s];
    }
    return add_sparse(reduce_direction(dx, dy));
}

std::uint32_t DirectionCounter::add_sparse(const SlopeKey& key) {
    if (2 * (used_ + 1) > keys_.size()) {
        // Grow: rehash live entries of the current stamp.
        std::vector<SlopeKey> old_keys = std::move(keys_);
        std::vector<std::uint32_t> old_counts = std::move(counts_);
        std::vector<std::uint32_t> old_stamps = std::move(stamps_);
        const std::size_t cap = old_keys.size() * 2;
        keys_.assign(cap, SlopeKey{});
        counts_.assign(cap, 0);
        stamps_.assign(cap, 0);
        mask_ = cap - 1;
        const auto live = stamp_;
        stamp_ = 1;
        used_ = 0;
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_stamps[i] != live) continue;
            std::size_t pos = SlopeKeyHash{}(old_keys[i]) & mask_;
            while (stamps_[pos] == stamp_) pos = (pos + 1) & mask_;
            keys_[pos] = old_keys[i];
            counts_[pos] = old_counts[i];
            stamps_[pos] = stamp_;
            ++used_;
        }
    }
    std::size_t pos = SlopeKeyHash{}(key) & mask_;
    while (stamps_[pos] == stamp_) {
        if (keys_[pos] == key) return ++counts_[pos];
        pos = (pos + 1) & mask_;
    }
    stamps_[pos] = stamp_;
    keys_[pos] = key;
    counts_[pos] = 1;
    ++used_;
    return 1;
}

}  // namespace gpsel::detail
