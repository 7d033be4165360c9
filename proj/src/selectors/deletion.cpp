#include "selectors/deletion.hpp"

#include <queue>

namespace gpsel::detail {

void Obstacles::add(std::initializer_list<std::uint32_t> e) {
    std::array<std::uint32_t, 4> a{};
    std::size_t i = 0;
    for (auto v : e) a[i++] = v;
    edges.push_back(a);
    sizes.push_back(static_cast<std::uint8_t>(i));
}

std::vector<std::uint32_t> delete_until_clean(const Obstacles& h, std::uint64_t* deletions) {
    std::vector<std::vector<std::uint32_t>> incident(h.n);
    std::vector<std::uint64_t> degree(h.n, 0);
    for (std::uint32_t e = 0; e < h.edges.size(); ++e)
        for (std::uint8_t k = 0; k < h.sizes[e]; ++k) {
            incident[h.edges[e][k]].push_back(e);
            ++degree[h.edges[e][k]];
        }
    std::vector<char> edge_alive(h.edges.size(), 1), removed(h.n, 0);

    // max degree first, then smallest index
    using Entry = std::pair<std::uint64_t, std::int64_t>;
    std::priority_queue<Entry> heap;
    for (std::uint32_t v = 0; v < h.n; ++v)
        if (degree[v] > 0) heap.push({degree[v], -std::int64_t(v)});

    std::uint64_t count = 0;
    while (!heap.empty()) {
        const auto [deg, neg] = heap.top();
        heap.pop();
        const auto v = static_cast<std::uint32_t>(-neg);
        if (removed[v] || deg != degree[v] || deg == 0) continue;
        removed[v] = 1;
        ++count;
        for (auto e : incident[v]) {
            if (!edge_alive[e]) continue;
            edge_alive[e] = 0;
            for (std::uint8_t k = 0; k < h.sizes[e]; ++k) {
                const auto u = h.edges[e][k];
                if (--degree[u] > 0 && !removed[u]) heap.push({degree[u], -std::int64_t(u)});
            }
        }
    }
    if (deletions) *deletions = count;
    std::vector<std::uint32_t> kept;
    for (std::uint32_t v = 0; v < h.n; ++v)
        if (!removed[v]) kept.push_back(v);
    return kept;
}

}  // namespace gpsel::detail
