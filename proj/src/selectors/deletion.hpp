#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gpsel::detail {

// Obstacle hypergraph over vertices 0..n-1 with edges of 2 to 4 vertices.
struct Obstacles {
    std::uint32_t n = 0;
    std::vector<std::array<std::uint32_t, 4>> edges;
    std::vector<std::uint8_t> sizes;

    void add(std::initializer_list<std::uint32_t> e);
};

// Deletes vertices until no edge survives, always removing a vertex of
// maximum surviving degree (ties: smallest index). Returns the kept
// vertices in increasing order.
std::vector<std::uint32_t> delete_until_clean(const Obstacles& h, std::uint64_t* deletions);

}  // namespace gpsel::detail
