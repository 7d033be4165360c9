#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gpsel::detail {

// Largest vertex subset of a hypergraph on at most 64 vertices that
// contains no edge completely. Groups are known packing constraints
// (at most `cap` chosen vertices inside `mask`) used only for bounding;
// they must be implied by the edges.
struct PackingProblem {
    int n = 0;
    std::vector<std::uint64_t> edges;
    struct Group {
        std::uint64_t mask;
        int cap;
    };
    std::vector<Group> groups;
    std::optional<int> target;  // stop as soon as a set this large is found
    std::uint64_t max_nodes = 0;
};

std::uint64_t solve_packing(const PackingProblem& problem);

}  // namespace gpsel::detail
