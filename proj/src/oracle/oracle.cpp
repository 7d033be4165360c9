#include "gpselect/oracle.hpp"

#include <bit>
#include <map>
#include <string>

#include "gpselect/error.hpp"
#include "oracle/search.hpp"

namespace gpsel {

namespace {

using detail::PackingProblem;

void check_budget(const PointSet& points, const OracleBudget& budget) {
    if (points.size() > budget.max_points)
        fail(ErrorKind::budget, "oracle input has " + std::to_string(points.size()) + " points, budget is " +
                                    std::to_string(budget.max_points));
    if (points.size() > 64) fail(ErrorKind::budget, "oracle supports at most 64 points");
}

std::uint64_t bit(std::size_t i) { return std::uint64_t(1) << i; }

std::vector<std::uint64_t> triple_edges(const PointSet& p) {
    std::vector<std::uint64_t> edges;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            for (std::size_t k = j + 1; k < p.size(); ++k)
                if (orientation(p[i], p[j], p[k]) == 0) edges.push_back(bit(i) | bit(j) | bit(k));
    return edges;
}

// Lines through at least three points; at most two of their points can be
// chosen in any set free of collinear triples.
std::vector<PackingProblem::Group> line_groups(const PointSet& p) {
    std::map<LineKey, std::uint64_t> lines;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) lines[line_key(p[i], p[j])] |= bit(i) | bit(j);
    std::vector<PackingProblem::Group> groups;
    for (const auto& [key, mask] : lines)
        if (std::popcount(mask) >= 3) groups.push_back({mask, 2});
    return groups;
}

// Greedy cliques of a graph given by pair edges; each holds at most one
// chosen vertex.
std::vector<PackingProblem::Group> clique_groups(std::size_t n, const std::vector<std::uint64_t>& pairs) {
    std::vector<std::uint64_t> adj(n, 0);
    for (auto e : pairs) {
        const int a = std::countr_zero(e), b = 63 - std::countl_zero(e);
        adj[a] |= bit(b);
        adj[b] |= bit(a);
    }
    std::vector<PackingProblem::Group> groups;
    std::uint64_t used = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (used & bit(v) || adj[v] == 0) continue;
        std::uint64_t clique = bit(v), common = adj[v] & ~used;
        while (common) {
            const int u = std::countr_zero(common);
            clique |= bit(u);
            common &= adj[u];
        }
        if (std::popcount(clique) >= 2) groups.push_back({clique, 1});
        used |= clique;
    }
    return groups;
}

PointSet mask_to_set(const PointSet& p, std::uint64_t mask) {
    std::vector<std::uint32_t> idx;
    for (std::uint64_t r = mask; r; r &= r - 1) idx.push_back(static_cast<std::uint32_t>(std::countr_zero(r)));
    return p.subset(idx);
}

std::vector<std::uint64_t> trapezoid_edges(const PointSet& p) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) pairs.emplace_back(i, j);
    std::vector<SlopeKey> slopes;
    std::vector<LineKey> lines;
    for (auto [i, j] : pairs) {
        slopes.push_back(slope_key(p[i], p[j]));
        lines.push_back(line_key(p[i], p[j]));
    }
    std::vector<std::uint64_t> edges;
    for (std::size_t u = 0; u < pairs.size(); ++u)
        for (std::size_t v = u + 1; v < pairs.size(); ++v) {
            const auto [a, b] = pairs[u];
            const auto [c, d] = pairs[v];
            if (a == c || a == d || b == c || b == d) continue;
            if (slopes[u] == slopes[v] && lines[u] != lines[v]) edges.push_back(bit(a) | bit(b) | bit(c) | bit(d));
        }
    return edges;
}

}  // namespace

std::uint64_t triples_bruteforce(const PointSet& points, const OracleBudget& budget) {
    check_budget(points, budget);
    return triple_edges(points).size();
}

std::uint64_t trapezoids_bruteforce(const PointSet& points, const OracleBudget& budget) {
    check_budget(points, budget);
    return trapezoid_edges(points).size();
}

PointSet max_general_position_exact(const PointSet& points, const OracleBudget& budget) {
    check_budget(points, budget);
    PackingProblem prob;
    prob.n = static_cast<int>(points.size());
    prob.edges = triple_edges(points);
    prob.groups = line_groups(points);
    prob.max_nodes = budget.max_nodes;
    return mask_to_set(points, detail::solve_packing(prob));
}

PointSet max_monotone_gp_exact(const PointSet& points, const OracleBudget& budget) {
    check_budget(points, budget);
    const auto triples = triple_edges(points);
    const auto lines = line_groups(points);
    std::uint64_t best = 0;
    for (int clause = 0; clause < 2; ++clause) {
        // clause 0 forbids descending pairs, clause 1 ascending ones
        std::vector<std::uint64_t> pairs;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (!(points[i].x < points[j].x)) continue;
                const bool bad = clause == 0 ? points[i].y > points[j].y : points[i].y < points[j].y;
                if (bad) pairs.push_back(bit(i) | bit(j));
            }
        PackingProblem prob;
        prob.n = static_cast<int>(points.size());
        prob.edges = pairs;
        prob.edges.insert(prob.edges.end(), triples.begin(), triples.end());
        prob.groups = lines;
        const auto cliques = clique_groups(points.size(), pairs);
        prob.groups.insert(prob.groups.end(), cliques.begin(), cliques.end());
        prob.max_nodes = budget.max_nodes;
        const std::uint64_t found = detail::solve_packing(prob);
        if (std::popcount(found) > std::popcount(best) || clause == 0) best = found;
    }
    return mask_to_set(points, best);
}

PointSet max_distinct_slopes_exact(const PointSet& points, const OracleBudget& budget) {
    check_budget(points, budget);
    PackingProblem prob;
    prob.n = static_cast<int>(points.size());
    prob.edges = triple_edges(points);
    const auto traps = trapezoid_edges(points);
    prob.edges.insert(prob.edges.end(), traps.begin(), traps.end());
    prob.groups = line_groups(points);
    prob.max_nodes = budget.max_nodes;
    return mask_to_set(points, detail::solve_packing(prob));
}

bool ramsey_witness_check(const PointSet& points, int s, const OracleBudget& budget) {
    require(s >= 3, "Ramsey check needs s >= 3");
    check_budget(points, budget);
    const auto groups = line_groups(points);
    for (const auto& g : groups)
        if (std::popcount(g.mask) >= s) return true;
    PackingProblem prob;
    prob.n = static_cast<int>(points.size());
    prob.edges = triple_edges(points);
    prob.groups = groups;
    prob.target = s;
    prob.max_nodes = budget.max_nodes;
    return std::popcount(detail::solve_packing(prob)) >= s;
}

}  // namespace gpsel
