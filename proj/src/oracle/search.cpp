#include "oracle/search.hpp"

#include <algorithm>
#include <bit>

#include "gpselect/error.hpp"

namespace gpsel::detail {

namespace {

class Packer {
public:
    explicit Packer(const PackingProblem& p) : p_(p), groups_(p.groups) {
        all_ = p.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << p.n) - 1;
        std::stable_sort(groups_.begin(), groups_.end(), [](const auto& a, const auto& b) {
            return std::popcount(a.mask) > std::popcount(b.mask);
        });
    }

    std::uint64_t run() {
        dfs(0, 0);
        return best_;
    }

private:
    int cover_bound(std::uint64_t in, std::uint64_t und) const {
        std::uint64_t covered = 0;
        int total = 0;
        for (const auto& g : groups_) {
            const std::uint64_t u = g.mask & und & ~covered;
            if (u == 0) continue;
            const int cap = std::max(0, g.cap - std::popcount(g.mask & in));
            total += std::min(std::popcount(u), cap);
            covered |= u;
        }
        return total + std::popcount(und & ~covered);
    }

    void consider(std::uint64_t set) {
        if (std::popcount(set) > best_size_) {
            best_ = set;
            best_size_ = std::popcount(set);
            if (p_.target && best_size_ >= *p_.target) stop_ = true;
        }
    }

    void dfs(std::uint64_t in, std::uint64_t out) {
        if (stop_) return;
        if (p_.max_nodes != 0 && ++nodes_ > p_.max_nodes) fail(ErrorKind::budget, "search node budget exhausted");

        // An edge with all but one vertex chosen forbids the last one.
        for (bool changed = true; changed;) {
            changed = false;
            for (auto e : p_.edges) {
                if (e & out) continue;
                const std::uint64_t rest = e & ~in;
                if (std::has_single_bit(rest)) {
                    out |= rest;
                    changed = true;
                }
            }
        }
        consider(in);
        const std::uint64_t und = all_ & ~in & ~out;
        if (und == 0 || stop_) return;
        if (std::popcount(in) + cover_bound(in, und) <= best_size_) return;

        int degree[64] = {};
        bool any = false;
        for (auto e : p_.edges) {
            if (e & out) continue;
            for (std::uint64_t r = e & und; r; r &= r - 1) {
                ++degree[std::countr_zero(r)];
                any = true;
            }
        }
        if (!any) {
            consider(in | und);
            return;
        }
        int v = -1;
        for (std::uint64_t r = und; r; r &= r - 1) {
            const int i = std::countr_zero(r);
            if (v < 0 || degree[i] > degree[v]) v = i;
        }
        const std::uint64_t bit = std::uint64_t(1) << v;
        dfs(in | bit, out);
        dfs(in, out | bit);
    }

    const PackingProblem& p_;
    std::vector<PackingProblem::Group> groups_;
    std::uint64_t all_ = 0;
    std::uint64_t best_ = 0;
    int best_size_ = -1;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
};

}  // namespace

std::uint64_t solve_packing(const PackingProblem& problem) {
    require(problem.n >= 0 && problem.n <= 64, "packing search supports at most 64 vertices");
    return Packer(problem).run();
}

}  // namespace gpsel::detail
