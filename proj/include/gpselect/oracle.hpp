#pragma once

#include <cstddef>
#include <cstdint>

#include "gpselect/geometry.hpp"

namespace gpsel {

// Inputs larger than max_points are refused (ErrorKind::budget); a search
// visiting more than max_nodes nodes aborts the same way.
struct OracleBudget {
    std::size_t max_points = 24;
    std::uint64_t max_nodes = 200'000'000;

    static OracleBudget counting() { return OracleBudget{40, 0}; }
};

// Plain enumeration of all C(n, 3) triples with the orientation predicate.
std::uint64_t triples_bruteforce(const PointSet& points, const OracleBudget& budget = OracleBudget::counting());

// Plain enumeration of unordered pairs of disjoint point pairs whose slopes
// agree while their lines differ.
std::uint64_t trapezoids_bruteforce(const PointSet& points, const OracleBudget& budget = OracleBudget::counting());

// Exact maxima by branch and bound. Ties between optimal subsets are
// resolved by the fixed search order, so results are reproducible.
PointSet max_general_position_exact(const PointSet& points, const OracleBudget& budget = {});
PointSet max_monotone_gp_exact(const PointSet& points, const OracleBudget& budget = {});
PointSet max_distinct_slopes_exact(const PointSet& points, const OracleBudget& budget = {});

// True iff P has s collinear points or a general position subset of size s.
// Requires s >= 3.
bool ramsey_witness_check(const PointSet& points, int s, const OracleBudget& budget = {});

}  // namespace gpsel
