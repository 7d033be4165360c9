#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gpselect/generators.hpp"
#include "gpselect/geometry.hpp"

namespace gpsel {

enum class Certificate { general_position, monotone_general_position, distinct_slopes, monotone };

std::string_view to_string(Certificate c);

struct SelectionTrace {
    std::uint64_t sampled = 0;
    std::uint64_t obstacles = 0;
    std::uint64_t deletions = 0;
};

// `chosen` has been re-checked against `certificate` before return; a
// failed check throws ErrorKind::certification.
struct SelectionResult {
    PointSet chosen;
    Certificate certificate = Certificate::general_position;
    SelectionTrace trace;
    std::uint64_t seed = 0;
};

struct Coloring {
    std::vector<PointSet> classes;
    std::size_t colors_used = 0;
};

// Pinned constants of the randomized selections.
inline const Rational kAnnulusC{1};
inline const Rational kSlopesC{1};
constexpr int kColoringC = 1;
constexpr int kColoringSeeds = 4;
constexpr std::size_t kColoringExactResidue = 20;

// Seeded random order; a point is kept iff it spans no collinear triple
// with two kept points. Trace: sampled = |P|, deletions = rejected points.
SelectionResult greedy_general_position(const PointSet& points, std::uint64_t order_seed);

// Bernoulli sample at sampler.prob (prob = 1 keeps everything), then one
// deletion per surviving collinear triple, always removing a point of
// largest remaining triple degree (ties: smallest point).
// Requires 0 < prob <= 1.
SelectionResult sample_delete_general_position(const PointSet& points, const SeededSampler& sampler);

// Longest monotone subset: the better of the non-decreasing and the
// non-increasing pass (ties favor non-decreasing).
SelectionResult longest_monotone(const PointSet& points);

// Larger of greedy_general_position(seed) and
// sample_delete_general_position(sampler), then longest_monotone on it.
SelectionResult monotone_gp_two_stage(const PointSet& points, const SeededSampler& sampler);

struct AnnulusParameters {
    std::uint64_t n = 0;  // (2m + 1)^2
    Rational x;           // n^(1/10) (ln n)^(2/5), rounded down to a multiple of 2^-20
    Rational prob;        // min(1, c / (n^(1/5) (ln n)^(4/5))), rounded down to a multiple of 2^-40
};

// Requires m >= 32.
AnnulusParameters annulus_parameters(std::int64_t m, const Rational& c = kAnnulusC);

// Sample of annulus_sector(m, x) at the parameters above, then deletions
// over descending pairs and collinear triples; the result is
// non-decreasing and in general position.
SelectionResult annulus_monotone_gp(std::int64_t m, std::uint64_t seed, const Rational& c = kAnnulusC);

// Sampling probability min(1, c (n / ln s)^(1/3) / n) with s the largest
// number of collinear points (ln s taken as ln 2 when s = 2).
Rational distinct_slopes_probability(std::size_t n, int s, const Rational& c = kSlopesC);

// Sample, then deletions over collinear triples and trapezoids until all
// slopes are distinct. Requires |P| >= 4.
SelectionResult distinct_slopes_select(const PointSet& points, std::uint64_t seed, const Rational& c = kSlopesC);
// Same with s supplied by the caller; it must equal line_statistics(points).s_max.
SelectionResult distinct_slopes_select(const PointSet& points, int s_max, std::uint64_t seed,
                                       const Rational& c = kSlopesC);

// Phase 1 runs floor(log2 log2 n - 2 kColoringC) rounds (none when that is
// below 1). Each round takes the lower half of the remaining points by
// collinear triple degree and colors it greedily with fresh colors.
// Phase 2 peels general position sets off the rest: best of
// kColoringSeeds greedy runs, or the exact maximum once at most
// kColoringExactResidue points remain.
Coloring gp_coloring(const PointSet& points);

}  // namespace gpsel
