#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gpselect/detectors.hpp"
#include "gpselect/error.hpp"
#include "gpselect/generators.hpp"
#include "gpselect/oracle.hpp"
#include "gpselect/selectors.hpp"
#include "support.hpp"

using namespace gpsel;

namespace {

bool throws_precondition(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind() == ErrorKind::precondition;
    }
    return false;
}

bool is_subset(const PointSet& a, const PointSet& b) {
    for (const auto& p : a)
        if (!b.contains(p)) return false;
    return true;
}

void expect_trace_consistent(const SelectionResult& r) {
    EXPECT_LE(r.trace.deletions, r.trace.obstacles);
    EXPECT_EQ(r.chosen.size(), r.trace.sampled - r.trace.deletions);
}

std::size_t isqrt_ceil(std::size_t n) {
    std::size_t r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

}  // namespace

TEST(GreedyGeneralPosition, Grid3x3) {
    const PointSet g = grid(3, 3);
    std::set<std::size_t> sizes;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto r = greedy_general_position(g, seed);
        EXPECT_TRUE(ref::general_position(r.chosen.points()));
        EXPECT_TRUE(is_subset(r.chosen, g));
        EXPECT_EQ(r.certificate, Certificate::general_position);
        expect_trace_consistent(r);
        sizes.insert(r.chosen.size());
    }
    EXPECT_GE(*sizes.begin(), 4u);
    EXPECT_LE(*sizes.rbegin(), 6u);
}

TEST(GreedyGeneralPosition, TrivialInputs) {
    const PointSet par = parabola_set(40);
    EXPECT_EQ(greedy_general_position(par, 3).chosen, par);
    for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_EQ(greedy_general_position(ref::line_of(9), seed).chosen.size(), 2u);
    EXPECT_TRUE(greedy_general_position(PointSet{}, 1).chosen.empty());
}

TEST(GreedyGeneralPosition, MaximalAndBlocking) {
    // every rejected point lies on a line through two chosen points
    std::mt19937_64 rng(4);
    for (int it = 0; it < 60; ++it) {
        const PointSet P = ref::random_integer_set(rng, 10 + rng() % 80, 0, 3 + static_cast<std::int64_t>(rng() % 9));
        const auto r = greedy_general_position(P, rng());
        const auto& C = r.chosen;
        ASSERT_FALSE(verify_general_position(C));
        for (const auto& p : P) {
            if (C.contains(p)) continue;
            bool blocked = false;
            for (std::size_t i = 0; i < C.size() && !blocked; ++i)
                for (std::size_t j = i + 1; j < C.size() && !blocked; ++j) blocked = ref::collinear(C[i], C[j], p);
            EXPECT_TRUE(blocked);
        }
        const std::size_t c = C.size();
        const int s = P.size() >= 2 ? line_statistics(P).s_max : 2;
        EXPECT_GE(c * ref::choose(c, 2) * static_cast<std::size_t>(std::max(s - 2, 1)) + c, P.size());
    }
}

TEST(SampleDelete, Examples) {
    const PointSet par = parabola_set(30);
    const auto a = sample_delete_general_position(par, SeededSampler{5, Rational(1, 3)});
    EXPECT_EQ(a.trace.deletions, 0u);
    EXPECT_EQ(a.trace.obstacles, 0u);

    const auto b = sample_delete_general_position(grid(3, 3), SeededSampler{5, Rational(1)});
    EXPECT_GE(b.chosen.size(), 4u);
    EXPECT_EQ(b.trace.sampled, 9u);
    EXPECT_EQ(b.trace.obstacles, 8u);
    EXPECT_TRUE(ref::general_position(b.chosen.points()));

    const auto c = sample_delete_general_position(ref::line_of(10), SeededSampler{5, Rational(1)});
    EXPECT_EQ(c.chosen.size(), 2u);

    EXPECT_TRUE(throws_precondition([] { sample_delete_general_position(grid(3, 3), SeededSampler{1, Rational(0)}); }));
    EXPECT_TRUE(throws_precondition([] { sample_delete_general_position(grid(3, 3), SeededSampler{1, Rational(2)}); }));
}

TEST(SampleDelete, RandomInputs) {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 60; ++it) {
        const PointSet P = ref::random_integer_set(rng, 5 + rng() % 150, 0, 4 + static_cast<std::int64_t>(rng() % 10));
        const Rational prob(1 + static_cast<std::int64_t>(rng() % 4), 4);
        const auto r = sample_delete_general_position(P, SeededSampler{rng(), prob});
        expect_trace_consistent(r);
        EXPECT_TRUE(is_subset(r.chosen, P));
        EXPECT_TRUE(ref::general_position(r.chosen.points()));
    }
}

TEST(LongestMonotone, Examples) {
    const PointSet s = ref::from_coords({{0, 0}, {1, 2}, {2, 1}, {3, 3}});
    const auto r = longest_monotone(s);
    EXPECT_EQ(r.chosen.size(), 3u);
    EXPECT_EQ(ref::max_subset(s, ref::monotone), 3u);
    EXPECT_TRUE(ref::monotone(r.chosen.points()));

    std::vector<Point> stair;
    for (int i = 0; i < 20; ++i) stair.push_back({Rational(i), Rational(i * i)});
    EXPECT_EQ(longest_monotone(PointSet(stair)).chosen.size(), 20u);

    std::mt19937_64 rng(1);
    for (int it = 0; it < 50; ++it) EXPECT_GE(longest_monotone(ref::random_integer_set(rng, 5, 0, 50)).chosen.size(), 3u);
}

TEST(LongestMonotone, MatchesExhaustiveSearch) {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 150; ++it) {
        const PointSet P = ref::random_integer_set(rng, 1 + rng() % 13, 0, 1 + static_cast<std::int64_t>(rng() % 8));
        const auto r = longest_monotone(P);
        EXPECT_EQ(r.chosen.size(), ref::max_subset(P, ref::monotone));
        EXPECT_TRUE(ref::monotone(r.chosen.points()));
        EXPECT_TRUE(verify_monotone(r.chosen).ok());
        EXPECT_TRUE(is_subset(r.chosen, P));
    }
}

TEST(LongestMonotone, ErdosSzekeresFloor) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 300; ++it) {
        const PointSet P = ref::random_integer_set(rng, 5 + rng() % 196, 0, 1000);
        EXPECT_GE(longest_monotone(P).chosen.size(), isqrt_ceil(P.size()));
    }
}

TEST(MonotoneTwoStage, Examples) {
    const PointSet par = parabola_set(25);
    EXPECT_EQ(monotone_gp_two_stage(par, SeededSampler{1, Rational(1, 2)}).chosen, par);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = monotone_gp_two_stage(grid(3, 3), SeededSampler{seed, Rational(1, 2)});
        EXPECT_GE(r.chosen.size(), 2u);
        EXPECT_TRUE(ref::general_position(r.chosen.points()));
        EXPECT_TRUE(ref::monotone(r.chosen.points()));
        EXPECT_EQ(r.certificate, Certificate::monotone_general_position);
        EXPECT_LE(r.trace.deletions, r.trace.obstacles);
    }
}

TEST(MonotoneTwoStage, ClusterUpperBound) {
    for (int k = 3; k <= 5; ++k)
        for (int s = 3; s <= 5; ++s)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const PointSet P = perturbed_cluster_grid(k, s, seed);
                const auto r = monotone_gp_two_stage(P, SeededSampler{seed, Rational(1, 2)});
                EXPECT_LE(r.chosen.size(), static_cast<std::size_t>(4 * k - 2));
                EXPECT_FALSE(verify_general_position(r.chosen));
                EXPECT_TRUE(verify_monotone(r.chosen).ok());
            }
}

TEST(AnnulusSelection, Certified) {
    const auto r = annulus_monotone_gp(50, 7);
    EXPECT_TRUE(verify_monotone(r.chosen).non_decreasing);
    EXPECT_FALSE(verify_general_position(r.chosen));
    EXPECT_TRUE(ref::general_position(r.chosen.points()));
    EXPECT_EQ(count_descending_pairs(r.chosen), 0u);
    expect_trace_consistent(r);
    const auto params = annulus_parameters(50);
    EXPECT_TRUE(is_subset(r.chosen, annulus_sector(50, params.x)));
    EXPECT_EQ(params.n, 101u * 101u);
    // x = n^(1/10) (ln n)^(2/5), prob = c / (n^(1/5) (ln n)^(4/5))
    const double n = 101.0 * 101.0;
    EXPECT_NEAR(params.x.to_double(), std::pow(n, 0.1) * std::pow(std::log(n), 0.4), 1e-5);
    EXPECT_NEAR(params.prob.to_double(), 1.0 / (std::pow(n, 0.2) * std::pow(std::log(n), 0.8)), 1e-11);
    // a large constant still gives a certified set
    const auto big = annulus_monotone_gp(32, 1, Rational(64));
    EXPECT_TRUE(verify_monotone(big.chosen).non_decreasing);
    EXPECT_FALSE(verify_general_position(big.chosen));
    EXPECT_TRUE(throws_precondition([] { annulus_monotone_gp(31, 1); }));
}

TEST(DistinctSlopes, Examples) {
    const PointSet sidon = sidon_parabola_set(400);
    const auto a = distinct_slopes_select(sidon, 3);
    EXPECT_EQ(a.trace.deletions, 0u);
    EXPECT_EQ(a.chosen.size(), a.trace.sampled);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto line = distinct_slopes_select(ref::line_of(30), seed, Rational(1000));
        EXPECT_LE(line.chosen.size(), 2u);
    }
    EXPECT_TRUE(throws_precondition([] { distinct_slopes_select(grid(1, 3), 1); }));
}

TEST(DistinctSlopes, RandomInputsCertified) {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 40; ++it) {
        const PointSet P = ref::random_integer_set(rng, 4 + rng() % 300, 0, 5 + static_cast<std::int64_t>(rng() % 30));
        if (P.size() < 4) continue;
        const auto r = distinct_slopes_select(P, rng(), Rational(1 + static_cast<std::int64_t>(rng() % 8)));
        expect_trace_consistent(r);
        EXPECT_TRUE(is_subset(r.chosen, P));
        EXPECT_FALSE(verify_distinct_slopes(r.chosen));
        if (r.chosen.size() <= 20) {
            EXPECT_TRUE(ref::distinct_slopes(r.chosen.points()));
        }
        EXPECT_EQ(r.certificate, Certificate::distinct_slopes);
    }
}

TEST(DistinctSlopes, ProbabilityFormula) {
    // min(1, c (n / ln s)^(1/3) / n)
    const double n = 4096, s = 64;
    EXPECT_NEAR(distinct_slopes_probability(4096, 64).to_double(), std::cbrt(n / std::log(s)) / n, 1e-9);
    EXPECT_EQ(distinct_slopes_probability(10, 3, Rational(100)), Rational(1));
}

TEST(Coloring, Examples) {
    const auto a = gp_coloring(parabola_set(50));
    EXPECT_EQ(a.colors_used, 1u);
    for (std::int64_t m : {2, 3, 7, 10}) EXPECT_EQ(gp_coloring(ref::line_of(m)).colors_used, static_cast<std::size_t>((m + 1) / 2));
    const auto g = gp_coloring(grid(16, 16));
    EXPECT_GE(static_cast<double>(g.colors_used), 16.0 / 2);
    EXPECT_TRUE(throws_precondition([] { gp_coloring(PointSet{}); }));
}

TEST(Coloring, PartitionAndClasses) {
    std::mt19937_64 rng(9);
    std::vector<PointSet> inputs = {grid(12, 12), grid(5, 9), perturbed_cluster_grid(3, 4, 1)};
    for (int i = 0; i < 8; ++i) inputs.push_back(ref::random_integer_set(rng, 20 + rng() % 200, 0, 12));
    for (const auto& P : inputs) {
        const auto col = gp_coloring(P);
        EXPECT_EQ(col.colors_used, col.classes.size());
        std::size_t total = 0;
        std::set<Point> seen;
        for (const auto& cls : col.classes) {
            EXPECT_FALSE(cls.empty());
            EXPECT_TRUE(ref::general_position(cls.points()));
            for (const auto& p : cls) {
                EXPECT_TRUE(P.contains(p));
                EXPECT_TRUE(seen.insert(p).second);
            }
            total += cls.size();
        }
        EXPECT_EQ(total, P.size());
        // each class of a k x k grid holds at most 2k points
        if (P == grid(12, 12)) {
            EXPECT_GE(col.colors_used * 24, P.size());
        }
    }
}

TEST(SelectorProperties, Deterministic) {
    const PointSet P = bernoulli_sample(grid(30, 30), SeededSampler{1, Rational(1, 2)});
    const SeededSampler s{77, Rational(1, 2)};
    EXPECT_EQ(greedy_general_position(P, 5).chosen, greedy_general_position(P, 5).chosen);
    EXPECT_EQ(sample_delete_general_position(P, s).chosen, sample_delete_general_position(P, s).chosen);
    EXPECT_EQ(monotone_gp_two_stage(P, s).chosen, monotone_gp_two_stage(P, s).chosen);
    EXPECT_EQ(distinct_slopes_select(P, 5).chosen, distinct_slopes_select(P, 5).chosen);
    EXPECT_EQ(annulus_monotone_gp(40, 5).chosen, annulus_monotone_gp(40, 5).chosen);
    const auto c1 = gp_coloring(P), c2 = gp_coloring(P);
    EXPECT_EQ(c1.classes, c2.classes);
}

TEST(SelectorProperties, ExactOracleDominatesGreedy) {
    std::mt19937_64 rng(10);
    for (int it = 0; it < 30; ++it) {
        const PointSet P = ref::random_integer_set(rng, 8 + rng() % 12, 0, 4);
        const auto best = max_general_position_exact(P).size();
        for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_LE(greedy_general_position(P, seed).chosen.size(), best);
    }
}
