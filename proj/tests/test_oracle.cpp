#include <gtest/gtest.h>

#include <random>

#include "gpselect/detectors.hpp"
#include "gpselect/error.hpp"
#include "gpselect/generators.hpp"
#include "gpselect/oracle.hpp"
#include "gpselect/selectors.hpp"
#include "support.hpp"

using namespace gpsel;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected gpsel::Error";
    return ErrorKind::certification;
}

bool monotone_gp(const std::vector<Point>& S) { return ref::monotone(S) && ref::general_position(S); }

bool is_subset(const PointSet& a, const PointSet& b) {
    for (const auto& p : a)
        if (!b.contains(p)) return false;
    return true;
}

}  // namespace

TEST(BruteForceCounts, Examples) {
    EXPECT_EQ(triples_bruteforce(grid(3, 3)), 8u);
    EXPECT_EQ(triples_bruteforce(parabola_set(20)), 0u);
    EXPECT_EQ(triples_bruteforce(ref::line_of(4)), 4u);
    EXPECT_EQ(trapezoids_bruteforce(grid(2, 2)), 2u);
    EXPECT_EQ(trapezoids_bruteforce(ref::line_of(4)), 0u);
    EXPECT_EQ(trapezoids_bruteforce(parabola_set(4)), 1u);
}

TEST(BruteForceCounts, AgreeWithReference) {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 100; ++it) {
        const PointSet P = ref::random_integer_set(rng, 3 + rng() % 38, 0, 2 + static_cast<std::int64_t>(rng() % 10));
        EXPECT_EQ(triples_bruteforce(P), ref::triples(P));
        EXPECT_EQ(trapezoids_bruteforce(P), ref::trapezoids(P));
        EXPECT_EQ(triples_bruteforce(P), count_collinear_tuples(P, 3));
        if (P.size() >= 4) {
            EXPECT_EQ(trapezoids_bruteforce(P), count_trapezoids(P));
        }
    }
}

TEST(BruteForceCounts, BudgetRefusal) {
    EXPECT_EQ(kind_of([] { triples_bruteforce(grid(7, 6)); }), ErrorKind::budget);
    EXPECT_EQ(kind_of([] { trapezoids_bruteforce(grid(5, 5), OracleBudget{24, 0}); }), ErrorKind::budget);
    EXPECT_EQ(triples_bruteforce(grid(8, 5)), ref::triples(grid(8, 5)));
}

TEST(MaxGeneralPosition, Examples) {
    EXPECT_EQ(max_general_position_exact(grid(3, 3)).size(), 6u);
    EXPECT_EQ(max_general_position_exact(grid(4, 4)).size(), 8u);
    EXPECT_EQ(ref::max_subset(grid(3, 3), ref::general_position), 6u);
    EXPECT_EQ(ref::max_subset(grid(4, 4), ref::general_position), 8u);
    EXPECT_EQ(max_general_position_exact(ref::line_of(10)).size(), 2u);
    EXPECT_EQ(max_general_position_exact(PointSet{}).size(), 0u);
}

TEST(MaxGeneralPosition, MatchesExhaustiveEnumeration) {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 60; ++it) {
        const PointSet P = ref::random_integer_set(rng, 3 + rng() % 12, 0, 2 + static_cast<std::int64_t>(rng() % 4));
        const PointSet best = max_general_position_exact(P);
        EXPECT_EQ(best.size(), ref::max_subset(P, ref::general_position));
        EXPECT_TRUE(ref::general_position(best.points()));
        EXPECT_TRUE(is_subset(best, P));
        EXPECT_EQ(best, max_general_position_exact(P));
    }
}

TEST(MaxGeneralPosition, GridPigeonhole) {
    for (std::int64_t k = 2; k <= 4; ++k) EXPECT_EQ(max_general_position_exact(grid(k, k)).size(), static_cast<std::size_t>(2 * k));
    EXPECT_LE(max_general_position_exact(grid(5, 4)).size(), 8u);
}

TEST(MaxGeneralPosition, BudgetRefusal) {
    EXPECT_EQ(kind_of([] { max_general_position_exact(grid(5, 5)); }), ErrorKind::budget);
    EXPECT_EQ(kind_of([] { max_general_position_exact(grid(4, 4), OracleBudget{24, 3}); }), ErrorKind::budget);
}

TEST(MaxMonotoneGp, Examples) {
    EXPECT_EQ(max_monotone_gp_exact(grid(3, 3)).size(), 4u);
    EXPECT_EQ(ref::max_subset(grid(3, 3), monotone_gp), 4u);
    const PointSet arc = jarnik_arc(20);
    ASSERT_LE(arc.size(), 24u);
    EXPECT_EQ(max_monotone_gp_exact(arc), arc);
    std::vector<Point> down;
    for (int i = 0; i < 10; ++i) down.push_back({Rational(i), Rational(-i * i)});
    EXPECT_EQ(max_monotone_gp_exact(PointSet(down)).size(), 10u);
}

TEST(MaxMonotoneGp, MatchesExhaustiveEnumeration) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 60; ++it) {
        const PointSet P = ref::random_integer_set(rng, 3 + rng() % 12, 0, 2 + static_cast<std::int64_t>(rng() % 6));
        const PointSet best = max_monotone_gp_exact(P);
        EXPECT_EQ(best.size(), ref::max_subset(P, monotone_gp));
        EXPECT_TRUE(monotone_gp(best.points()));
        EXPECT_TRUE(is_subset(best, P));
    }
}

TEST(MaxDistinctSlopes, Examples) {
    EXPECT_EQ(max_distinct_slopes_exact(parabola_set(4)).size(), 3u);
    EXPECT_EQ(ref::max_subset(parabola_set(4), ref::distinct_slopes), 3u);
    const PointSet sidon = ref::from_coords({{1, 1}, {2, 4}, {5, 25}, {11, 121}});
    EXPECT_EQ(max_distinct_slopes_exact(sidon), sidon);
    EXPECT_EQ(max_distinct_slopes_exact(ref::line_of(3)).size(), 2u);
}

TEST(MaxDistinctSlopes, MatchesExhaustiveEnumeration) {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 40; ++it) {
        const PointSet P = ref::random_integer_set(rng, 3 + rng() % 10, 0, 2 + static_cast<std::int64_t>(rng() % 6));
        const PointSet best = max_distinct_slopes_exact(P);
        EXPECT_EQ(best.size(), ref::max_subset(P, ref::distinct_slopes));
        EXPECT_FALSE(verify_distinct_slopes(best));
        EXPECT_TRUE(is_subset(best, P));
    }
}

TEST(RamseyWitness, Examples) {
    const PointSet three_and_one = ref::from_coords({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    EXPECT_FALSE(ramsey_witness_check(three_and_one, 4));
    EXPECT_EQ(max_general_position_exact(three_and_one).size(), 3u);
    // grid(m, m) with m = s/2 - 1 holds at most 2m = s - 2 points in general position
    for (int s : {6, 8, 10}) EXPECT_FALSE(ramsey_witness_check(grid(s / 2 - 1, s / 2 - 1), s)) << s;
    EXPECT_TRUE(ramsey_witness_check(ref::line_of(5), 5));
    EXPECT_TRUE(ramsey_witness_check(parabola_set(6), 6));
    EXPECT_EQ(kind_of([] { ramsey_witness_check(grid(2, 2), 2); }), ErrorKind::precondition);
}

TEST(RamseyWitness, FivePointConfigurations) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 2000; ++it) {
        const PointSet P = ref::random_integer_set(rng, 5, 0, 10);
        const bool expect = line_statistics(P).s_max >= 4 || ref::max_subset(P, ref::general_position) >= 4;
        EXPECT_TRUE(expect);
        EXPECT_EQ(ramsey_witness_check(P, 4), expect);
    }
}
