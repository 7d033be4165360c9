#include <gtest/gtest.h>

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "gpselect/gpselect.h"

namespace {

struct Owned {
    gps_pointset* p = nullptr;
    ~Owned() { gps_pointset_free(p); }
};

std::string text_of(const gps_pointset* p) {
    char* t = nullptr;
    EXPECT_EQ(gps_pointset_format(p, &t), GPS_OK);
    std::string s = t ? t : "";
    gps_string_free(t);
    return s;
}

}  // namespace

TEST(CApi, ParseFormatAndAccess) {
    Owned s;
    ASSERT_EQ(gps_pointset_parse("# c\n3 4\n1/2 -1\n", &s.p), GPS_OK);
    EXPECT_EQ(gps_pointset_size(s.p), 2u);
    int64_t xn, xd, yn, yd;
    ASSERT_EQ(gps_pointset_get(s.p, 0, &xn, &xd, &yn, &yd), GPS_OK);
    EXPECT_EQ(xn, 1);
    EXPECT_EQ(xd, 2);
    EXPECT_EQ(yn, -1);
    EXPECT_EQ(yd, 1);
    EXPECT_EQ(text_of(s.p), "1/2 -1\n3 4\n");
    EXPECT_EQ(gps_pointset_get(s.p, 2, &xn, nullptr, nullptr, nullptr), GPS_ERR_PRECONDITION);
    EXPECT_STRNE(gps_last_error(), "");
    EXPECT_EQ(gps_pointset_size(nullptr), 0u);
}

TEST(CApi, ErrorCodes) {
    Owned s;
    EXPECT_EQ(gps_pointset_parse("1 2\n1 2\n", &s.p), GPS_ERR_PRECONDITION);
    EXPECT_EQ(s.p, nullptr);
    EXPECT_NE(std::string(gps_last_error()).find("line 2"), std::string::npos);
    EXPECT_EQ(gps_pointset_parse("1 q\n", &s.p), GPS_ERR_PARSE);
    EXPECT_EQ(gps_pointset_read("/nonexistent/x.txt", &s.p), GPS_ERR_IO);
    EXPECT_EQ(gps_generate_grid(0, 2, &s.p), GPS_ERR_PRECONDITION);
    EXPECT_EQ(gps_generate_annulus_sector(10, "1/0", &s.p), GPS_ERR_PARSE);
    EXPECT_EQ(gps_pointset_parse(nullptr, &s.p), GPS_ERR_PRECONDITION);
    Owned g;
    ASSERT_EQ(gps_generate_grid(5, 5, &g.p), GPS_OK);
    EXPECT_STREQ(gps_last_error(), "");
    Owned out;
    EXPECT_EQ(gps_oracle_max(g.p, GPS_ORACLE_MAX_GP, 0, 0, &out.p), GPS_ERR_BUDGET);
    uint64_t v = 0;
    EXPECT_EQ(gps_oracle_triples(g.p, 10, &v), GPS_ERR_BUDGET);
}

TEST(CApi, GeneratorsAndCounts) {
    Owned g;
    ASSERT_EQ(gps_generate_grid(3, 3, &g.p), GPS_OK);
    gps_counts c{};
    ASSERT_EQ(gps_count(g.p, &c), GPS_OK);
    EXPECT_EQ(c.n, 9u);
    EXPECT_EQ(c.s_max, 3);
    EXPECT_EQ(c.triples, 8u);
    EXPECT_EQ(c.trapezoids, 72u);
    uint64_t t = 0;
    ASSERT_EQ(gps_oracle_triples(g.p, 0, &t), GPS_OK);
    EXPECT_EQ(t, c.triples);
    ASSERT_EQ(gps_oracle_trapezoids(g.p, 0, &t), GPS_OK);
    EXPECT_EQ(t, c.trapezoids);

    Owned one;
    ASSERT_EQ(gps_generate_parabola(1, &one.p), GPS_OK);
    ASSERT_EQ(gps_count(one.p, &c), GPS_OK);
    EXPECT_EQ(c.s_max, 0);

    Owned cl, an, ja, s3, sd, sub;
    ASSERT_EQ(gps_generate_clusters(3, 4, 1, &cl.p), GPS_OK);
    EXPECT_EQ(gps_pointset_size(cl.p), 36u);
    ASSERT_EQ(gps_generate_annulus(10, "10", &an.p), GPS_OK);
    EXPECT_EQ(gps_pointset_size(an.p), 317u);
    ASSERT_EQ(gps_generate_jarnik(64, &ja.p), GPS_OK);
    ASSERT_EQ(gps_generate_sample3d(10, "1/2", 2, &s3.p), GPS_OK);
    ASSERT_EQ(gps_generate_sidon(12, &sd.p), GPS_OK);
    EXPECT_EQ(gps_pointset_size(sd.p), 5u);
    ASSERT_EQ(gps_bernoulli_sample(g.p, "1/2", 3, &sub.p), GPS_OK);
    EXPECT_LE(gps_pointset_size(sub.p), 9u);

    int holds = 0;
    ASSERT_EQ(gps_verify(ja.p, GPS_PROP_GENERAL_POSITION, &holds), GPS_OK);
    EXPECT_EQ(holds, 1);
    ASSERT_EQ(gps_verify(sd.p, GPS_PROP_DISTINCT_SLOPES, &holds), GPS_OK);
    EXPECT_EQ(holds, 1);
    ASSERT_EQ(gps_verify(g.p, GPS_PROP_GENERAL_POSITION, &holds), GPS_OK);
    EXPECT_EQ(holds, 0);
    ASSERT_EQ(gps_verify(ja.p, GPS_PROP_MONOTONE, &holds), GPS_OK);
    EXPECT_EQ(holds, 1);
}

TEST(CApi, FromIntegersAndFiles) {
    const int64_t xy[] = {0, 0, 1, 0, 2, 0, 0, 1};
    Owned s;
    ASSERT_EQ(gps_pointset_from_integers(xy, 4, &s.p), GPS_OK);
    int holds = -1;
    ASSERT_EQ(gps_oracle_ramsey(s.p, 4, 0, 0, &holds), GPS_OK);
    EXPECT_EQ(holds, 0);
    const std::string path = testing::TempDir() + "capi_points.txt";
    ASSERT_EQ(gps_pointset_write(s.p, path.c_str()), GPS_OK);
    Owned back;
    ASSERT_EQ(gps_pointset_read(path.c_str(), &back.p), GPS_OK);
    EXPECT_EQ(text_of(back.p), text_of(s.p));
    std::remove(path.c_str());
    const int64_t dup[] = {1, 1, 1, 1};
    Owned bad;
    EXPECT_EQ(gps_pointset_from_integers(dup, 2, &bad.p), GPS_ERR_PRECONDITION);
}

TEST(CApi, Selection) {
    Owned g;
    ASSERT_EQ(gps_generate_grid(12, 12, &g.p), GPS_OK);
    const gps_method methods[] = {GPS_SELECT_GREEDY_GP, GPS_SELECT_SAMPLE_GP, GPS_SELECT_MONOTONE, GPS_SELECT_MONOTONE_GP,
                                  GPS_SELECT_SLOPES};
    const char* expect_cert[] = {"general-position", "general-position", "monotone", "monotone-general-position",
                                 "distinct-slopes"};
    for (int i = 0; i < 5; ++i) {
        Owned out;
        gps_trace t{};
        const char* cert = nullptr;
        ASSERT_EQ(gps_select(g.p, methods[i], 9, nullptr, nullptr, &out.p, &t, &cert), GPS_OK) << gps_last_error();
        EXPECT_STREQ(cert, expect_cert[i]);
        EXPECT_LE(t.deletions, t.obstacles);
        EXPECT_GT(gps_pointset_size(out.p), 0u);
        Owned again;
        ASSERT_EQ(gps_select(g.p, methods[i], 9, nullptr, nullptr, &again.p, nullptr, nullptr), GPS_OK);
        EXPECT_EQ(text_of(out.p), text_of(again.p));
    }
    Owned out;
    EXPECT_EQ(gps_select(g.p, GPS_SELECT_SAMPLE_GP, 1, "0", nullptr, &out.p, nullptr, nullptr), GPS_ERR_PRECONDITION);
    EXPECT_EQ(gps_select(g.p, static_cast<gps_method>(42), 1, nullptr, nullptr, &out.p, nullptr, nullptr),
              GPS_ERR_PRECONDITION);

    Owned ann;
    gps_trace t{};
    ASSERT_EQ(gps_select_annulus(40, 2, nullptr, &ann.p, &t), GPS_OK);
    EXPECT_EQ(gps_pointset_size(ann.p), t.sampled - t.deletions);
    EXPECT_EQ(gps_select_annulus(8, 2, nullptr, &ann.p, &t), GPS_ERR_PRECONDITION);
}

TEST(CApi, Coloring) {
    Owned g;
    ASSERT_EQ(gps_generate_grid(8, 8, &g.p), GPS_OK);
    std::vector<uint32_t> color(64, 999);
    size_t used = 0;
    ASSERT_EQ(gps_color(g.p, color.data(), &used), GPS_OK);
    EXPECT_GE(used, 4u);
    for (auto c : color) EXPECT_LT(c, used);
    ASSERT_EQ(gps_color(g.p, nullptr, &used), GPS_OK);
}

TEST(CApi, OracleMaxima) {
    Owned g;
    ASSERT_EQ(gps_generate_grid(3, 3, &g.p), GPS_OK);
    Owned a, b, c;
    ASSERT_EQ(gps_oracle_max(g.p, GPS_ORACLE_MAX_GP, 0, 0, &a.p), GPS_OK);
    EXPECT_EQ(gps_pointset_size(a.p), 6u);
    ASSERT_EQ(gps_oracle_max(g.p, GPS_ORACLE_MAX_MONOTONE_GP, 0, 0, &b.p), GPS_OK);
    EXPECT_EQ(gps_pointset_size(b.p), 4u);
    ASSERT_EQ(gps_oracle_max(g.p, GPS_ORACLE_MAX_SLOPES, 0, 0, &c.p), GPS_OK);
    int holds = 0;
    ASSERT_EQ(gps_verify(c.p, GPS_PROP_DISTINCT_SLOPES, &holds), GPS_OK);
    EXPECT_EQ(holds, 1);
}

TEST(CApi, ExperimentsAndFit) {
    char* csv = nullptr;
    ASSERT_EQ(gps_experiment_run(R"({"experiment": "jarnik-scaling", "sizes": [16, 32]})", 0, &csv), GPS_OK);
    const std::string text = csv;
    gps_string_free(csv);
    EXPECT_EQ(text.rfind("experiment_id,", 0), 0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
    EXPECT_EQ(gps_experiment_run(R"({"experiment": "nope", "sizes": [1]})", 0, &csv), GPS_ERR_PRECONDITION);
    EXPECT_EQ(csv, nullptr);
    EXPECT_EQ(gps_experiment_run("not json", 0, &csv), GPS_ERR_PARSE);

    const double n[] = {10, 100, 1000}, v[] = {100, 10000, 1000000};
    double slope = 0, intercept = 0, r2 = 0;
    ASSERT_EQ(gps_fit_exponent(n, v, 3, &slope, &intercept, &r2), GPS_OK);
    EXPECT_NEAR(slope, 2.0, 1e-12);
    EXPECT_EQ(gps_fit_exponent(n, v, 2, &slope, &intercept, &r2), GPS_ERR_PRECONDITION);
    EXPECT_STRNE(gps_version(), "");
}
