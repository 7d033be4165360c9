#include "gpselect/gpselect.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gpselect/detectors.hpp"
#include "gpselect/error.hpp"
#include "gpselect/generators.hpp"
#include "gpselect/harness.hpp"
#include "gpselect/oracle.hpp"
#include "gpselect/selectors.hpp"

struct gps_pointset {
    gpsel::PointSet set;
};

namespace {

thread_local std::string last_error;

gps_status status_of(gpsel::ErrorKind k) {
    switch (k) {
        case gpsel::ErrorKind::precondition:
            return GPS_ERR_PRECONDITION;
        case gpsel::ErrorKind::parse:
            return GPS_ERR_PARSE;
        case gpsel::ErrorKind::io:
            return GPS_ERR_IO;
        case gpsel::ErrorKind::budget:
            return GPS_ERR_BUDGET;
        case gpsel::ErrorKind::overflow:
            return GPS_ERR_OVERFLOW;
        case gpsel::ErrorKind::certification:
            return GPS_ERR_CERTIFICATION;
    }
    return GPS_ERR_INTERNAL;
}

template <class F>
gps_status guarded(F&& f) {
    try {
        f();
        last_error.clear();
        return GPS_OK;
    } catch (const gpsel::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return GPS_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GPS_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (p == nullptr) gpsel::fail(gpsel::ErrorKind::precondition, std::string(what) + " must not be null");
}

gpsel::Rational rational_arg(const char* text, const char* what) {
    need(text, what);
    return gpsel::Rational::parse(text);
}

gps_pointset* wrap(gpsel::PointSet s) { return new gps_pointset{std::move(s)}; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
gps_status make_set(gps_pointset** out, F&& f) {
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        *out = wrap(f());
    });
}

gpsel::OracleBudget budget_of(size_t max_points, uint64_t max_nodes, bool counting) {
    gpsel::OracleBudget b = counting ? gpsel::OracleBudget::counting() : gpsel::OracleBudget{};
    if (max_points != 0) b.max_points = max_points;
    if (max_nodes != 0) b.max_nodes = max_nodes;
    return b;
}

}  // namespace

extern "C" {

const char* gps_last_error(void) { return last_error.c_str(); }

const char* gps_version(void) { return "1.0.0"; }

void gps_string_free(char* s) { std::free(s); }

gps_status gps_pointset_parse(const char* text, gps_pointset** out) {
    return make_set(out, [&] {
        need(text, "text");
        return gpsel::parse_point_set(text);
    });
}

gps_status gps_pointset_read(const char* path, gps_pointset** out) {
    return make_set(out, [&] {
        need(path, "path");
        return gpsel::read_point_set(path);
    });
}

gps_status gps_pointset_write(const gps_pointset* ps, const char* path) {
    return guarded([&] {
        need(ps, "point set");
        need(path, "path");
        gpsel::write_point_set(ps->set, path);
    });
}

gps_status gps_pointset_format(const gps_pointset* ps, char** text) {
    return guarded([&] {
        need(ps, "point set");
        need(text, "text");
        *text = dup_string(gpsel::format_point_set(ps->set));
    });
}

gps_status gps_pointset_from_integers(const int64_t* xy, size_t n, gps_pointset** out) {
    return make_set(out, [&] {
        if (n > 0) need(xy, "xy");
        std::vector<gpsel::Point> pts;
        pts.reserve(n);
        for (size_t i = 0; i < n; ++i) pts.push_back({gpsel::Rational(xy[2 * i]), gpsel::Rational(xy[2 * i + 1])});
        return gpsel::PointSet(std::move(pts));
    });
}

size_t gps_pointset_size(const gps_pointset* ps) { return ps ? ps->set.size() : 0; }

gps_status gps_pointset_get(const gps_pointset* ps, size_t i, int64_t* x_num, int64_t* x_den, int64_t* y_num,
                            int64_t* y_den) {
    return guarded([&] {
        need(ps, "point set");
        gpsel::require(i < ps->set.size(), "point index out of range");
        const auto& p = ps->set[i];
        if (x_num) *x_num = p.x.num();
        if (x_den) *x_den = p.x.den();
        if (y_num) *y_num = p.y.num();
        if (y_den) *y_den = p.y.den();
    });
}

void gps_pointset_free(gps_pointset* ps) { delete ps; }

gps_status gps_generate_grid(int64_t w, int64_t h, gps_pointset** out) {
    return make_set(out, [&] { return gpsel::grid(w, h); });
}

gps_status gps_generate_parabola(int64_t n, gps_pointset** out) {
    return make_set(out, [&] { return gpsel::parabola_set(n); });
}

gps_status gps_generate_sidon(int64_t n, gps_pointset** out) {
    return make_set(out, [&] { return gpsel::sidon_parabola_set(n); });
}

gps_status gps_generate_clusters(int k, int s, uint64_t seed, gps_pointset** out) {
    return make_set(out, [&] { return gpsel::perturbed_cluster_grid(k, s, seed); });
}

gps_status gps_generate_annulus_sector(int64_t m, const char* x, gps_pointset** out) {
    return make_set(out, [&] { return gpsel::annulus_sector(m, rational_arg(x, "x")); });
}

gps_status gps_generate_annulus(int64_t m, const char* x, gps_pointset** out) {
    return make_set(out, [&] { return gpsel::annulus(m, rational_arg(x, "x")); });
}

gps_status gps_generate_jarnik(int64_t m, gps_pointset** out) {
    return make_set(out, [&] { return gpsel::jarnik_arc(m); });
}

gps_status gps_generate_sample3d(int64_t n, const char* alpha, uint64_t seed, gps_pointset** out) {
    return make_set(out, [&] { return gpsel::grid3_projected_sample(n, rational_arg(alpha, "alpha"), seed); });
}

gps_status gps_bernoulli_sample(const gps_pointset* in, const char* prob, uint64_t seed, gps_pointset** out) {
    return make_set(out, [&] {
        need(in, "point set");
        return gpsel::bernoulli_sample(in->set, gpsel::SeededSampler{seed, rational_arg(prob, "prob")});
    });
}

gps_status gps_count(const gps_pointset* ps, gps_counts* out) {
    return guarded([&] {
        need(ps, "point set");
        need(out, "out");
        const auto rep = gpsel::obstacle_report(ps->set);
        gps_counts c{};
        c.n = ps->set.size();
        c.s_max = ps->set.size() >= 2 ? gpsel::line_statistics(ps->set).s_max : 0;
        c.triples = rep.collinear_triples;
        c.trapezoids = rep.trapezoids;
        c.descending_pairs = rep.descending_pairs;
        *out = c;
    });
}

gps_status gps_verify(const gps_pointset* ps, gps_property property, int* holds) {
    return guarded([&] {
        need(ps, "point set");
        need(holds, "holds");
        switch (property) {
            case GPS_PROP_GENERAL_POSITION:
                *holds = !gpsel::verify_general_position(ps->set);
                return;
            case GPS_PROP_DISTINCT_SLOPES:
                *holds = !gpsel::verify_distinct_slopes(ps->set);
                return;
            case GPS_PROP_MONOTONE:
                *holds = gpsel::verify_monotone(ps->set).ok();
                return;
        }
        gpsel::fail(gpsel::ErrorKind::precondition, "unknown property");
    });
}

gps_status gps_select(const gps_pointset* in, gps_method method, uint64_t seed, const char* prob, const char* c,
                      gps_pointset** out, gps_trace* trace, const char** certificate) {
    return guarded([&] {
        need(in, "point set");
        need(out, "out");
        *out = nullptr;
        const gpsel::SeededSampler sampler{seed, prob ? gpsel::Rational::parse(prob) : gpsel::Rational(1, 2)};
        gpsel::SelectionResult r;
        switch (method) {
            case GPS_SELECT_GREEDY_GP:
                r = gpsel::greedy_general_position(in->set, seed);
                break;
            case GPS_SELECT_SAMPLE_GP:
                r = gpsel::sample_delete_general_position(in->set, sampler);
                break;
            case GPS_SELECT_MONOTONE:
                r = gpsel::longest_monotone(in->set);
                break;
            case GPS_SELECT_MONOTONE_GP:
                r = gpsel::monotone_gp_two_stage(in->set, sampler);
                break;
            case GPS_SELECT_SLOPES:
                r = gpsel::distinct_slopes_select(in->set, seed, c ? gpsel::Rational::parse(c) : gpsel::kSlopesC);
                break;
            default:
                gpsel::fail(gpsel::ErrorKind::precondition, "unknown selection method");
        }
        if (trace) *trace = gps_trace{r.trace.sampled, r.trace.obstacles, r.trace.deletions};
        if (certificate) *certificate = gpsel::to_string(r.certificate).data();
        *out = wrap(std::move(r.chosen));
    });
}

gps_status gps_select_annulus(int64_t m, uint64_t seed, const char* c, gps_pointset** out, gps_trace* trace) {
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        auto r = gpsel::annulus_monotone_gp(m, seed, c ? gpsel::Rational::parse(c) : gpsel::kAnnulusC);
        if (trace) *trace = gps_trace{r.trace.sampled, r.trace.obstacles, r.trace.deletions};
        *out = wrap(std::move(r.chosen));
    });
}

gps_status gps_color(const gps_pointset* in, uint32_t* color_of, size_t* colors_used) {
    return guarded([&] {
        need(in, "point set");
        const auto col = gpsel::gp_coloring(in->set);
        if (colors_used) *colors_used = col.colors_used;
        if (color_of)
            for (size_t c = 0; c < col.classes.size(); ++c)
                for (const auto& p : col.classes[c]) color_of[in->set.index_of(p)] = static_cast<uint32_t>(c);
    });
}

gps_status gps_oracle_triples(const gps_pointset* ps, size_t max_points, uint64_t* out) {
    return guarded([&] {
        need(ps, "point set");
        need(out, "out");
        *out = gpsel::triples_bruteforce(ps->set, budget_of(max_points, 0, true));
    });
}

gps_status gps_oracle_trapezoids(const gps_pointset* ps, size_t max_points, uint64_t* out) {
    return guarded([&] {
        need(ps, "point set");
        need(out, "out");
        *out = gpsel::trapezoids_bruteforce(ps->set, budget_of(max_points, 0, true));
    });
}

gps_status gps_oracle_max(const gps_pointset* ps, gps_oracle_kind which, size_t max_points, uint64_t max_nodes,
                          gps_pointset** out) {
    return make_set(out, [&] {
        need(ps, "point set");
        const auto b = budget_of(max_points, max_nodes, false);
        switch (which) {
            case GPS_ORACLE_MAX_GP:
                return gpsel::max_general_position_exact(ps->set, b);
            case GPS_ORACLE_MAX_MONOTONE_GP:
                return gpsel::max_monotone_gp_exact(ps->set, b);
            case GPS_ORACLE_MAX_SLOPES:
                return gpsel::max_distinct_slopes_exact(ps->set, b);
        }
        gpsel::fail(gpsel::ErrorKind::precondition, "unknown oracle");
    });
}

gps_status gps_oracle_ramsey(const gps_pointset* ps, int s, size_t max_points, uint64_t max_nodes, int* holds) {
    return guarded([&] {
        need(ps, "point set");
        need(holds, "holds");
        *holds = gpsel::ramsey_witness_check(ps->set, s, budget_of(max_points, max_nodes, false));
    });
}

gps_status gps_experiment_run(const char* spec_json, int with_timing, char** csv) {
    return guarded([&] {
        need(spec_json, "spec");
        need(csv, "csv");
        *csv = nullptr;
        std::vector<gpsel::ExperimentRecord> all;
        for (const auto& spec : gpsel::parse_experiment_specs(spec_json)) {
            auto recs = gpsel::run_experiment(spec);
            all.insert(all.end(), recs.begin(), recs.end());
        }
        *csv = dup_string(gpsel::format_csv(all, with_timing != 0));
    });
}

gps_status gps_fit_exponent(const double* n, const double* value, size_t len, double* slope, double* intercept,
                            double* r_squared) {
    return guarded([&] {
        if (len > 0) {
            need(n, "n");
            need(value, "value");
        }
        std::vector<std::pair<double, double>> series;
        for (size_t i = 0; i < len; ++i) series.emplace_back(n[i], value[i]);
        const auto f = gpsel::fit_exponent(series);
        if (slope) *slope = f.slope;
        if (intercept) *intercept = f.intercept;
        if (r_squared) *r_squared = f.r_squared;
    });
}

}  // extern "C"
