#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gpselect/detectors.hpp"
#include "gpselect/error.hpp"
#include "gpselect/generators.hpp"
#include "gpselect/harness.hpp"
#include "gpselect/selectors.hpp"

namespace gpsel {

namespace {

using Clock = std::chrono::steady_clock;

struct Registered {
    std::int64_t min_size;
    std::int64_t max_size;  // desk-scale cap
    bool seeded;
    std::function<ExperimentRecord(std::int64_t, std::uint64_t, const std::optional<Rational>&)> run;
};

double lnd(double v) { return std::log(v); }

ExperimentRecord grid_counts(const std::string& id, std::int64_t k, bool trapezoids) {
    const PointSet g = grid(k, k);
    const auto stats = line_statistics(g);
    ExperimentRecord r;
    r.experiment_id = id;
    r.n = g.size();
    r.s = stats.s_max;
    r.triples = count_collinear_tuples(stats, 3);
    const double n = static_cast<double>(r.n), s = static_cast<double>(r.s);
    if (trapezoids) {
        r.trapezoids = count_trapezoids(g);
        r.ratio = static_cast<double>(*r.trapezoids) / (n * n * n * lnd(s) + n * n * s * s);
    } else {
        r.ratio = static_cast<double>(*r.triples) / (n * n * lnd(s) + n * s * s);
    }
    return r;
}

ExperimentRecord st_profile(std::int64_t k) {
    const PointSet g = grid(k, k);
    const auto stats = line_statistics(g);
    ExperimentRecord r;
    r.experiment_id = "st-profile";
    r.n = g.size();
    r.s = stats.s_max;
    r.triples = count_collinear_tuples(stats, 3);
    // smallest constant C with b_i <= C (n^2/i^3 + n/i) for every i
    const double n = static_cast<double>(r.n);
    double worst = 0.0;
    for (const auto& [i, b] : stats.b) {
        const double di = i;
        worst = std::max(worst, static_cast<double>(b) / (n * n / (di * di * di) + n / di));
    }
    r.ratio = worst;
    return r;
}

// Largest total length of l ∩ A over lines l through two points of A,
// relative to 2 x^(1/2) n^(1/4).
double chord_ratio(const PointSet& ring, std::int64_t m, const Rational& x, std::uint64_t n) {
    const auto& img = ring.image();
    const double outer2 = static_cast<double>(m) * static_cast<double>(m);
    const double inner = static_cast<double>(m) - x.to_double();
    const double inner2 = inner * inner;
    double best = 0.0;
    for (std::size_t i = 0; i < img.x.size(); ++i) {
        const std::int64_t wx = m - img.x[i], wy = m - img.y[i];
        for (std::size_t j = i + 1; j < img.x.size(); ++j) {
            const std::int64_t ux = img.x[j] - img.x[i], uy = img.y[j] - img.y[i];
            const double cross = static_cast<double>(ux * wy - uy * wx);
            const double d2 = cross * cross / static_cast<double>(ux * ux + uy * uy);
            const double mu = 2.0 * std::sqrt(std::max(0.0, outer2 - d2)) - 2.0 * std::sqrt(std::max(0.0, inner2 - d2));
            best = std::max(best, mu);
        }
    }
    const double bound = 2.0 * std::sqrt(x.to_double()) * std::pow(static_cast<double>(n), 0.25);
    return best / bound;
}

// Triples and chords are measured on the whole annulus A, descending pairs
// and subset_size on the sector B.
ExperimentRecord annulus_scaling(std::int64_t m) {
    const auto params = annulus_parameters(m);
    const PointSet ring = annulus(m, params.x);
    const PointSet sector = annulus_sector(m, params.x);
    ExperimentRecord r;
    r.experiment_id = "annulus-scaling";
    r.n = params.n;
    r.x = params.x;
    r.subset_size = sector.size();
    const auto stats = line_statistics(ring);
    r.s = stats.s_max;
    r.triples = count_collinear_tuples(stats, 3);
    r.descending_pairs = count_descending_pairs(sector);
    r.ratio = chord_ratio(ring, m, params.x, params.n);
    return r;
}

ExperimentRecord monotone_gp_grid(std::int64_t m, std::uint64_t seed, const std::optional<Rational>& c) {
    const Rational cc = c.value_or(kAnnulusC);
    const auto params = annulus_parameters(m, cc);
    const auto sel = annulus_monotone_gp(m, seed, cc);
    ExperimentRecord r;
    r.experiment_id = "monotone-gp-grid";
    r.n = params.n;
    r.s = sel.chosen.size() >= 2 ? 2 : static_cast<std::int64_t>(sel.chosen.size());
    r.seed = seed;
    r.x = params.x;
    r.prob = params.prob;
    r.c = cc;
    r.subset_size = sel.chosen.size();
    r.ratio = sel.trace.sampled ? static_cast<double>(sel.trace.deletions) / static_cast<double>(sel.trace.sampled) : 0.0;
    return r;
}

ExperimentRecord distinct_slopes_grid(std::int64_t k, std::uint64_t seed, const std::optional<Rational>& c) {
    const Rational cc = c.value_or(kSlopesC);
    const PointSet g = grid(k, k);
    // s_max of the k x k grid is k
    const auto sel = distinct_slopes_select(g, static_cast<int>(k), seed, cc);
    ExperimentRecord r;
    r.experiment_id = "distinct-slopes-grid";
    r.n = g.size();
    r.s = k;
    r.seed = seed;
    r.prob = distinct_slopes_probability(g.size(), static_cast<int>(k), cc);
    r.c = cc;
    r.subset_size = sel.chosen.size();
    r.ratio = sel.trace.sampled ? static_cast<double>(sel.trace.deletions) / static_cast<double>(sel.trace.sampled) : 0.0;
    return r;
}

ExperimentRecord coloring_grid(std::int64_t k) {
    const PointSet g = grid(k, k);
    const auto col = gp_coloring(g);
    ExperimentRecord r;
    r.experiment_id = "coloring-grid";
    r.n = g.size();
    r.s = k;
    r.colors_used = col.colors_used;
    const double n = static_cast<double>(r.n);
    r.ratio = static_cast<double>(col.colors_used) / (std::sqrt(n) * lnd(n));
    return r;
}

ExperimentRecord jarnik_scaling(std::int64_t m) {
    const PointSet arc = jarnik_arc(m);
    ExperimentRecord r;
    r.experiment_id = "jarnik-scaling";
    r.n = static_cast<std::uint64_t>(m * m);
    r.s = arc.size() >= 2 ? line_statistics(arc).s_max : 1;
    r.subset_size = arc.size();
    return r;
}

const std::map<std::string, Registered>& registry() {
    static const std::map<std::string, Registered> reg = {
        {"triple-count-scaling", {2, 256, false, [](auto k, auto, const auto&) { return grid_counts("triple-count-scaling", k, false); }}},
        {"trapezoid-count-scaling", {2, 128, false, [](auto k, auto, const auto&) { return grid_counts("trapezoid-count-scaling", k, true); }}},
        {"st-profile", {2, 256, false, [](auto k, auto, const auto&) { return st_profile(k); }}},
        {"annulus-scaling", {32, 512, false, [](auto m, auto, const auto&) { return annulus_scaling(m); }}},
        {"monotone-gp-grid", {32, 512, true, [](auto m, auto seed, const auto& c) { return monotone_gp_grid(m, seed, c); }}},
        {"distinct-slopes-grid", {2, 128, true, [](auto k, auto seed, const auto& c) { return distinct_slopes_grid(k, seed, c); }}},
        {"coloring-grid", {1, 160, false, [](auto k, auto, const auto&) { return coloring_grid(k); }}},
        {"jarnik-scaling", {2, 4096, false, [](auto m, auto, const auto&) { return jarnik_scaling(m); }}},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& experiment_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, reg] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentSpec& spec) {
    const auto it = registry().find(spec.id);
    if (it == registry().end()) fail(ErrorKind::precondition, "unknown experiment '" + spec.id + "'");
    const Registered& reg = it->second;
    require(!spec.sizes.empty(), "experiment needs at least one size");
    require(!spec.seeds.empty(), "experiment needs at least one seed");
    for (auto size : spec.sizes) {
        if (size < reg.min_size) fail(ErrorKind::precondition, spec.id + ": size " + std::to_string(size) + " below minimum " + std::to_string(reg.min_size));
        if (size > reg.max_size) fail(ErrorKind::precondition, spec.id + ": size " + std::to_string(size) + " exceeds desk-scale cap " + std::to_string(reg.max_size));
    }
    std::vector<ExperimentRecord> out;
    for (auto size : spec.sizes) {
        std::optional<ExperimentRecord> shared;
        for (auto seed : spec.seeds) {
            ExperimentRecord r;
            if (reg.seeded || !shared) {
                const auto t0 = Clock::now();
                r = reg.run(size, seed, spec.c);
                r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
                if (!reg.seeded) shared = r;
            } else {
                r = *shared;
            }
            r.seed = seed;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<ExperimentSpec> parse_experiment_specs(std::string_view json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(ErrorKind::parse, std::string("experiment spec: ") + e.what());
    }
    auto one = [](const json& j) {
        if (!j.is_object() || !j.contains("experiment") || !j["experiment"].is_string())
            fail(ErrorKind::parse, "experiment spec: each entry needs a string \"experiment\"");
        ExperimentSpec s;
        s.id = j["experiment"].get<std::string>();
        try {
            s.sizes = j.at("sizes").get<std::vector<std::int64_t>>();
            if (j.contains("seeds")) s.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
            if (j.contains("c")) {
                const auto& c = j["c"];
                s.c = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<std::int64_t>());
            }
        } catch (const json::exception& e) {
            fail(ErrorKind::parse, "experiment spec '" + s.id + "': " + e.what());
        }
        return s;
    };
    std::vector<ExperimentSpec> specs;
    if (doc.is_object() && doc.contains("experiments")) {
        if (!doc["experiments"].is_array()) fail(ErrorKind::parse, "experiment spec: \"experiments\" must be an array");
        for (const auto& j : doc["experiments"]) specs.push_back(one(j));
    } else {
        specs.push_back(one(doc));
    }
    return specs;
}

std::vector<ExperimentSpec> read_experiment_specs(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_specs(buf.str());
}

}  // namespace gpsel
