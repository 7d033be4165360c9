#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpselect/geometry.hpp"

namespace gpsel {

// Point-set text format: one point per line, two whitespace-separated
// fields, each an integer or p/q. Blank lines and lines starting with '#'
// are skipped. Errors name the offending line.
PointSet parse_point_set(std::string_view text);
PointSet read_point_set(const std::string& path);
std::string format_point_set(const PointSet& points);
void write_point_set(const PointSet& points, const std::string& path);

struct ExperimentRecord {
    std::string experiment_id;
    std::uint64_t n = 0;
    std::int64_t s = 0;
    std::uint64_t seed = 0;
    std::optional<Rational> alpha, x, prob, c;
    std::optional<std::uint64_t> subset_size, triples, trapezoids, descending_pairs, colors_used;
    // Experiment-specific derived quantity, e.g. a measured constant.
    std::optional<double> ratio;
    double elapsed_ms = 0.0;
};

// Fixed column order; empty fields for values an experiment does not
// produce. Rationals are printed as decimals with 12 significant digits.
// elapsed_ms is appended only when `with_timing` is set, since it is the
// one column that differs between otherwise identical runs.
std::string csv_header(bool with_timing = false);
std::string format_csv(const std::vector<ExperimentRecord>& records, bool with_timing = false);
void write_csv(const std::vector<ExperimentRecord>& records, const std::string& path, bool with_timing = false);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least squares of ln(value) against ln(n). Requires at least 3 points with
// n > 0 and value > 0 and at least two distinct n.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& series);

struct ExperimentSpec {
    std::string id;
    std::vector<std::int64_t> sizes;
    std::vector<std::uint64_t> seeds{0};
    std::optional<Rational> c;
};

// Registered experiment ids, in a fixed order.
const std::vector<std::string>& experiment_ids();

// Sizes are grid sides for the grid experiments, the radius m for
// annulus-scaling and monotone-gp-grid, and the box side for
// jarnik-scaling. annulus-scaling reports triples and the chord ratio of
// the whole annulus and descending pairs and size of its sector. Unknown ids and sizes above the desk-scale caps are
// rejected before any work starts.
std::vector<ExperimentRecord> run_experiment(const ExperimentSpec& spec);

// JSON: either one experiment object {"experiment": id, "sizes": [...],
// "seeds": [...], "c": "p/q"} or {"experiments": [ ... ]}.
std::vector<ExperimentSpec> parse_experiment_specs(std::string_view json_text);
std::vector<ExperimentSpec> read_experiment_specs(const std::string& path);

}  // namespace gpsel
