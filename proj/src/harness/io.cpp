#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "gpselect/error.hpp"
#include "gpselect/harness.hpp"

namespace gpsel {

PointSet parse_point_set(std::string_view text) {
    std::vector<Point> pts;
    std::vector<std::size_t> line_of;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;

        std::istringstream in{std::string(line)};
        std::string fx, fy, extra;
        if (!(in >> fx >> fy) || (in >> extra))
            fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected two coordinates");
        try {
            pts.push_back(Point{Rational::parse(fx), Rational::parse(fy)});
        } catch (const Error& e) {
            fail(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
        }
        line_of.push_back(line_no);
    }
    // Report the later occurrence of a duplicate with its line number.
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (pts[order[i]] == pts[order[i - 1]]) {
            const std::size_t later = std::max(line_of[order[i]], line_of[order[i - 1]]);
            fail(ErrorKind::precondition, "line " + std::to_string(later) + ": duplicate point (" +
                                              pts[order[i]].x.to_string() + ", " + pts[order[i]].y.to_string() + ")");
        }
    return PointSet(std::move(pts));
}

PointSet read_point_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_point_set(buf.str());
}

std::string format_point_set(const PointSet& points) {
    std::string out;
    for (const Point& p : points) {
        out += p.x.to_string();
        out += ' ';
        out += p.y.to_string();
        out += '\n';
    }
    return out;
}

void write_point_set(const PointSet& points, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::io, "cannot write " + path);
    out << format_point_set(points);
    if (!out) fail(ErrorKind::io, "write failed for " + path);
}

namespace {

std::string decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

template <class T>
std::string field(const std::optional<T>& v) {
    if (!v) return {};
    if constexpr (std::is_same_v<T, Rational>)
        return decimal(v->to_double());
    else if constexpr (std::is_same_v<T, double>)
        return decimal(*v);
    else
        return std::to_string(*v);
}

}  // namespace

std::string csv_header(bool with_timing) {
    std::string h =
        "experiment_id,n,s,seed,alpha,x,prob,c,subset_size,triples,trapezoids,descending_pairs,colors_used,ratio";
    if (with_timing) h += ",elapsed_ms";
    return h;
}

std::string format_csv(const std::vector<ExperimentRecord>& records, bool with_timing) {
    std::string out = csv_header(with_timing) + "\n";
    for (const auto& r : records) {
        out += r.experiment_id + ',' + std::to_string(r.n) + ',' + std::to_string(r.s) + ',' + std::to_string(r.seed);
        for (const auto* q : {&r.alpha, &r.x, &r.prob, &r.c}) out += ',' + field(*q);
        for (const auto* q : {&r.subset_size, &r.triples, &r.trapezoids, &r.descending_pairs, &r.colors_used})
            out += ',' + field(*q);
        out += ',' + field(r.ratio);
        if (with_timing) out += ',' + decimal(r.elapsed_ms);
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<ExperimentRecord>& records, const std::string& path, bool with_timing) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::io, "cannot write " + path);
    out << format_csv(records, with_timing);
    if (!out) fail(ErrorKind::io, "write failed for " + path);
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& series) {
    require(series.size() >= 3, "fit needs at least 3 points");
    double sx = 0, sy = 0;
    for (const auto& [n, v] : series) {
        require(n > 0 && v > 0, "fit needs positive n and values");
        sx += std::log(n);
        sy += std::log(v);
    }
    const double k = static_cast<double>(series.size());
    const double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [n, v] : series) {
        const double dx = std::log(n) - mx, dy = std::log(v) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    require(sxx > 0, "fit needs at least two distinct n");
    FitResult f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

}  // namespace gpsel
