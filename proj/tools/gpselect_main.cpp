// Command-line front end over the C API.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpselect/gpselect.h"

namespace {

// Exit codes: 0 ok, 1 bad input or refused budget, 2 certification or internal failure.
struct CliFailure {
    int code;
    std::string message;
};

int exit_code(gps_status st) {
    switch (st) {
        case GPS_OK:
            return 0;
        case GPS_ERR_CERTIFICATION:
        case GPS_ERR_INTERNAL:
            return 2;
        default:
            return 1;
    }
}

void check(gps_status st) {
    if (st != GPS_OK) throw CliFailure{exit_code(st), gps_last_error()};
}

struct SetDeleter {
    void operator()(gps_pointset* p) const { gps_pointset_free(p); }
};
using Set = std::unique_ptr<gps_pointset, SetDeleter>;

struct StringDeleter {
    void operator()(char* p) const { gps_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

Set read_set(const std::string& path) {
    gps_pointset* p = nullptr;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        check(gps_pointset_parse(buf.str().c_str(), &p));
    } else {
        check(gps_pointset_read(path.c_str(), &p));
    }
    return Set(p);
}

std::string format_set(const gps_pointset* p) {
    char* text = nullptr;
    check(gps_pointset_format(p, &text));
    return OwnedString(text).get();
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << text)) throw CliFailure{1, "cannot write " + out};
}

std::string trace_line(const gps_trace& t, size_t size, std::optional<size_t> colors) {
    std::string s = "sampled,obstacles,deletions,size,colors_used\n";
    s += std::to_string(t.sampled) + ',' + std::to_string(t.obstacles) + ',' + std::to_string(t.deletions) + ',' +
         std::to_string(size) + ',' + (colors ? std::to_string(*colors) : std::string()) + '\n';
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact point-set selection toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", gps_version());

    // generate
    auto* gen = app.add_subcommand("generate", "Write a generated point set");
    std::string kind, gen_out, gen_in, frac_x = "1", alpha = "1/2", prob = "1/2";
    int64_t w = 0, h = 0, n = 0, m = 0;
    int k = 0, s = 0;
    uint64_t seed = 0;
    gen->add_option("--kind", kind, "grid|parabola|sidon|clusters|annulus|annulus-sector|jarnik|sample3d|bernoulli")
        ->required();
    gen->add_option("--width", w, "grid width");
    gen->add_option("--height", h, "grid height");
    gen->add_option("--n", n, "size for parabola, sidon and sample3d");
    gen->add_option("--k", k, "clusters per side");
    gen->add_option("--s", s, "points per cluster");
    gen->add_option("--m", m, "radius or box side");
    gen->add_option("--x", frac_x, "annulus width (rational)");
    gen->add_option("--alpha", alpha, "sample3d density exponent (rational)");
    gen->add_option("--prob", prob, "bernoulli keep probability (rational)");
    gen->add_option("--in", gen_in, "input set for bernoulli ('-' for stdin)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // count
    auto* cnt = app.add_subcommand("count", "Print line statistics and obstacle counts");
    std::string cnt_in = "-";
    cnt->add_option("--in", cnt_in, "point set ('-' for stdin)");

    // verify
    auto* ver = app.add_subcommand("verify", "Check a property; exit 3 when it does not hold");
    std::string ver_in = "-", ver_prop;
    ver->add_option("--in", ver_in, "point set ('-' for stdin)");
    ver->add_option("--property", ver_prop, "general-position|distinct-slopes|monotone")->required();

    // select
    auto* sel = app.add_subcommand("select", "Run a selection and certify the result");
    std::string method, sel_in = "-", sel_out, sel_prob, sel_c;
    int64_t sel_m = 0;
    uint64_t sel_seed = 0;
    sel->add_option("--method", method, "greedy-gp|sample-gp|monotone|monotone-gp|annulus|slopes|color")->required();
    sel->add_option("--in", sel_in, "point set ('-' for stdin); unused by annulus");
    sel->add_option("--m", sel_m, "annulus radius");
    sel->add_option("--seed", sel_seed, "random seed");
    sel->add_option("--prob", sel_prob, "sampling probability for sample-gp and monotone-gp");
    sel->add_option("--c", sel_c, "constant for annulus and slopes");
    sel->add_option("--out", sel_out, "selected set; the trace then goes to stdout instead of stderr");

    // oracle
    auto* orc = app.add_subcommand("oracle", "Exhaustive computations on small sets");
    std::string op, orc_in = "-", orc_out;
    int orc_s = 4;
    size_t max_points = 0;
    uint64_t max_nodes = 0;
    orc->add_option("--op", op, "triples|trapezoids|max-gp|max-monotone-gp|max-slopes|ramsey")->required();
    orc->add_option("--in", orc_in, "point set ('-' for stdin)");
    orc->add_option("--s", orc_s, "target size for ramsey");
    orc->add_option("--max-points", max_points, "size budget (0 for the default)");
    orc->add_option("--max-nodes", max_nodes, "search node budget (0 for the default)");
    orc->add_option("--out", orc_out, "output file for max-* (default stdout)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run an experiment spec and write CSV");
    std::string spec_path, exp_out;
    bool timing = false;
    exp->add_option("--spec", spec_path, "JSON experiment spec")->required()->check(CLI::ExistingFile);
    exp->add_option("--out", exp_out, "CSV file (default stdout)");
    exp->add_flag("--timing", timing, "append the elapsed_ms column");

    // fit
    auto* fit = app.add_subcommand("fit", "Fit a log-log exponent to CSV columns");
    std::string fit_in, fit_x = "n", fit_y = "subset_size", fit_exp;
    double log_power = 0.0;
    fit->add_option("--in", fit_in, "CSV produced by experiment")->required();
    fit->add_option("--x", fit_x, "abscissa column");
    fit->add_option("--y", fit_y, "value column; averaged over rows with equal abscissa");
    fit->add_option("--experiment", fit_exp, "only rows with this experiment_id");
    fit->add_option("--log-power", log_power, "divide each mean by (ln x)^p before fitting");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            gps_pointset* p = nullptr;
            if (kind == "grid")
                check(gps_generate_grid(w, h, &p));
            else if (kind == "parabola")
                check(gps_generate_parabola(n, &p));
            else if (kind == "sidon")
                check(gps_generate_sidon(n, &p));
            else if (kind == "clusters")
                check(gps_generate_clusters(k, s, seed, &p));
            else if (kind == "annulus")
                check(gps_generate_annulus(m, frac_x.c_str(), &p));
            else if (kind == "annulus-sector")
                check(gps_generate_annulus_sector(m, frac_x.c_str(), &p));
            else if (kind == "jarnik")
                check(gps_generate_jarnik(m, &p));
            else if (kind == "sample3d")
                check(gps_generate_sample3d(n, alpha.c_str(), seed, &p));
            else if (kind == "bernoulli") {
                if (gen_in.empty()) throw CliFailure{1, "bernoulli needs --in"};
                Set in = read_set(gen_in);
                check(gps_bernoulli_sample(in.get(), prob.c_str(), seed, &p));
            } else
                throw CliFailure{1, "unknown kind '" + kind + "'"};
            Set set(p);
            emit(format_set(set.get()), gen_out);
        } else if (*cnt) {
            Set in = read_set(cnt_in);
            gps_counts c{};
            check(gps_count(in.get(), &c));
            std::cout << c.n << ',' << c.s_max << ',' << c.triples << ',' << c.trapezoids << ',' << c.descending_pairs
                      << '\n';
        } else if (*ver) {
            static const std::map<std::string, gps_property> props = {
                {"general-position", GPS_PROP_GENERAL_POSITION},
                {"distinct-slopes", GPS_PROP_DISTINCT_SLOPES},
                {"monotone", GPS_PROP_MONOTONE}};
            const auto it = props.find(ver_prop);
            if (it == props.end()) throw CliFailure{1, "unknown property '" + ver_prop + "'"};
            Set in = read_set(ver_in);
            int holds = 0;
            check(gps_verify(in.get(), it->second, &holds));
            std::cout << (holds ? "true" : "false") << '\n';
            return holds ? 0 : 3;
        } else if (*sel) {
            gps_pointset* p = nullptr;
            gps_trace t{};
            std::optional<size_t> colors;
            std::string body;
            const char* c_text = sel_c.empty() ? nullptr : sel_c.c_str();
            if (method == "annulus") {
                check(gps_select_annulus(sel_m, sel_seed, c_text, &p, &t));
                Set out(p);
                body = format_set(out.get());
            } else if (method == "color") {
                Set in = read_set(sel_in);
                const size_t sz = gps_pointset_size(in.get());
                std::vector<uint32_t> color_of(sz);
                size_t used = 0;
                check(gps_color(in.get(), color_of.data(), &used));
                colors = used;
                t.sampled = sz;
                // one "# color i" block per class; the file still parses as the whole set
                std::vector<std::string> lines;
                {
                    std::istringstream all(format_set(in.get()));
                    std::string line;
                    while (std::getline(all, line)) lines.push_back(line);
                }
                for (size_t c = 0; c < used; ++c) {
                    body += "# color " + std::to_string(c) + '\n';
                    for (size_t i = 0; i < sz; ++i)
                        if (color_of[i] == c) body += lines[i] + '\n';
                }
            } else {
                static const std::map<std::string, gps_method> methods = {{"greedy-gp", GPS_SELECT_GREEDY_GP},
                                                                          {"sample-gp", GPS_SELECT_SAMPLE_GP},
                                                                          {"monotone", GPS_SELECT_MONOTONE},
                                                                          {"monotone-gp", GPS_SELECT_MONOTONE_GP},
                                                                          {"slopes", GPS_SELECT_SLOPES}};
                const auto it = methods.find(method);
                if (it == methods.end()) throw CliFailure{1, "unknown method '" + method + "'"};
                Set in = read_set(sel_in);
                check(gps_select(in.get(), it->second, sel_seed, sel_prob.empty() ? nullptr : sel_prob.c_str(), c_text,
                                 &p, &t, nullptr));
                Set out(p);
                body = format_set(out.get());
            }
            size_t size = 0;
            for (char ch : body)
                if (ch == '\n') ++size;
            if (colors) size -= *colors;
            const std::string trace = trace_line(t, size, colors);
            if (sel_out.empty()) {
                std::cout << body;
                std::cerr << trace;
            } else {
                emit(body, sel_out);
                std::cout << trace;
            }
        } else if (*orc) {
            Set in = read_set(orc_in);
            uint64_t v = 0;
            if (op == "triples") {
                check(gps_oracle_triples(in.get(), max_points, &v));
                std::cout << v << '\n';
            } else if (op == "trapezoids") {
                check(gps_oracle_trapezoids(in.get(), max_points, &v));
                std::cout << v << '\n';
            } else if (op == "ramsey") {
                int holds = 0;
                check(gps_oracle_ramsey(in.get(), orc_s, max_points, max_nodes, &holds));
                std::cout << (holds ? "true" : "false") << '\n';
            } else {
                static const std::map<std::string, gps_oracle_kind> kinds = {{"max-gp", GPS_ORACLE_MAX_GP},
                                                                             {"max-monotone-gp", GPS_ORACLE_MAX_MONOTONE_GP},
                                                                             {"max-slopes", GPS_ORACLE_MAX_SLOPES}};
                const auto it = kinds.find(op);
                if (it == kinds.end()) throw CliFailure{1, "unknown op '" + op + "'"};
                gps_pointset* p = nullptr;
                check(gps_oracle_max(in.get(), it->second, max_points, max_nodes, &p));
                Set best(p);
                emit(format_set(best.get()), orc_out);
            }
        } else if (*exp) {
            std::ifstream f(spec_path, std::ios::binary);
            std::ostringstream buf;
            buf << f.rdbuf();
            char* csv = nullptr;
            check(gps_experiment_run(buf.str().c_str(), timing ? 1 : 0, &csv));
            emit(OwnedString(csv).get(), exp_out);
        } else if (*fit) {
            std::ifstream f(fit_in);
            if (!f) throw CliFailure{1, "cannot open " + fit_in};
            std::string line;
            if (!std::getline(f, line)) throw CliFailure{1, fit_in + ": empty CSV"};
            const auto header = split_csv_line(line);
            auto column = [&](const std::string& name) {
                for (size_t i = 0; i < header.size(); ++i)
                    if (header[i] == name) return i;
                throw CliFailure{1, "no column '" + name + "'"};
            };
            const size_t xi = column(fit_x), yi = column(fit_y), ei = column("experiment_id");
            std::map<double, std::pair<double, int>> acc;
            while (std::getline(f, line)) {
                if (line.empty()) continue;
                const auto cells = split_csv_line(line);
                if (cells.size() != header.size()) throw CliFailure{1, "ragged CSV row"};
                if (!fit_exp.empty() && cells[ei] != fit_exp) continue;
                if (cells[xi].empty() || cells[yi].empty()) continue;
                auto& [sum, count] = acc[std::stod(cells[xi])];
                sum += std::stod(cells[yi]);
                ++count;
            }
            std::vector<double> xs, ys;
            for (const auto& [x, sc] : acc) {
                xs.push_back(x);
                ys.push_back(sc.first / sc.second / std::pow(std::log(x), log_power));
            }
            double slope = 0, intercept = 0, r2 = 0;
            check(gps_fit_exponent(xs.data(), ys.data(), xs.size(), &slope, &intercept, &r2));
            std::printf("slope,intercept,r_squared,points\n%.12g,%.12g,%.12g,%zu\n", slope, intercept, r2, xs.size());
        }
    } catch (const CliFailure& e) {
        std::cerr << "gpselect: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "gpselect: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
