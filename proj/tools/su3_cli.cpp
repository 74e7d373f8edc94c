#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "su3fusion.h"

namespace {

bool parse_int_full(std::string_view sv, int& v) {
    const char* end = sv.data() + sv.size();
    const auto [p, ec] = std::from_chars(sv.data(), end, v);
    return ec == std::errc() && p == end;
}

// "l1,l2"
bool parse_weight_str(const std::string& s, int& a, int& b) {
    const size_t comma = s.find(',');
    if (comma == std::string::npos) return false;
    const std::string_view sv(s);
    return parse_int_full(sv.substr(0, comma), a) && parse_int_full(sv.substr(comma + 1), b);
}

// "l1,l2/m1,m2/n1,n2"
bool parse_triple_str(const std::string& s, int w[6]) {
    const size_t first = s.find('/');
    if (first == std::string::npos) return false;
    const size_t second = s.find('/', first + 1);
    if (second == std::string::npos || s.find('/', second + 1) != std::string::npos)
        return false;
    return parse_weight_str(s.substr(0, first), w[0], w[1]) &&
           parse_weight_str(s.substr(first + 1, second - first - 1), w[2], w[3]) &&
           parse_weight_str(s.substr(second + 1), w[4], w[5]);
}

// non-negative integer or "inf"
bool parse_level_str(const std::string& s, int& level) {
    if (s == "inf") {
        level = SU3F_LEVEL_INF;
        return true;
    }
    return parse_int_full(s, level) && level >= 0;
}

bool parse_format_str(const std::string& s, su3f_format& f) {
    if (s == "text") f = SU3F_TEXT;
    else if (s == "json") f = SU3F_JSON;
    else if (s == "tsv") f = SU3F_TSV;
    else if (s == "svg") f = SU3F_SVG;
    else return false;
    return true;
}

int usage_error(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return 2;
}

// Prints the rendered string (when present) and maps the status to the
// process exit code: 0 success, 1 verification failure, 2 bad input.
int finish(su3f_status st, char* out) {
    if (out) {
        std::fputs(out, stdout);
        su3f_string_free(out);
    }
    if (st == SU3F_OK) return 0;
    if (st == SU3F_EVERIFY) return 1;
    std::fprintf(stderr, "error: %s\n", su3f_last_error());
    return 2;
}

struct Defaults {
    int max_level = -1;
    int max_weight = -1;
};

bool load_config(const std::string& path, Defaults& d, std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot open config file: " + path;
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const size_t end = line.find_last_not_of(" \t\r");
        const std::string trimmed = line.substr(begin, end - begin + 1);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        const size_t eq = trimmed.find('=');
        if (eq == std::string::npos) {
            err = path + ":" + std::to_string(lineno) + ": expected key=value";
            return false;
        }
        const std::string key = trimmed.substr(0, eq);
        const std::string value = trimmed.substr(eq + 1);
        int v = 0;
        if (!parse_int_full(value, v)) {
            err = path + ":" + std::to_string(lineno) + ": value is not an integer";
            return false;
        }
        if (key == "default_max_level") d.max_level = v;
        else if (key == "default_max_weight") d.max_weight = v;
        else {
            err = path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'";
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine su(3) fusion toolkit"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value file with default bounds");

    std::string lhs, rhs, level_str = "inf", weight_str, triple_str, format_str = "text";
    std::string suite = "all", svg_dir;
    int level = 0, max_level = -1, max_weight = -1, index = 0;
    bool conjugate_rhs = false, whole_table = false, seed_fault = false;

    CLI::App* product = app.add_subcommand("product", "Decompose a product of weights");
    product->add_option("--level", level_str, "level, or inf for the tensor product");
    product->add_option("--lhs", lhs, "left weight l1,l2")->required();
    product->add_option("--rhs", rhs, "right weight l1,l2")->required();
    product->add_flag("--conjugate-rhs", conjugate_rhs, "conjugate the right weight first");
    product->add_option("--format", format_str, "text|json|tsv");

    CLI::App* matrix = app.add_subcommand("matrix", "Fusion matrices at a level");
    matrix->add_option("--level", level, "level")->required();
    matrix->add_option("--weight", weight_str, "one weight l1,l2");
    matrix->add_flag("--all", whole_table, "export the whole table");
    matrix->add_option("--format", format_str, "text|json|tsv");

    CLI::App* genpoly =
        app.add_subcommand("genpoly-verify", "Polynomial-matrix identities at a level");
    genpoly->add_option("--level", level, "level")->required();
    genpoly->add_flag("--seed-fault", seed_fault, "inject a generator swap (negative control)");

    CLI::App* paths = app.add_subcommand("paths", "Entry sums against their closed formulas");
    paths->add_option("--max-level", max_level, "last level (default 12)");
    paths->add_option("--format", format_str, "text|json|tsv");

    CLI::App* thresholds =
        app.add_subcommand("thresholds", "Per-level new couplings of a pair");
    thresholds->add_option("--lhs", lhs, "left weight l1,l2")->required();
    thresholds->add_option("--rhs", rhs, "right weight l1,l2")->required();
    thresholds->add_option("--level", level_str, "cap the listing at this level");
    thresholds->add_option("--format", format_str, "text|json|tsv");

    CLI::App* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("--suite", suite, "tables|genfun|sums|modular|propP|oblades|all");
    verify->add_option("--max-level", max_level, "override the suite's level bound");
    verify->add_option("--max-weight", max_weight, "override the suite's weight bound");
    verify->add_flag("--seed-fault", seed_fault, "inject a fault (negative control)");

    CLI::App* psi = app.add_subcommand("psi", "Involution image of a triple");
    psi->add_option("--triple", triple_str, "l1,l2/m1,m2/n1,n2")->required();
    psi->add_option("--format", format_str, "text|json");

    CLI::App* oblades = app.add_subcommand("oblades", "Coupling pictographs of a triple");
    oblades->add_option("--triple", triple_str, "l1,l2/m1,m2/n1,n2")->required();
    oblades->add_option("--format", format_str, "text|json|tsv|svg");
    oblades->add_option("--svg", svg_dir, "also write one SVG file per coupling here");
    oblades->add_option("--index", index, "with --format svg: render only this pictograph");

    CLI::App* verlinde = app.add_subcommand("verlinde", "Numeric-oracle report at a level");
    verlinde->add_option("--level", level, "level")->required();
    verlinde->add_option("--format", format_str, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Defaults defaults;
    if (!config_path.empty()) {
        std::string err;
        if (!load_config(config_path, defaults, err)) return usage_error(err);
    }

    su3f_format format = SU3F_TEXT;
    if (!parse_format_str(format_str, format)) return usage_error("unknown format: " + format_str);
    char* out = nullptr;

    if (*product) {
        int a, b, c, d;
        if (!parse_weight_str(lhs, a, b) || !parse_weight_str(rhs, c, d))
            return usage_error("weights must be given as l1,l2");
        int lv;
        if (!parse_level_str(level_str, lv)) return usage_error("bad level: " + level_str);
        const su3f_status st =
            su3f_product_render(lv, a, b, c, d, conjugate_rhs ? 1 : 0, format, &out);
        return finish(st, out);
    }

    if (*matrix) {
        if (whole_table == !weight_str.empty())
            return usage_error("matrix needs exactly one of --weight or --all");
        su3f_table* table = nullptr;
        const su3f_status st = su3f_table_create(level, &table);
        if (st != SU3F_OK) return finish(st, nullptr);
        su3f_status rst;
        if (whole_table) {
            rst = su3f_table_render(table, format, &out);
        } else {
            int a, b;
            if (!parse_weight_str(weight_str, a, b)) {
                su3f_table_destroy(table);
                return usage_error("weights must be given as l1,l2");
            }
            rst = su3f_table_matrix_render(table, a, b, format, &out);
        }
        su3f_table_destroy(table);
        return finish(rst, out);
    }

    if (*genpoly) {
        const su3f_status st = su3f_genfun_verify_render(level, seed_fault ? 1 : 0, &out);
        return finish(st, out);
    }

    if (*paths) {
        int ml = max_level;
        if (ml < 0) ml = defaults.max_level;
        if (ml < 0) ml = 12;
        const su3f_status st = su3f_paths_table_render(ml, format, &out);
        return finish(st, out);
    }

    if (*thresholds) {
        int a, b, c, d;
        if (!parse_weight_str(lhs, a, b) || !parse_weight_str(rhs, c, d))
            return usage_error("weights must be given as l1,l2");
        int lv;
        if (!parse_level_str(level_str, lv)) return usage_error("bad level: " + level_str);
        const su3f_status st = su3f_thresholds_table_render(a, b, c, d, lv, format, &out);
        return finish(st, out);
    }

    if (*verify) {
        int ml = max_level >= 0 ? max_level : defaults.max_level;
        int mw = max_weight >= 0 ? max_weight : defaults.max_weight;
        const su3f_status st =
            su3f_verify_suite(suite.c_str(), ml, mw, seed_fault ? 1u : 0u, &out);
        return finish(st, out);
    }

    if (*psi) {
        int w[6];
        if (!parse_triple_str(triple_str, w))
            return usage_error("triples must be given as l1,l2/m1,m2/n1,n2");
        const su3f_status st = su3f_psi_render(w[0], w[1], w[2], w[3], w[4], w[5], format, &out);
        return finish(st, out);
    }

    if (*oblades) {
        int w[6];
        if (!parse_triple_str(triple_str, w))
            return usage_error("triples must be given as l1,l2/m1,m2/n1,n2");
        if (format == SU3F_SVG && oblades->count("--index") > 0) {
            const su3f_status st =
                su3f_oblade_render(w[0], w[1], w[2], w[3], w[4], w[5], index, &out);
            return finish(st, out);
        }
        if (!svg_dir.empty()) {
            int64_t count = 0;
            su3f_status st = su3f_oblades_count(w[0], w[1], w[2], w[3], w[4], w[5], &count);
            if (st != SU3F_OK) return finish(st, nullptr);
            std::error_code ec;
            std::filesystem::create_directories(svg_dir, ec);
            if (ec) return usage_error("cannot create directory: " + svg_dir);
            for (int i = 0; i < count; ++i) {
                char* doc = nullptr;
                st = su3f_oblade_render(w[0], w[1], w[2], w[3], w[4], w[5], i, &doc);
                if (st != SU3F_OK) return finish(st, nullptr);
                const std::filesystem::path file =
                    std::filesystem::path(svg_dir) / ("oblade_" + std::to_string(i + 1) + ".svg");
                std::ofstream f(file);
                f << doc;
                su3f_string_free(doc);
                if (!f) return usage_error("cannot write " + file.string());
            }
        }
        const su3f_status st = su3f_oblades_render(w[0], w[1], w[2], w[3], w[4], w[5], format, &out);
        return finish(st, out);
    }

    if (*verlinde) {
        const su3f_status st = su3f_verlinde_render(level, format, &out);
        return finish(st, out);
    }

    return usage_error("no subcommand given");
}
