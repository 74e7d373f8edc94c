#include "render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "multiplicity.hpp"

namespace su3f {

namespace {

using nlohmann::json;

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json weight_json(Weight w) { return json::array({w.l1, w.l2}); }

json triple_json(const Triple& t) {
    return json::array({weight_json(t.lam), weight_json(t.mu), weight_json(t.nu)});
}

json level_json(int level) {
    if (level == kClassical) return json("inf");
    return json(level);
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fmt_point(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string subscript_entry(const DecompositionEntry& e) {
    std::string s = format_weight(e.nu) + "_{";
    for (size_t i = 0; i < e.levels.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.levels[i]);
    }
    return s + "}";
}

// New couplings at one level: nu in its window, ordered by (nu2, nu1).
std::vector<std::pair<Weight, std::int64_t>> new_couplings(
    const std::vector<std::pair<Weight, ThresholdPair>>& domain, int k) {
    std::vector<std::pair<Weight, std::int64_t>> out;
    for (const auto& [nu, th] : domain)
        if (th.k0_min <= k && k <= th.k0_max) out.push_back({nu, k - th.k0_min + 1});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::pair(x.first.l2, x.first.l1) < std::pair(y.first.l2, y.first.l1);
    });
    return out;
}

std::vector<std::pair<Weight, ThresholdPair>> classical_thresholds(Weight lam, Weight mu) {
    std::vector<std::pair<Weight, ThresholdPair>> out;
    for (const auto& [nu, mult] : wessleen_domain(lam, mu, kClassical)) {
        (void)mult;
        out.push_back({nu, thresholds({lam, mu, nu})});
    }
    return out;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "tsv") return Format::Tsv;
    if (name == "svg") return Format::Svg;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_product(const AnnotatedDecomposition& d, Format f) {
    switch (f) {
        case Format::Text: {
            std::string out = format_weight(d.lam) + " * " + format_weight(d.mu) +
                              " @ k=" + format_level(d.level) + "\n";
            for (size_t i = 0; i < d.entries.size(); ++i) {
                if (i) out += ", ";
                out += subscript_entry(d.entries[i]);
            }
            out += "\ndistinct: " + std::to_string(d.distinct()) +
                   "  total: " + std::to_string(d.total()) + "\n";
            return out;
        }
        case Format::Json: {
            json j;
            j["lam"] = weight_json(d.lam);
            j["mu"] = weight_json(d.mu);
            j["level"] = level_json(d.level);
            j["entries"] = json::array();
            for (const auto& e : d.entries)
                j["entries"].push_back({{"nu", weight_json(e.nu)}, {"levels", e.levels}});
            j["distinct"] = d.distinct();
            j["total"] = d.total();
            return dump_json(j);
        }
        case Format::Tsv: {
            std::string out = "nu1\tnu2\tk0_min\tk0_max\tmult\n";
            for (const auto& e : d.entries)
                out += std::to_string(e.nu.l1) + "\t" + std::to_string(e.nu.l2) + "\t" +
                       std::to_string(e.levels.front()) + "\t" +
                       std::to_string(e.levels.back()) + "\t" +
                       std::to_string(e.levels.size()) + "\n";
            return out;
        }
        case Format::Svg:
            throw std::invalid_argument("product: svg not supported");
    }
    throw std::logic_error("unreachable");
}

std::string render_matrix(const FusionTable& t, Weight w, Format f) {
    const IntMat& m = t.matrix(w);
    switch (f) {
        case Format::Text: {
            std::string out = "N_" + format_weight(w) + " @ k=" + std::to_string(t.level) + "\n";
            out += "alcove:";
            for (Weight a : t.weights) out += " " + format_weight(a);
            out += "\n";
            for (int i = 0; i < m.rows(); ++i) {
                for (int j = 0; j < m.cols(); ++j) {
                    if (j) out += " ";
                    out += std::to_string(m.at(i, j));
                }
                out += "\n";
            }
            return out;
        }
        case Format::Json: {
            json j;
            j["level"] = t.level;
            j["label"] = weight_json(w);
            j["alcove"] = json::array();
            for (Weight a : t.weights) j["alcove"].push_back(weight_json(a));
            j["entries"] = json::array();
            for (int i = 0; i < m.rows(); ++i) {
                json row = json::array();
                for (int jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj));
                j["entries"].push_back(row);
            }
            return dump_json(j);
        }
        case Format::Tsv: {
            std::string out;
            for (int i = 0; i < m.rows(); ++i) {
                for (int j2 = 0; j2 < m.cols(); ++j2) {
                    if (j2) out += "\t";
                    out += std::to_string(m.at(i, j2));
                }
                out += "\n";
            }
            return out;
        }
        case Format::Svg:
            throw std::invalid_argument("matrix: svg not supported");
    }
    throw std::logic_error("unreachable");
}

std::string render_table(const FusionTable& t, Format f) {
    switch (f) {
        case Format::Json: {
            json j;
            j["level"] = t.level;
            j["alcove"] = json::array();
            for (Weight a : t.weights) j["alcove"].push_back(weight_json(a));
            j["matrices"] = json::array();
            for (int i = 0; i < t.size(); ++i) {
                json entries = json::array();
                const IntMat& m = t.matrices[i];
                for (int r = 0; r < m.rows(); ++r) {
                    json row = json::array();
                    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
                    entries.push_back(row);
                }
                j["matrices"].push_back(
                    {{"label", weight_json(t.weights[i])}, {"entries", entries}});
            }
            return dump_json(j);
        }
        case Format::Tsv: {
            std::string out = "l1\tl2\tm1\tm2\tn1\tn2\tvalue\n";
            for (int i = 0; i < t.size(); ++i) {
                const IntMat& m = t.matrices[i];
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c)
                        if (m.at(r, c) != 0)
                            out += std::to_string(t.weights[i].l1) + "\t" +
                                   std::to_string(t.weights[i].l2) + "\t" +
                                   std::to_string(t.weights[r].l1) + "\t" +
                                   std::to_string(t.weights[r].l2) + "\t" +
                                   std::to_string(t.weights[c].l1) + "\t" +
                                   std::to_string(t.weights[c].l2) + "\t" +
                                   std::to_string(m.at(r, c)) + "\n";
            }
            return out;
        }
        case Format::Text:
        case Format::Svg:
            throw std::invalid_argument("table export supports json or tsv only");
    }
    throw std::logic_error("unreachable");
}

std::string render_thresholds(Weight lam, Weight mu, int level, Format f) {
    PairBounds pb = pair_bounds(lam, mu);
    const int k_end = level == kClassical ? pb.k_max : std::min(pb.k_max, level);
    auto domain = classical_thresholds(lam, mu);

    switch (f) {
        case Format::Text: {
            std::string out = format_weight(lam) + " * " + format_weight(mu) + "  k=" +
                              std::to_string(pb.k_min) + ".." + std::to_string(k_end) + "\n";
            for (int k = pb.k_min; k <= k_end; ++k) {
                auto rows = new_couplings(domain, k);
                out += "k=" + std::to_string(k) + "  new=" + std::to_string(rows.size()) + "  ";
                for (size_t i = 0; i < rows.size(); ++i) {
                    if (i) out += ", ";
                    out += format_weight(rows[i].first) + ":" + std::to_string(rows[i].second);
                }
                out += "\n";
            }
            return out;
        }
        case Format::Tsv: {
            std::string out = "k\tnu1\tnu2\trunning_mult\n";
            for (int k = pb.k_min; k <= k_end; ++k)
                for (const auto& [nu, mult] : new_couplings(domain, k))
                    out += std::to_string(k) + "\t" + std::to_string(nu.l1) + "\t" +
                           std::to_string(nu.l2) + "\t" + std::to_string(mult) + "\n";
            return out;
        }
        case Format::Json: {
            json j;
            j["lam"] = weight_json(lam);
            j["mu"] = weight_json(mu);
            j["k_min"] = pb.k_min;
            j["k_max"] = k_end;
            j["rows"] = json::array();
            for (int k = pb.k_min; k <= k_end; ++k) {
                auto rows = new_couplings(domain, k);
                json couplings = json::array();
                for (const auto& [nu, mult] : rows)
                    couplings.push_back({{"nu", weight_json(nu)}, {"mult", mult}});
                j["rows"].push_back({{"k", k},
                                     {"new", rows.size()},
                                     {"couplings", couplings}});
            }
            return dump_json(j);
        }
        case Format::Svg:
            throw std::invalid_argument("thresholds: svg not supported");
    }
    throw std::logic_error("unreachable");
}

std::string render_psi(const Triple& t, Format f) {
    Triple image = psi_triple(t);
    std::int64_t mult = fusion_coefficient(image, kClassical);
    const int kmin = mult > 0 ? k0_min(image) : -1;
    switch (f) {
        case Format::Text: {
            std::string out = format_triple(image) + "  mult=" + std::to_string(mult);
            if (mult > 0) out += "  k0_min=" + std::to_string(kmin);
            return out + "\n";
        }
        case Format::Json: {
            json j;
            j["input"] = triple_json(t);
            j["image"] = triple_json(image);
            j["mult"] = mult;
            if (mult > 0) j["k0_min"] = kmin;
            return dump_json(j);
        }
        case Format::Tsv:
        case Format::Svg:
            throw std::invalid_argument("psi: text or json only");
    }
    throw std::logic_error("unreachable");
}

std::string render_oblades(const Triple& t, Format f) {
    std::vector<OBlade> blades = enumerate_couplings(t);
    switch (f) {
        case Format::Text: {
            std::string out =
                format_triple(t) + "  couplings=" + std::to_string(blades.size()) + "\n";
            for (const OBlade& o : blades) {
                auto e = edges_of(o);
                out += "coords (a,b,c,d,e,f,g) = (";
                for (int i = 0; i < 7; ++i) {
                    if (i) out += ",";
                    out += std::to_string(o.coords[i]);
                }
                out += ")\nedges";
                for (size_t i = 0; i < e.size(); ++i)
                    out += std::string(" ") + kEdgeNames[i] + "=" + std::to_string(e[i]);
                out += "\nthreshold k0 = " + std::to_string(threshold(o)) + "\n";
            }
            return out;
        }
        case Format::Json: {
            json j;
            j["triple"] = triple_json(t);
            j["couplings"] = json::array();
            for (const OBlade& o : blades) {
                auto e = edges_of(o);
                json edges;
                for (size_t i = 0; i < e.size(); ++i) edges[kEdgeNames[i]] = e[i];
                j["couplings"].push_back({{"coords", o.coords},
                                          {"edges", edges},
                                          {"threshold", threshold(o)}});
            }
            return dump_json(j);
        }
        case Format::Tsv: {
            std::string out = "a\tb\tc\td\te\tf\tg";
            for (const char* n : kEdgeNames) out += std::string("\t") + n;
            out += "\tk0\n";
            for (const OBlade& o : blades) {
                for (int i = 0; i < 7; ++i) {
                    if (i) out += "\t";
                    out += std::to_string(o.coords[i]);
                }
                for (int v : edges_of(o)) out += "\t" + std::to_string(v);
                out += "\t" + std::to_string(threshold(o)) + "\n";
            }
            return out;
        }
        case Format::Svg: {
            // Concatenated documents, one per coupling.
            std::string out;
            for (const OBlade& o : blades) out += render_oblade_svg(o);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string render_oblade_svg(const OBlade& o) {
    const Triple t = weights_of(o);
    const auto e = edges_of(o);

    // Fixed star layout: outer triangle, centroid, spokes to side midpoints.
    const double tx = 200, ty = 70;    // top vertex
    const double lx = 60, ly = 330;    // bottom-left
    const double rx = 340, ry = 330;   // bottom-right
    const double cx = (tx + lx + rx) / 3, cy = (ty + ly + ry) / 3;

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
        "viewBox=\"0 0 400 400\">\n";
    svg += "<text x=\"200\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
           format_triple(t) + " k0=" + std::to_string(threshold(o)) + "</text>\n";
    svg += "<text x=\"200\" y=\"38\" text-anchor=\"middle\" font-size=\"12\">(a,b,c,d,e,f,g) = (";
    for (int i = 0; i < 7; ++i) {
        if (i) svg += ",";
        svg += std::to_string(o.coords[i]);
    }
    svg += ")</text>\n";

    struct Side {
        double x0, y0, x1, y1;
        int first_edge;  // index into kEdgeNames/edges: three labels per side
        double off_x, off_y;
    };
    const Side sides[3] = {
        {tx, ty, lx, ly, 0, -24, 0},  // left side: m-edges
        {tx, ty, rx, ry, 3, 24, 0},   // right side: n-edges
        {lx, ly, rx, ry, 6, 0, 20},   // bottom side: l-edges
    };
    for (const Side& s : sides) {
        // Three sub-segments with small gaps.
        const double frac[3][2] = {{0.00, 0.32}, {0.34, 0.66}, {0.68, 1.00}};
        for (int seg = 0; seg < 3; ++seg) {
            const double ax = s.x0 + (s.x1 - s.x0) * frac[seg][0];
            const double ay = s.y0 + (s.y1 - s.y0) * frac[seg][0];
            const double bx = s.x0 + (s.x1 - s.x0) * frac[seg][1];
            const double by = s.y0 + (s.y1 - s.y0) * frac[seg][1];
            svg += "<line x1=\"" + fmt_point(ax) + "\" y1=\"" + fmt_point(ay) + "\" x2=\"" +
                   fmt_point(bx) + "\" y2=\"" + fmt_point(by) +
                   "\" stroke=\"black\" stroke-width=\"2\"/>\n";
            const double mx = (ax + bx) / 2 + s.off_x;
            const double my = (ay + by) / 2 + s.off_y;
            svg += "<text x=\"" + fmt_point(mx) + "\" y=\"" + fmt_point(my) +
                   "\" text-anchor=\"middle\" font-size=\"11\">" +
                   kEdgeNames[s.first_edge + seg] + "=" +
                   std::to_string(e[s.first_edge + seg]) + "</text>\n";
        }
        // Spoke from the centroid to the side midpoint.
        const double mx = (s.x0 + s.x1) / 2, my = (s.y0 + s.y1) / 2;
        svg += "<line x1=\"" + fmt_point(cx) + "\" y1=\"" + fmt_point(cy) + "\" x2=\"" +
               fmt_point(mx) + "\" y2=\"" + fmt_point(my) +
               "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    }
    svg += "<circle cx=\"" + fmt_point(cx) + "\" cy=\"" + fmt_point(cy) +
           "\" r=\"3\" fill=\"black\"/>\n";
    svg += "</svg>\n";
    return svg;
}

std::string render_paths(int max_level, Format f) {
    switch (f) {
        case Format::Tsv:
        case Format::Text: {
            const char* sep = f == Format::Tsv ? "\t" : "  ";
            std::string out = std::string("k") + sep + "SX" + sep + "SGX" + sep + "SLambda" +
                              sep + "SK" + sep + "X_ok" + sep + "GX_ok" + sep + "Lambda_ok" +
                              sep + "K_ok" + sep + "LambdaU_ok\n";
            for (int k = 0; k <= max_level; ++k) {
                Su3Sums s = su3_sums(k);
                out += std::to_string(k) + sep + s.direct_X.str() + sep + s.direct_GX.str() +
                       sep + s.direct_Lambda.str() + sep + format_rational(s.direct_K) + sep +
                       std::to_string(int(s.x_ok)) + sep + std::to_string(int(s.gx_ok)) + sep +
                       std::to_string(int(s.lambda_ok)) + sep + std::to_string(int(s.k_ok)) +
                       sep + std::to_string(int(s.lambda_u_ok)) + "\n";
            }
            return out;
        }
        case Format::Json: {
            json rows = json::array();
            for (int k = 0; k <= max_level; ++k) {
                Su3Sums s = su3_sums(k);
                rows.push_back({{"k", k},
                                {"SX", s.direct_X.str()},
                                {"SGX", s.direct_GX.str()},
                                {"SLambda", s.direct_Lambda.str()},
                                {"SK", format_rational(s.direct_K)},
                                {"X_ok", s.x_ok},
                                {"GX_ok", s.gx_ok},
                                {"Lambda_ok", s.lambda_ok},
                                {"K_ok", s.k_ok},
                                {"LambdaU_ok", s.lambda_u_ok}});
            }
            json j;
            j["rows"] = rows;
            return dump_json(j);
        }
        case Format::Svg:
            throw std::invalid_argument("paths: svg not supported");
    }
    throw std::logic_error("unreachable");
}

std::string render_identity_report(const IdentityReport& r) {
    std::string out = "k=" + std::to_string(r.level) + ":";
    for (const IdentityCheck& c : r.checks)
        out += std::string(" ") + c.letter + " " + (c.ok ? "✓" : "✗");
    out += "\n";
    for (const IdentityCheck& c : r.checks)
        if (!c.ok) out += std::string("  ") + c.letter + ": " + c.detail + "\n";
    return out;
}

std::string render_verlinde(int level, Format f) {
    SMatrix s = s_matrix(level);
    SMatrixInvariants inv = s_matrix_invariants(s);
    VerlindeResult vr = verlinde_fusion(s);
    const bool matches = vr.table.matrices == build_table(level).matrices;
    RealColumnReport rc = real_column_checks(s);
    switch (f) {
        case Format::Text: {
            std::string out = "k=" + std::to_string(level) + ": dim=" +
                              std::to_string(s.size()) +
                              " unitarity_dev=" + fmt_double(inv.unitarity_dev) +
                              " symmetry_dev=" + fmt_double(inv.symmetry_dev) +
                              " verlinde_dev=" + fmt_double(vr.max_deviation) +
                              " matches_exact=" + (matches ? "yes" : "NO") +
                              " real_columns=" + (rc.ok() ? "ok" : "FAIL") + "\n";
            return out;
        }
        case Format::Json: {
            json j;
            j["k"] = level;
            j["dim"] = s.size();
            j["unitarity_dev"] = inv.unitarity_dev;
            j["symmetry_dev"] = inv.symmetry_dev;
            j["conjugation_dev"] = inv.conjugation_dev;
            j["s4_dev"] = inv.s4_dev;
            j["verlinde_dev"] = vr.max_deviation;
            j["matches_exact"] = matches;
            j["real_columns_ok"] = rc.ok();
            return dump_json(j);
        }
        case Format::Tsv:
        case Format::Svg:
            throw std::invalid_argument("verlinde: text or json only");
    }
    throw std::logic_error("unreachable");
}

}  // namespace su3f
