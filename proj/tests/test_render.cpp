#include "render.hpp"

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "doctest.h"
#include "fusion_table.hpp"
#include "genfun.hpp"
#include "oblade.hpp"

using namespace su3f;

namespace {

const Triple kWorked{{9, 5}, {6, 2}, {10, 5}};

// Count occurrences of a substring.
int count_of(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

bool json_round_trips(const std::string& s) {
    return nlohmann::json::parse(s).dump(2) + "\n" == s;
}

}  // namespace

TEST_CASE("format names") {
    CHECK(parse_format("text") == Format::Text);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("tsv") == Format::Tsv);
    CHECK(parse_format("svg") == Format::Svg);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("product rendering") {
    const AnnotatedDecomposition d = product(kClassical, {1, 1}, {0, 2});
    CHECK(render_product(d, Format::Text) ==
          "(1,1) * (0,2) @ k=inf\n"
          "(1,0)_{2}, (2,1)_{3}, (0,2)_{3}, (1,3)_{4}\n"
          "distinct: 4  total: 4\n");
    CHECK(render_product(d, Format::Tsv) ==
          "nu1\tnu2\tk0_min\tk0_max\tmult\n"
          "1\t0\t2\t2\t1\n"
          "2\t1\t3\t3\t1\n"
          "0\t2\t3\t3\t1\n"
          "1\t3\t4\t4\t1\n");
    const std::string j = render_product(d, Format::Json);
    CHECK(json_round_trips(j));
    const auto parsed = nlohmann::json::parse(j);
    CHECK(parsed["level"] == "inf");
    CHECK(parsed["total"] == 4);
    CHECK(parsed["entries"][0]["nu"] == nlohmann::json::array({1, 0}));
    CHECK_THROWS_AS(render_product(d, Format::Svg), std::invalid_argument);

    // A level-capped product names its level.
    const AnnotatedDecomposition c = product(3, {1, 1}, {0, 2});
    const std::string t = render_product(c, Format::Text);
    CHECK(t.substr(0, 22) == "(1,1) * (0,2) @ k=3\n(1");
}

TEST_CASE("matrix rendering at level 1") {
    const FusionTable t = build_table(1);
    CHECK(render_matrix(t, {1, 0}, Format::Text) ==
          "N_(1,0) @ k=1\n"
          "alcove: (0,0) (0,1) (1,0)\n"
          "0 0 1\n"
          "1 0 0\n"
          "0 1 0\n");
    CHECK(render_matrix(t, {1, 0}, Format::Tsv) == "0\t0\t1\n1\t0\t0\n0\t1\t0\n");
    const std::string j = render_matrix(t, {1, 0}, Format::Json);
    CHECK(json_round_trips(j));
    const auto parsed = nlohmann::json::parse(j);
    CHECK(parsed["level"] == 1);
    CHECK(parsed["entries"][2][1] == 1);
}

TEST_CASE("whole-table rendering") {
    const FusionTable t = build_table(1);
    const std::string j = render_table(t, Format::Json);
    CHECK(json_round_trips(j));
    CHECK(nlohmann::json::parse(j)["matrices"].size() == 3);
    const std::string tsv = render_table(t, Format::Tsv);
    CHECK(tsv.substr(0, 27) == "l1\tl2\tm1\tm2\tn1\tn2\tvalue\n0\t0");
    CHECK(count_of(tsv, "\n") == 10);  // header + 3x3 permutation entries
    CHECK_THROWS_AS(render_table(t, Format::Text), std::invalid_argument);
}

TEST_CASE("threshold table of the large pair") {
    const std::string text = render_thresholds({9, 5}, {6, 2}, kClassical, Format::Text);
    CHECK(text.substr(0, 24) == "(9,5) * (6,2)  k=14..22\n");
    CHECK(count_of(text, "\n") == 10);  // header + nine levels
    CHECK(text.find("k=14  new=15  (6,1):1, (7,2):1, (5,3):1, ") != std::string::npos);
    CHECK(text.find("k=22  new=1  (15,7):1\n") != std::string::npos);
    // The per-level new counts total the tensor multiplicity sum.
    const int expected_new[] = {15, 17, 17, 15, 12, 9, 6, 3, 1};
    int sum = 0;
    for (int p = 0; p < 9; ++p) {
        const std::string tag = "k=" + std::to_string(14 + p) +
                                "  new=" + std::to_string(expected_new[p]) + "  ";
        CAPTURE(p);
        CHECK(text.find(tag) != std::string::npos);
        sum += expected_new[p];
    }
    CHECK(sum == 95);

    const std::string tsv = render_thresholds({9, 5}, {6, 2}, kClassical, Format::Tsv);
    CHECK(tsv.substr(0, 25) == "k\tnu1\tnu2\trunning_mult\n14");
    CHECK(count_of(tsv, "\n") == 96);  // header + one row per active coupling

    const std::string j = render_thresholds({9, 5}, {6, 2}, kClassical, Format::Json);
    CHECK(json_round_trips(j));
    CHECK(nlohmann::json::parse(j)["rows"].size() == 9);

    // Capping the level trims the tail of the table.
    const std::string capped = render_thresholds({9, 5}, {6, 2}, 16, Format::Text);
    CHECK(capped.substr(0, 24) == "(9,5) * (6,2)  k=14..16\n");
    CHECK(count_of(capped, "\n") == 4);
}

TEST_CASE("psi rendering") {
    CHECK(render_psi(kWorked, Format::Text) ==
          "((8,6),(5,3);(11,4))  mult=3  k0_min=16\n");
    const std::string j = render_psi(kWorked, Format::Json);
    CHECK(json_round_trips(j));
    const auto parsed = nlohmann::json::parse(j);
    CHECK(parsed["mult"] == 3);
    CHECK(parsed["k0_min"] == 16);
    CHECK(parsed["image"][2] == nlohmann::json::array({11, 4}));
    CHECK_THROWS_AS(render_psi(kWorked, Format::Tsv), std::invalid_argument);
}

TEST_CASE("pictograph rendering") {
    const std::string text = render_oblades(kWorked, Format::Text);
    CHECK(text.substr(0, 34) == "((9,5),(6,2);(10,5))  couplings=3\n");
    CHECK(text.find("coords (a,b,c,d,e,f,g) = (1,2,0,4,6,4,1)\n") != std::string::npos);
    CHECK(text.find("edges m12=5 m23=4 m13=6 n12=3 n23=2 n13=1 l12=5 l23=4 l13=0\n") !=
          std::string::npos);
    CHECK(text.find("threshold k0 = 16\n") != std::string::npos);
    CHECK(text.find("threshold k0 = 17\n") != std::string::npos);
    CHECK(text.find("threshold k0 = 18\n") != std::string::npos);

    const std::string j = render_oblades(kWorked, Format::Json);
    CHECK(json_round_trips(j));
    const auto parsed = nlohmann::json::parse(j);
    REQUIRE(parsed["couplings"].size() == 3);
    CHECK(parsed["couplings"][0]["edges"]["m12"] == 5);
    CHECK(parsed["couplings"][2]["threshold"] == 18);

    const std::string tsv = render_oblades(kWorked, Format::Tsv);
    CHECK(tsv.find("a\tb\tc\td\te\tf\tg\tm12") == 0);
    CHECK(count_of(tsv, "\n") == 4);
}

TEST_CASE("pictograph svg") {
    const std::string svg = render_oblades(kWorked, Format::Svg);
    CHECK(count_of(svg, "<svg ") == 3);
    CHECK(count_of(svg, "</svg>") == 3);
    CHECK(svg.find("k0=16") != std::string::npos);
    CHECK(svg.find("k0=17") != std::string::npos);
    CHECK(svg.find("k0=18") != std::string::npos);
    // Deterministic output.
    CHECK(svg == render_oblades(kWorked, Format::Svg));

    const OBlade first = enumerate_couplings(kWorked).front();
    const std::string one = render_oblade_svg(first);
    CHECK(one.find("((9,5),(6,2);(10,5)) k0=16") != std::string::npos);
    CHECK(one.find(">m12=5<") != std::string::npos);
    CHECK(one.find(">l13=0<") != std::string::npos);
    CHECK(one.find("viewBox=\"0 0 400 400\"") != std::string::npos);
}

TEST_CASE("path-sum rendering") {
    const std::string tsv = render_paths(1, Format::Tsv);
    CHECK(tsv ==
          "k\tSX\tSGX\tSLambda\tSK\tX_ok\tGX_ok\tLambda_ok\tK_ok\tLambdaU_ok\n"
          "0\t1\t0\t6\t1/6\t1\t1\t1\t1\t1\n"
          "1\t9\t9\t36\t3/4\t1\t1\t1\t1\t1\n");
    const std::string text = render_paths(0, Format::Text);
    CHECK(text.find("k  SX  SGX  SLambda  SK") == 0);
    CHECK(text.find("0  1  0  6  1/6  1  1  1  1  1\n") != std::string::npos);
    CHECK(json_round_trips(render_paths(2, Format::Json)));
}

TEST_CASE("identity report rendering") {
    CHECK(render_identity_report(verify_identities(1)) ==
          "k=1: a ✓ b ✓ c ✓ d ✓ e ✓ f ✓ g ✓ h ✓\n");
    const std::string bad = render_identity_report(verify_identities(2, true));
    CHECK(bad.find("✗") != std::string::npos);
    CHECK(bad.find("\n  ") != std::string::npos);
}

TEST_CASE("verlinde rendering") {
    const std::string text = render_verlinde(2, Format::Text);
    CHECK(text.find("k=2: dim=6 unitarity_dev=") == 0);
    CHECK(text.find(" matches_exact=yes real_columns=ok\n") != std::string::npos);
    const std::string j = render_verlinde(2, Format::Json);
    CHECK(json_round_trips(j));
    const auto parsed = nlohmann::json::parse(j);
    CHECK(parsed["matches_exact"] == true);
    CHECK(parsed["dim"] == 6);
    CHECK_THROWS_AS(render_verlinde(2, Format::Tsv), std::invalid_argument);
}
