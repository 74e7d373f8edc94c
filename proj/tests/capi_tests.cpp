#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "su3fusion.h"

namespace {

// Owns a malloc'd string from the library.
struct Out {
    char* p = nullptr;
    ~Out() { su3f_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("version and error plumbing") {
    REQUIRE(su3f_version() != nullptr);
    CHECK(std::string(su3f_version()).find('.') != std::string::npos);
    su3f_string_free(nullptr);  // must be a no-op

    int64_t v = 0;
    CHECK(su3f_fusion_coefficient(-1, 0, 0, 0, 0, 0, SU3F_LEVEL_INF, &v) == SU3F_EINVAL);
    CHECK(std::string(su3f_last_error()).size() > 0);
    // A successful call clears the message.
    CHECK(su3f_fusion_coefficient(1, 0, 0, 1, 0, 0, SU3F_LEVEL_INF, &v) == SU3F_OK);
    CHECK(std::string(su3f_last_error()).empty());
    CHECK(v == 1);
}

TEST_CASE("coefficients and thresholds") {
    int64_t v = 0;
    CHECK(su3f_fusion_coefficient(9, 5, 6, 2, 8, 6, SU3F_LEVEL_INF, &v) == SU3F_OK);
    CHECK(v == 3);
    CHECK(su3f_fusion_coefficient(9, 5, 6, 2, 8, 6, 16, &v) == SU3F_OK);
    CHECK(v == 2);
    CHECK(su3f_fusion_coefficient(9, 5, 6, 2, 8, 6, 14, &v) == SU3F_OK);
    CHECK(v == 0);
    CHECK(su3f_fusion_coefficient(1, 0, 0, 0, 0, 0, SU3F_LEVEL_INF, &v) == SU3F_OK);
    CHECK(v == 0);
    CHECK(su3f_fusion_coefficient(1, 0, 0, 1, 0, 0, -5, &v) == SU3F_EINVAL);

    int lo = 0, hi = 0;
    CHECK(su3f_thresholds(9, 5, 6, 2, 8, 6, &lo, &hi) == SU3F_OK);
    CHECK(lo == 15);
    CHECK(hi == 17);
    // Not admissible: outside the mathematical domain.
    CHECK(su3f_thresholds(1, 0, 0, 0, 0, 0, &lo, &hi) == SU3F_EDOMAIN);
}

TEST_CASE("table lifecycle") {
    su3f_table* t = nullptr;
    REQUIRE(su3f_table_create(2, &t) == SU3F_OK);
    REQUIRE(t != nullptr);
    CHECK(su3f_table_size(t) == 6);

    char* violation = reinterpret_cast<char*>(1);
    CHECK(su3f_table_verify(t, &violation) == SU3F_OK);
    CHECK(violation == nullptr);
    CHECK(su3f_table_verify(t, nullptr) == SU3F_OK);

    Out j;
    CHECK(su3f_table_render(t, SU3F_JSON, &j.p) == SU3F_OK);
    CHECK(j.str().find("\"matrices\"") != std::string::npos);

    Out m;
    CHECK(su3f_table_matrix_render(t, 1, 0, SU3F_TEXT, &m.p) == SU3F_OK);
    CHECK(m.str().find("N_(1,0) @ k=2") == 0);

    Out bad;
    CHECK(su3f_table_matrix_render(t, 3, 0, SU3F_TEXT, &bad.p) == SU3F_EINVAL);
    CHECK(bad.p == nullptr);

    su3f_table_destroy(t);
    su3f_table_destroy(nullptr);  // no-op

    su3f_table* none = nullptr;
    CHECK(su3f_table_create(-3, &none) == SU3F_EINVAL);
    CHECK(none == nullptr);
}

TEST_CASE("product rendering") {
    Out a;
    REQUIRE(su3f_product_render(SU3F_LEVEL_INF, 9, 5, 6, 2, 0, SU3F_TEXT, &a.p) == SU3F_OK);
    CHECK(a.str().find("(9,5) * (6,2) @ k=inf\n") == 0);
    CHECK(a.str().find("distinct: 51  total: 95\n") != std::string::npos);

    // Conjugating the right factor first is the same as passing it directly.
    Out b, c;
    REQUIRE(su3f_product_render(SU3F_LEVEL_INF, 9, 5, 2, 6, 1, SU3F_TEXT, &b.p) == SU3F_OK);
    REQUIRE(su3f_product_render(SU3F_LEVEL_INF, 9, 5, 6, 2, 0, SU3F_TEXT, &c.p) == SU3F_OK);
    CHECK(b.str() == c.str());

    Out bad;
    CHECK(su3f_product_render(1, 1, 1, 0, 2, 0, SU3F_TEXT, &bad.p) == SU3F_EINVAL);
}

TEST_CASE("thresholds psi and pictographs") {
    Out th;
    REQUIRE(su3f_thresholds_table_render(9, 5, 6, 2, SU3F_LEVEL_INF, SU3F_TEXT, &th.p) ==
            SU3F_OK);
    CHECK(th.str().find("(9,5) * (6,2)  k=14..22\n") == 0);
    CHECK(count_lines(th.str()) == 10);

    Out psi;
    REQUIRE(su3f_psi_render(9, 5, 6, 2, 10, 5, SU3F_TEXT, &psi.p) == SU3F_OK);
    CHECK(psi.str() == "((8,6),(5,3);(11,4))  mult=3  k0_min=16\n");

    int64_t n = 0;
    REQUIRE(su3f_oblades_count(9, 5, 6, 2, 10, 5, &n) == SU3F_OK);
    CHECK(n == 3);

    Out ob;
    REQUIRE(su3f_oblades_render(9, 5, 6, 2, 10, 5, SU3F_TEXT, &ob.p) == SU3F_OK);
    CHECK(ob.str().find("couplings=3\n") != std::string::npos);

    Out svg;
    REQUIRE(su3f_oblade_render(9, 5, 6, 2, 10, 5, 2, &svg.p) == SU3F_OK);
    CHECK(svg.str().find("k0=18") != std::string::npos);
    Out oob;
    CHECK(su3f_oblade_render(9, 5, 6, 2, 10, 5, 3, &oob.p) == SU3F_EINVAL);
}

TEST_CASE("paths verlinde and identity reports") {
    Out paths;
    REQUIRE(su3f_paths_table_render(2, SU3F_TSV, &paths.p) == SU3F_OK);
    CHECK(count_lines(paths.str()) == 4);
    CHECK(paths.str().find("0\t1\t0\t6\t1/6") != std::string::npos);
    Out badp;
    CHECK(su3f_paths_table_render(-1, SU3F_TSV, &badp.p) == SU3F_EINVAL);

    Out ver;
    REQUIRE(su3f_verlinde_render(1, SU3F_TEXT, &ver.p) == SU3F_OK);
    CHECK(ver.str().find("k=1: dim=3") == 0);
    CHECK(ver.str().find("matches_exact=yes") != std::string::npos);

    Out good;
    REQUIRE(su3f_genfun_verify_render(2, 0, &good.p) == SU3F_OK);
    CHECK(good.str().find("k=2:") == 0);
    Out fault;
    CHECK(su3f_genfun_verify_render(2, 1, &fault.p) == SU3F_EVERIFY);
    CHECK(fault.str().find("✗") != std::string::npos);
    CHECK(std::string(su3f_last_error()).size() > 0);
}

TEST_CASE("verify suites") {
    Out sums;
    REQUIRE(su3f_verify_suite("sums", 3, -1, 0, &sums.p) == SU3F_OK);
    CHECK(count_lines(sums.str()) == 4);
    CHECK(sums.str().find("k=0: ΣX ✓ ΣGX ✓ ΣΛ ✓ ΣK ✓\n") == 0);

    Out bad;
    CHECK(su3f_verify_suite("nonsense", -1, -1, 0, &bad.p) == SU3F_EINVAL);

    Out fault;
    CHECK(su3f_verify_suite("genfun", 2, -1, 1, &fault.p) == SU3F_EVERIFY);
    CHECK(fault.str().size() > 0);
}
