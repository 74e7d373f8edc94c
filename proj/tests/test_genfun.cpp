#include "genfun.hpp"

#include "doctest.h"

using namespace su3f;

TEST_CASE("generating matrix at level 1") {
    const FusionTable t = build_table(1);
    const GenFun g = build_genfun(t);
    CHECK(g.level == 1);
    CHECK(g.h == 4);
    // X = I + s G + t G^T.
    REQUIRE(g.X.coeff({0, 0}) != nullptr);
    CHECK(*g.X.coeff({0, 0}) == IntMat::identity(3));
    REQUIRE(g.X.coeff({1, 0}) != nullptr);
    CHECK(*g.X.coeff({1, 0}) == g.G);
    REQUIRE(g.X.coeff({0, 1}) != nullptr);
    CHECK(*g.X.coeff({0, 1}) == g.GT);
    CHECK(g.X.terms().size() == 3);
    CHECK(g.GT == g.G.transposed());
    CHECK(g.P == g.G);
    CHECK(g.P2 == g.G * g.G);
    // Boundary slices.
    CHECK(g.L1.coeff({0, 1}) == nullptr);
    CHECK(g.L2.coeff({1, 0}) == nullptr);
    CHECK(g.L3.terms().size() == 2);
}

TEST_CASE("level 0 collapses to scalars") {
    const GenFun g = build_genfun(build_table(0));
    CHECK(g.G.rows() == 1);
    CHECK(g.G.is_zero());
    CHECK(g.P == IntMat::identity(1));
    const IdentityReport r = verify_identities(0);
    CHECK(r.all_ok);
}

TEST_CASE("the eight identities hold at small levels") {
    for (int k = 1; k <= 4; ++k) {
        const IdentityReport r = verify_identities(k);
        CHECK(r.level == k);
        REQUIRE(r.checks.size() == 8);
        for (int i = 0; i < 8; ++i) {
            CAPTURE(k);
            CAPTURE(i);
            CHECK(r.checks[i].letter == static_cast<char>('a' + i));
            CHECK(r.checks[i].ok);
        }
        CHECK(r.all_ok);
        CHECK(r.first_failure.empty());
    }
}

TEST_CASE("a seeded fault is reported") {
    const IdentityReport r = verify_identities(2, true);
    CHECK_FALSE(r.all_ok);
    CHECK_FALSE(r.first_failure.empty());
    // The report names a letter.
    CHECK(r.first_failure[1] == ':');
    CHECK(r.first_failure[0] >= 'a');
    CHECK(r.first_failure[0] <= 'h');
}

TEST_CASE("lemmas and boundary structure") {
    for (int k = 0; k <= 5; ++k) {
        const FusionTable t = build_table(k);
        CAPTURE(k);
        CHECK(lemma1_colsums(t));
        CHECK(lemma2_traces(t));
        CHECK(boundary_structure(t));
        const GenFun g = build_genfun(t);
        CHECK(rows_balanced(g.X));
        CHECK(rows_balanced(lambda_combination(g)));
    }
}

TEST_CASE("level matrices stabilize on a fixed window") {
    CHECK(truncation_window_matches(6, 2));
    CHECK(truncation_window_matches(12, 4));
}

TEST_CASE("one-variable family on a rank-3 chain") {
    const Su2Report r = su2_generating(path_adjacency(3), 4);
    CHECK(r.all_ok());
    REQUIRE(r.F.size() == 3);
    CHECK(r.F[0] == IntMat::identity(3));
    CHECK(r.F[1] == path_adjacency(3));
    // F_2 is the end-to-end flip.
    IntMat flip(3, 3);
    flip.at(0, 2) = flip.at(1, 1) = flip.at(2, 0) = 1;
    CHECK(r.F[2] == flip);
}

TEST_CASE("one-variable family on longer chains") {
    for (int rank = 1; rank <= 8; ++rank) {
        const Su2Report r = su2_generating(path_adjacency(rank), rank + 1);
        CAPTURE(rank);
        CHECK(r.all_ok());
        CHECK(static_cast<int>(r.F.size()) == rank);
    }
}
