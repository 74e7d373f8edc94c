#include "paths.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace su3f;

TEST_CASE("entry-sum functional") {
    CHECK(sigma(IntMat::identity(3)) == 3);
    IntMat ones(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ones.at(i, j) = 1;
    CHECK(sigma(ones) == 9);
}

TEST_CASE("table sums match their product formulas") {
    const std::int64_t sx[] = {1, 9, 45, 164, 486, 1242, 2838, 5940, 11583};
    const std::int64_t sgx[] = {0, 9, 72, 324, 1080, 2970, 7128, 15444, 30888};
    const std::int64_t sl[] = {6, 36, 126, 336, 756, 1512, 2772, 4752, 7722};
    const Rat sk[] = {Rat(1, 6),  Rat(3, 4),   Rat(21, 10), Rat(14, 3), Rat(9),
                      Rat(63, 4), Rat(77, 3),  Rat(198, 5), Rat(117, 2)};
    for (int k = 0; k <= 8; ++k) {
        const Su3Sums s = su3_sums(k);
        CAPTURE(k);
        CHECK(s.all_ok());
        CHECK(s.direct_X == BigInt(sx[k]));
        CHECK(s.direct_GX == BigInt(sgx[k]));
        CHECK(s.direct_Lambda == BigInt(sl[k]));
        CHECK(s.direct_K == sk[k]);
        CHECK(s.formula_X == s.direct_X);
        CHECK(s.formula_GX == s.direct_GX);
        CHECK(s.formula_Lambda == s.direct_Lambda);
        CHECK(s.formula_K == s.direct_K);
    }
}

TEST_CASE("first-edge boundary polynomial") {
    const SigmaLambda1 p0 = sigma_lambda1_poly(0);
    CHECK(p0.coeffs == std::vector<BigInt>{1});
    CHECK(p0.matches_direct);
    CHECK(p0.binomial_ok);
    CHECK(p0.value_at_one == 1);

    const SigmaLambda1 p1 = sigma_lambda1_poly(1);
    CHECK(p1.coeffs == std::vector<BigInt>{3, 3});
    CHECK(p1.matches_direct);
    CHECK(p1.value_at_one == 6);

    const SigmaLambda1 p4 = sigma_lambda1_poly(4);
    CHECK(p4.matches_direct);
    CHECK(p4.binomial_ok);
    CHECK(p4.value_at_one == 126);
}

TEST_CASE("closed forms at random rational points") {
    const PointCheckReport r = closed_form_point_checks(3, 10, 42);
    CHECK(r.ok);
    CHECK(r.points == 10);
    CHECK(r.detail.empty());
    CHECK(closed_form_point_checks(6, 5, 7).ok);
}

TEST_CASE("rotation absorbs into the all-ones matrix") {
    for (int k = 0; k <= 4; ++k) CHECK(p_replacement_ok(build_table(k)));
}

TEST_CASE("diagram catalogue") {
    CHECK(dynkin('A', 5).coxeter == 6);
    CHECK(dynkin('D', 4).coxeter == 6);
    CHECK(dynkin('E', 6).coxeter == 12);
    CHECK(dynkin('E', 7).coxeter == 18);
    CHECK(dynkin('E', 8).coxeter == 30);
    for (const char f : {'A', 'D', 'E'}) {
        const int rank = f == 'A' ? 3 : f == 'D' ? 5 : 6;
        const DynkinDiagram d = dynkin(f, rank);
        CHECK(d.dual_coxeter == d.coxeter);
        CHECK(d.adjacency.rows() == rank);
        CHECK(d.adjacency == d.adjacency.transposed());
    }
    CHECK_THROWS_AS(dynkin('D', 3), std::invalid_argument);
    CHECK_THROWS_AS(dynkin('E', 5), std::invalid_argument);
    CHECK_THROWS_AS(dynkin('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(dynkin('B', 2), std::invalid_argument);
    CHECK_THROWS_AS(dynkin('A', 0), std::invalid_argument);
}

TEST_CASE("path statistics on the smallest chain pair") {
    const PathStats s = su2_path_stats(dynkin('A', 2));
    CHECK(s.core_ok());
    CHECK(s.d == std::vector<std::int64_t>{2, 2});
    CHECK(s.d_H == 4);
    CHECK(s.d_B == 8);
    CHECK(s.sigma_K == Rat(2));
    // On chains the literal boundary index agrees with the variant.
    CHECK(s.literal_lambda_ok);
    CHECK(s.f_rank_minus_1_permutation);
}

TEST_CASE("path statistics across the catalogue") {
    struct Row {
        char family;
        int rank;
        std::int64_t d_H;
        bool literal;
    };
    const Row rows[] = {
        {'A', 1, 1, true},   {'A', 4, 20, true},  {'A', 7, 84, true},
        {'D', 4, 28, false}, {'D', 5, 60, false}, {'D', 8, 280, false},
        {'E', 6, 156, false}, {'E', 7, 399, false}, {'E', 8, 1240, false},
    };
    for (const Row& row : rows) {
        const PathStats s = su2_path_stats(dynkin(row.family, row.rank));
        CAPTURE(row.family);
        CAPTURE(row.rank);
        CHECK(s.core_ok());
        CHECK(s.d_H == row.d_H);
        CHECK(s.literal_lambda_ok == row.literal);
        CHECK(Rat(2) * s.sigma_K == Rat(s.d_H));
    }
}
