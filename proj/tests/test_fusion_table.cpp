#include "fusion_table.hpp"

#include <map>
#include <stdexcept>

#include "doctest.h"
#include "multiplicity.hpp"

using namespace su3f;

TEST_CASE("level-1 generator is the 3-cycle") {
    const FusionTable t = build_table(1);
    REQUIRE(t.size() == 3);
    const IntMat& g = t.matrix({1, 0});
    CHECK(g.sum() == 3);
    // Alcove order (0,0), (0,1), (1,0): tensoring with (1,0) cycles them.
    CHECK(g.at(0, 2) == 1);
    CHECK(g.at(1, 0) == 1);
    CHECK(g.at(2, 1) == 1);
    CHECK(g.is_permutation());
    // The conjugate generator is the transpose.
    CHECK(t.matrix({0, 1}) == g.transposed());
    // Identity label.
    CHECK(t.matrix({0, 0}) == IntMat::identity(3));
}

TEST_CASE("structural invariants at small levels") {
    for (int k = 0; k <= 6; ++k) {
        const TableReport r = verify_table(build_table(k));
        CHECK(r.ok);
        CHECK(r.first_violation.empty());
        CHECK(r.checks > 0);
    }
}

TEST_CASE("a corrupted entry is caught") {
    FusionTable t = build_table(1);
    t.matrices[1].at(0, 0) += 1;
    const TableReport r = verify_table(t);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.first_violation.empty());
}

TEST_CASE("rotation") {
    CHECK(rotation_action(5, {1, 1}) == Weight{3, 1});
    CHECK(rotation_action(2, {1, 0}) == Weight{1, 1});
    // Order three on every alcove point.
    for (const Weight w : alcove(6)) {
        const Weight r3 = rotation_action(6, rotation_action(6, rotation_action(6, w)));
        CHECK(r3 == w);
    }
    CHECK_THROWS_AS(rotation_action(2, {3, 0}), std::invalid_argument);
}

TEST_CASE("matrix lookup rejects outside weights") {
    const FusionTable t = build_table(2);
    CHECK_THROWS_AS(t.matrix({3, 0}), std::invalid_argument);
}

TEST_CASE("annotated product of a small pair") {
    const AnnotatedDecomposition d = product(kClassical, {1, 1}, {0, 2});
    REQUIRE(d.entries.size() == 4);
    CHECK(d.total() == 4);
    CHECK(d.distinct() == 4);
    // Grouped by first level, then nu2, nu1.
    CHECK(d.entries[0].nu == Weight{1, 0});
    CHECK(d.entries[0].levels == std::vector<int>{2});
    CHECK(d.entries[1].nu == Weight{2, 1});
    CHECK(d.entries[1].levels == std::vector<int>{3});
    CHECK(d.entries[2].nu == Weight{0, 2});
    CHECK(d.entries[2].levels == std::vector<int>{3});
    CHECK(d.entries[3].nu == Weight{1, 3});
    CHECK(d.entries[3].levels == std::vector<int>{4});

    // Level cap at 2 keeps only the first coupling.
    const AnnotatedDecomposition c = product(2, {1, 1}, {0, 2});
    REQUIRE(c.entries.size() == 1);
    CHECK(c.entries[0].nu == Weight{1, 0});

    CHECK_THROWS_AS(product(1, {1, 1}, {0, 2}), std::invalid_argument);
}

TEST_CASE("annotated product of the large pair") {
    const AnnotatedDecomposition d = product(kClassical, {9, 5}, {6, 2});
    CHECK(d.distinct() == 51);
    CHECK(d.total() == 95);
    std::map<size_t, int> hist;
    for (const auto& e : d.entries) ++hist[e.levels.size()];
    CHECK(hist == std::map<size_t, int>{{1, 21}, {2, 16}, {3, 14}});
    // Spot thresholds.
    for (const auto& e : d.entries) {
        if (e.nu == Weight{8, 6}) CHECK(e.levels == std::vector<int>{15, 16, 17});
        if (e.nu == Weight{15, 7}) CHECK(e.levels == std::vector<int>{22});
        if (e.nu == Weight{4, 8}) CHECK(e.levels == std::vector<int>{14, 15});
    }
    CHECK(d.entries.front().nu == Weight{6, 1});
    CHECK(d.entries.back().nu == Weight{15, 7});

    // Dimension identity: total dimension of both sides agrees.
    auto dim = [](Weight w) {
        return (w.l1 + 1) * (w.l2 + 1) * (w.l1 + w.l2 + 2) / 2;
    };
    std::int64_t rhs = 0;
    for (const auto& e : d.entries)
        rhs += static_cast<std::int64_t>(e.levels.size()) * dim(e.nu);
    CHECK(rhs == std::int64_t(dim({9, 5})) * dim({6, 2}));
    CHECK(rhs == 50400);
}

TEST_CASE("level tables match the level-free product when nothing is cut") {
    // At k at least the sum of the norms the cut is inactive.
    const FusionTable t = build_table(4);
    const AnnotatedDecomposition d = product(4, {1, 0}, {0, 1});
    std::int64_t total = 0;
    const IntMat& m = t.matrix({1, 0});
    const int col0 = alcove_index(4, {0, 0});
    const int row = alcove_index(4, {0, 1});
    CHECK(m.at(row, col0) == 1);
    for (const auto& e : d.entries) total += static_cast<std::int64_t>(e.levels.size());
    CHECK(total == 2);
}
