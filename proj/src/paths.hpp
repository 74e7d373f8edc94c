#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusion_table.hpp"
#include "genfun.hpp"
#include "rat.hpp"

namespace su3f {

// Entry-sum functional.
inline std::int64_t sigma(const IntMat& m) { return m.sum(); }

// Direct entry sums over the level-k table against their product formulas,
// plus the row-sum identity tying the boundary combination to the inverse
// of 6 - G - G^T.
struct Su3Sums {
    int level = 0;
    BigInt direct_X, direct_GX, direct_Lambda;
    Rat direct_K;
    BigInt formula_X, formula_GX, formula_Lambda;
    Rat formula_K;
    bool x_ok = false;
    bool gx_ok = false;
    bool lambda_ok = false;
    bool k_ok = false;
    bool lambda_u_ok = false;       // row sums of Lambda == 12(level+3) * K row sums
    bool six_combination_ok = false;  // 6 SX - 2 S(GX) == SLambda

    bool all_ok() const {
        return x_ok && gx_ok && lambda_ok && k_ok && lambda_u_ok && six_combination_ok;
    }
};
Su3Sums su3_sums(int level);

// Entry sums of the first-edge boundary matrices as a polynomial in s.
struct SigmaLambda1 {
    int level = 0;
    std::vector<BigInt> coeffs;  // coefficient of s^p, the quartic product / 4
    bool matches_direct = false;
    BigInt value_at_one = 0;
    bool binomial_ok = false;  // value_at_one == C(level+5, 5)
};
SigmaLambda1 sigma_lambda1_poly(int level);

// Closed forms for the entry sums of X(s,t) and G X(s,t) evaluated at
// random rational points away from the poles s=1, t=1, s=t.
struct PointCheckReport {
    int points = 0;
    bool ok = true;
    std::string detail;  // first failing point
};
PointCheckReport closed_form_point_checks(int level, int points, unsigned seed);

// The rotation matrix absorbs into the all-ones matrix: P U = U P = U.
bool p_replacement_ok(const FusionTable& table);

// --- simply-laced diagrams ------------------------------------------------

struct DynkinDiagram {
    std::string name;  // "A5", "D6", "E7", ...
    char family = 'A';
    int rank = 1;
    int coxeter = 2;       // g
    int dual_coxeter = 2;  // equals g on the simply-laced family
    IntMat adjacency;
};
// family in {'A','D','E'}; rank >= 1 / >= 4 / in {6,7,8} respectively.
// Throws std::invalid_argument otherwise.
DynkinDiagram dynkin(char family, int rank);

struct PathStats {
    DynkinDiagram diagram;
    Su2Report su2;  // Chebyshev family and its structural checks
    std::vector<std::int64_t> d;  // entry sums of F_lambda
    std::int64_t d_H = 0;         // sum of d
    std::int64_t d_B = 0;         // sum of d^2
    std::vector<std::int64_t> u, v;  // row / column sums of X
    Rat sigma_K;                     // entry sum of (2 - adjacency)^{-1}
    bool d_H_formula_ok = false;          // g(g+1)r/6
    bool fdv_ok = false;                  // sigma_K == g_dual (g+1) r / 12
    bool d_H_twice_sigma_K_ok = false;    // d_H == 2 sigma_K
    bool literal_lambda_ok = false;       // (2-adj) X^T == F_0 + F_{rank-1}
    bool variant_lambda_ok = false;       // (2-adj) X^T == F_0 + F_{g-2}
    bool f_rank_minus_1_permutation = false;
    bool f_g_minus_2_permutation = false;

    // The guarantees common to every simply-laced diagram (the literal
    // boundary index only agrees with the variant on the A family).
    bool core_ok() const {
        return su2.all_ok() && d_H_formula_ok && fdv_ok && d_H_twice_sigma_K_ok &&
               variant_lambda_ok && f_g_minus_2_permutation;
    }
};
PathStats su2_path_stats(const DynkinDiagram& diagram);

}  // namespace su3f
