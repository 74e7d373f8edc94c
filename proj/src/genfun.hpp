#pragma once

#include <string>
#include <vector>

#include "fusion_table.hpp"
#include "polymat.hpp"

namespace su3f {

// Level-k generating data: X(s,t) plus the three boundary polynomials and
// the distinguished matrices they are built from.
struct GenFun {
    int level = 0;
    int h = 3;    // level + 3
    MatPoly X;    // sum over the alcove of s^l1 t^l2 N_(l1,l2)
    MatPoly L1;   // X(s,0)
    MatPoly L2;   // X(0,t)
    MatPoly L3;   // top boundary l1+l2 = level
    IntMat G;     // N_(1,0); the zero matrix at level 0
    IntMat GT;    // N_(0,1)
    IntMat P;     // N_(level,0)
    IntMat P2;    // N_(0,level) == P*P
};

MatPoly build_X(const FusionTable& table);

struct Boundaries {
    MatPoly L1, L2, L3;
};
Boundaries build_boundaries(const FusionTable& table);

GenFun build_genfun(const FusionTable& table);

struct IdentityCheck {
    char letter = '?';  // 'a'..'h'
    bool ok = true;
    std::string detail;  // first offending monomial/entry on failure
};

struct IdentityReport {
    int level = 0;
    std::vector<IdentityCheck> checks;
    bool all_ok = true;
    std::string first_failure;  // "<letter>: <detail>" of the first failure
};

// The eight cleared-denominator polynomial-matrix identities at one level.
// The fault flag swaps the two generators so failure reporting can be
// exercised deterministically.
IdentityReport verify_identities(int level, bool seed_fault = false);

// Column sums of the coefficient of s^a t^b match those of s^b t^a.
bool lemma1_colsums(const FusionTable& table);
// Entry totals of G^T N and G N agree for every alcove matrix N.
bool lemma2_traces(const FusionTable& table);
// Boundary matrices N_(p,0) and N_(p, level-p) have 0/1 entries, and each
// row of N_(p,0) has as many nonzero entries as the matching column.
bool boundary_structure(const FusionTable& table);
// Row-wise balance: in every row, the monomial s^a t^b carries the same
// total count as s^b t^a.
bool rows_balanced(const MatPoly& m);
// The balanced combination (s^3+st)L1 + (t^3+st)L2 + 2 s^2 t^2 L3.
MatPoly lambda_combination(const GenFun& gf);
// Entries of the level matrices agree with the classical coefficients on
// the sub-block of weights with norm <= max_norm.
bool truncation_window_matches(int level, int max_norm);

// --- one-variable (path/diagram) side ------------------------------------

// Path-graph adjacency on n nodes.
IntMat path_adjacency(int n);

struct Su2Report {
    std::vector<IntMat> F;           // F_0 .. F_{g-2}
    bool terminates = true;          // F_{g-1} == 0
    bool nonnegative = true;         // all listed F_l entrywise >= 0
    bool recursion_identity = true;  // cleared generating identity, P = F_{g-2}
    bool p_involution = true;        // P*P == identity
    bool p_permutation = true;
    bool periodic = true;            // F_{l+2g} == F_l
    bool reflection = true;          // F_{l+g} == -F_{g-2-l}

    bool all_ok() const {
        return terminates && nonnegative && recursion_identity && p_involution &&
               p_permutation && periodic && reflection;
    }
};

// Chebyshev matrix family on an adjacency matrix with Coxeter number g.
Su2Report su2_generating(const IntMat& adjacency, int g);

}  // namespace su3f
