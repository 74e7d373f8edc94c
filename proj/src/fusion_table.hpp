#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "basics.hpp"
#include "intmat.hpp"

namespace su3f {

// Complete set of level-k fusion matrices, alcove-indexed.
struct FusionTable {
    int level = 0;
    std::vector<Weight> weights;   // canonical alcove order
    std::vector<IntMat> matrices;  // matrices[i] belongs to weights[i]

    int size() const { return static_cast<int>(weights.size()); }
    // Throws std::invalid_argument when w is not integrable at this level.
    const IntMat& matrix(Weight w) const;
};

// Builds every matrix entrywise from the closed-form coefficient.
FusionTable build_table(int level);

// The order-3 rotation on the alcove: (l1,l2) -> (k-l1-l2, l1).
// Throws std::invalid_argument when w lies outside alcove(level).
Weight rotation_action(int level, Weight w);

struct DecompositionEntry {
    Weight nu;
    std::vector<int> levels;  // coupling thresholds, ascending, clipped to <= level
};

// lam x mu with per-coupling threshold annotations.
struct AnnotatedDecomposition {
    Weight lam, mu;
    int level = kClassical;
    std::vector<DecompositionEntry> entries;  // grouped by first threshold, then nu2, nu1

    std::int64_t total() const;  // number of couplings
    int distinct() const { return static_cast<int>(entries.size()); }
};

// Throws std::invalid_argument when lam/mu are not integrable at a finite level.
AnnotatedDecomposition product(int level, Weight lam, Weight mu);

struct TableReport {
    bool ok = true;
    std::string first_violation;  // empty when ok
    int checks = 0;
};

// Structural checks: transpose-conjugation, triality selection, pairwise
// commutation, rotation generator of order 3, and the rotation identity.
TableReport verify_table(const FusionTable& table);

}  // namespace su3f
