#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "basics.hpp"

namespace su3f {

struct ThresholdPair {
    int k0_min = 0;
    int k0_max = 0;
    friend auto operator<=>(const ThresholdPair&, const ThresholdPair&) = default;
};

// Levels admitting at least one / all couplings of some nu for the pair.
struct PairBounds {
    int k_min = 0;
    int k_max = 0;
    friend auto operator<=>(const PairBounds&, const PairBounds&) = default;
};

// 3x3 tableau with equal row and column sums; c is its minimum entry.
struct SemimagicTableau {
    std::array<std::array<std::int64_t, 3>, 3> grid{};
    std::int64_t S = 0;  // common row/column sum after the x-shift
    std::int64_t x = 0;  // shift applied to balance the two weight rows
    std::int64_t c = 0;  // minimum entry (only meaningful when valid)
};

struct SemimagicResult {
    std::int64_t mult = 0;  // c + 1 when the tableau is non-negative, else 0
    SemimagicTableau tableau{};
    // Thresholds; only meaningful when mult > 0 (otherwise set to -1).
    int k0_min = -1;
    int k0_max = -1;
};

// Classical admissibility: dominance + triality + the convex-polygon
// inequalities on nu.  Total predicate (false on any bad input).
bool is_admissible(const Triple& t);

// First / last level of the coupling window.  Throw std::domain_error
// ("not admissible") when the triple has no classical coupling.
int k0_min(const Triple& t);
int k0_max(const Triple& t);
ThresholdPair thresholds(const Triple& t);

PairBounds pair_bounds(Weight lam, Weight mu);

// Level-k fusion coefficient (level == kClassical for the tensor
// multiplicity).  Total: returns 0 on non-admissible or out-of-window input.
std::int64_t fusion_coefficient(const Triple& t, int level);

// Independent multiplicity pipeline via the 3x3 tableau.
SemimagicResult semimagic_multiplicity(const Triple& t);

// All nu with nonzero multiplicity for lam x mu at the given level
// (kClassical for the full tensor product), in canonical weight order.
std::vector<std::pair<Weight, std::int64_t>> wessleen_domain(Weight lam, Weight mu, int level);

// Inequality cut that carves the level-k domain out of the classical one;
// defined for any triple/level.
bool bmw_cut(const Triple& t, int level);

// Checks the simultaneous shift-by-rho recursion between levels k and k-3.
// Preconditions (throw std::domain_error on violation): level >= 3, all six
// weight components >= 1, and the shifted weights integrable at level-3.
bool rho_shift_check(const Triple& t, int level);

}  // namespace su3f
