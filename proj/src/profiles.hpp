#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "basics.hpp"

namespace su3f {

// Per-level coupling bookkeeping for a pair: u[(p,j)] counts the nu whose
// multiplicity rises from j to j+1 when the level reaches k_min + p.
struct LevelProfile {
    Weight lam, mu;
    int k_min = 0;
    int k_max = 0;
    std::map<std::pair<int, int>, std::int64_t> u;

    std::int64_t at(int p, int j) const;
};

LevelProfile profile_direct(Weight lam, Weight mu);

// Normalized representative with L1 >= max(L2, M1, M2), plus the symmetry
// used to reach it ("identity", "swap", "conjugate", "swap+conjugate").
struct NormalizedPair {
    Weight lam, mu;
    std::string transform;
};
NormalizedPair normalize_pair(Weight lam, Weight mu);

// Case-ladder evaluation of the profile entry; the p == j diagonal is
// recovered by subtraction from the cumulative histogram.
std::int64_t u_formula(Weight lam, Weight mu, int p, int j);

// Classical multiplicity histogram over distinct nu.
struct MultiplicityHistogram {
    std::map<std::int64_t, std::int64_t> counts;  // multiplicity -> #nu

    std::int64_t distinct() const;
    std::int64_t total() const;      // sum m * count(m)
    std::int64_t quadratic() const;  // sum m^2 * count(m)
    // Number of nu with multiplicity >= m.
    std::int64_t cumulative(std::int64_t m) const;
};
MultiplicityHistogram sigma_enum(Weight lam, Weight mu);

// Multiset equality of the level-k coefficient lists for (lam,mu) and
// (lam, conj(mu)).  level == kClassical compares the tensor lists.
bool verify_property_P(Weight lam, Weight mu, int level);

struct SumRuleReport {
    std::int64_t linear_lhs = 0, linear_rhs = 0;
    std::int64_t quadratic_lhs = 0, quadratic_rhs = 0;
    std::int64_t support_lhs = 0, support_rhs = 0;
    std::int64_t u10 = 0, v10 = 0, u11 = 0, v11 = 0;
    bool profiles_compared = false;  // false when the window has no p=1 row
    bool ok = false;
};
// Linear, quadratic and support-count equalities between (lam,mu) and
// (lam, conj(mu)) at the given level, plus the first-row profile equalities.
SumRuleReport sum_rules(Weight lam, Weight mu, int level);

struct AutomorphismCheck {
    std::string id;       // "I".."IV"
    int forced_level = 0;
    bool applicable = false;  // side condition satisfied
    bool ok = false;          // identity verified entrywise (when applicable)
    std::string detail;
};
struct AutomorphismReport {
    std::vector<AutomorphismCheck> checks;
    bool all_ok = true;  // every applicable identity verified
};
// Four conjugation automorphisms, each pinned to its forced level.
AutomorphismReport automorphism_checks(Weight lam, Weight mu);

}  // namespace su3f
