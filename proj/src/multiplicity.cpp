#include "multiplicity.hpp"

#include <algorithm>
#include <stdexcept>

namespace su3f {

namespace {

// The six thirds-arguments entering the lower threshold; all are divisible
// by 3 exactly when triality is conserved.
std::array<int, 6> third_args(const Triple& t) {
    const int l1 = t.lam.l1, l2 = t.lam.l2;
    const int m1 = t.mu.l1, m2 = t.mu.l2;
    const int n1 = t.nu.l1, n2 = t.nu.l2;
    return {
        l1 - l2 + m1 + 2 * m2 + 2 * n1 + n2,
        -l1 + l2 + 2 * m1 + m2 + n1 + 2 * n2,
        2 * l1 + l2 - m1 + m2 + n1 + 2 * n2,
        l1 + 2 * l2 + m1 - m2 + 2 * n1 + n2,
        l1 + 2 * l2 + m1 + 2 * m2 - n1 + n2,
        2 * l1 + l2 + 2 * m1 + m2 + n1 - n2,
    };
}

int k0_min_raw(const Triple& t) {
    int best = std::max({norm(t.lam), norm(t.mu), norm(t.nu)});
    for (int a : third_args(t)) {
        if (a % 3 != 0) throw std::logic_error("k0_min: thirds-argument not divisible by 3");
        best = std::max(best, a / 3);
    }
    return best;
}

int k0_max_raw(const Triple& t) {
    const int l1 = t.lam.l1, l2 = t.lam.l2;
    const int m1 = t.mu.l1, m2 = t.mu.l2;
    const int n1 = t.nu.l1, n2 = t.nu.l2;
    const int a = 2 * l1 + l2 + 2 * m1 + m2 + n1 + 2 * n2;
    const int b = l1 + 2 * l2 + m1 + 2 * m2 + 2 * n1 + n2;
    if (a % 3 != 0 || b % 3 != 0) throw std::logic_error("k0_max: argument not divisible by 3");
    return std::min(a / 3, b / 3);
}

}  // namespace

bool is_admissible(const Triple& t) {
    if (!dominant(t.lam) || !dominant(t.mu) || !dominant(t.nu)) return false;
    if (!triality_match(t)) return false;
    const int l1 = t.lam.l1, l2 = t.lam.l2;
    const int m1 = t.mu.l1, m2 = t.mu.l2;
    const int n1 = t.nu.l1, n2 = t.nu.l2;
    // Convex-polygon conditions on nu, one per simple-root direction.
    const int lo1 = std::max({2 * m1 + m2 - l1 - 2 * l2, 2 * l1 + l2 - m1 - 2 * m2,
                              l2 - l1 + m2 - m1});
    if (!(lo1 <= 2 * n1 + n2 && 2 * n1 + n2 <= 2 * l1 + l2 + 2 * m1 + m2)) return false;
    const int lo2 = std::max({l1 + 2 * l2 - 2 * m1 - m2, m1 + 2 * m2 - 2 * l1 - l2,
                              l1 - l2 + m1 - m2});
    if (!(lo2 <= n1 + 2 * n2 && n1 + 2 * n2 <= l1 + 2 * l2 + m1 + 2 * m2)) return false;
    const int lo3 = std::max(m1 - m2 - 2 * l1 - l2, l1 - l2 - 2 * m1 - m2);
    const int hi3 = std::min(l1 - l2 + m1 + 2 * m2, l1 + 2 * l2 + m1 - m2);
    if (!(lo3 <= n1 - n2 && n1 - n2 <= hi3)) return false;
    return true;
}

int k0_min(const Triple& t) {
    if (!is_admissible(t)) throw std::domain_error("not admissible");
    return k0_min_raw(t);
}

int k0_max(const Triple& t) {
    if (!is_admissible(t)) throw std::domain_error("not admissible");
    return k0_max_raw(t);
}

ThresholdPair thresholds(const Triple& t) {
    if (!is_admissible(t)) throw std::domain_error("not admissible");
    return {k0_min_raw(t), k0_max_raw(t)};
}

PairBounds pair_bounds(Weight lam, Weight mu) {
    if (!dominant(lam) || !dominant(mu))
        throw std::invalid_argument("pair_bounds: weights must be dominant");
    return {std::max(norm(lam), norm(mu)), norm(lam) + norm(mu)};
}

std::int64_t fusion_coefficient(const Triple& t, int level) {
    if (!is_admissible(t)) return 0;
    const int kmin = k0_min_raw(t), kmax = k0_max_raw(t);
    if (level == kClassical) return kmax - kmin + 1;
    if (level < kmin) return 0;
    if (level >= kmax) return kmax - kmin + 1;
    return level - kmin + 1;
}

SemimagicResult semimagic_multiplicity(const Triple& t) {
    SemimagicResult r;
    if (!dominant(t.lam) || !dominant(t.mu) || !dominant(t.nu)) return r;
    const Weight nub = conjugate(t.nu);
    const std::int64_t S1 = t.lam.l1 + t.mu.l1 + nub.l1;
    const std::int64_t S2 = t.lam.l2 + t.mu.l2 + nub.l2;
    if ((S1 - S2) % 3 != 0) return r;
    const std::int64_t x = (S1 > S2 ? S1 - S2 : S2 - S1) / 3;
    std::int64_t row1[3] = {t.lam.l1, t.mu.l1, nub.l1};
    std::int64_t row2[3] = {t.lam.l2, t.mu.l2, nub.l2};
    if (S1 > S2)
        for (auto& v : row1) v -= x;
    else if (S2 > S1)
        for (auto& v : row2) v -= x;
    const std::int64_t S = std::min(S1, S2);
    std::int64_t row3[3];
    for (int j = 0; j < 3; ++j) row3[j] = S - row1[j] - row2[j];
    r.tableau.S = S;
    r.tableau.x = x;
    std::int64_t mn = row1[0];
    for (int j = 0; j < 3; ++j) {
        r.tableau.grid[0][j] = row1[j];
        r.tableau.grid[1][j] = row2[j];
        r.tableau.grid[2][j] = row3[j];
        mn = std::min({mn, row1[j], row2[j], row3[j]});
    }
    if (mn < 0) return r;
    r.tableau.c = mn;
    r.mult = mn + 1;
    r.k0_min = static_cast<int>(S + x - mn);
    r.k0_max = static_cast<int>(S + x);
    return r;
}

std::vector<std::pair<Weight, std::int64_t>> wessleen_domain(Weight lam, Weight mu, int level) {
    if (!dominant(lam) || !dominant(mu))
        throw std::invalid_argument("wessleen_domain: weights must be dominant");
    std::vector<std::pair<Weight, std::int64_t>> out;
    const int bound = norm(lam) + norm(mu);
    for (int n = 0; n <= bound; ++n)
        for (int n1 = 0; n1 <= n; ++n1) {
            const Weight nu{n1, n - n1};
            const std::int64_t m = fusion_coefficient({lam, mu, nu}, level);
            if (m > 0) out.push_back({nu, m});
        }
    return out;
}

bool bmw_cut(const Triple& t, int level) {
    const int l1 = t.lam.l1, l2 = t.lam.l2;
    const int m1 = t.mu.l1, m2 = t.mu.l2;
    const int n1 = t.nu.l1, n2 = t.nu.l2;
    const int k = level;
    if (n1 + n2 > k) return false;
    if (2 * n1 + n2 > std::min(3 * k - l1 + l2 - m1 - 2 * m2, 3 * k - l1 - 2 * l2 - m1 + m2))
        return false;
    if (n1 + 2 * n2 > std::min(3 * k - 2 * l1 - l2 + m1 - m2, 3 * k + l1 - l2 - 2 * m1 - m2))
        return false;
    if (!(-3 * k + l1 + 2 * l2 + m1 + 2 * m2 <= n1 - n2 &&
          n1 - n2 <= 3 * k - 2 * l1 - l2 - 2 * m1 - m2))
        return false;
    return true;
}

bool rho_shift_check(const Triple& t, int level) {
    if (level < 3) throw std::domain_error("rho_shift_check: level must be >= 3");
    const Weight rho{1, 1};
    auto shift = [&](Weight w) { return Weight{w.l1 - rho.l1, w.l2 - rho.l2}; };
    const Triple shifted{shift(t.lam), shift(t.mu), shift(t.nu)};
    for (Weight w : {shifted.lam, shifted.mu, shifted.nu}) {
        if (!dominant(w))
            throw std::domain_error("rho_shift_check: all weight components must be >= 1");
        if (norm(w) > level - 3)
            throw std::domain_error("rho_shift_check: shifted weight not integrable at level-3");
    }
    std::int64_t expected = 0;
    if (is_admissible(t) && level >= k0_min_raw(t))
        expected = fusion_coefficient(t, level) - 1;
    return fusion_coefficient(shifted, level - 3) == expected;
}

}  // namespace su3f
