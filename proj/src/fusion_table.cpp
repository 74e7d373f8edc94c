#include "fusion_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "multiplicity.hpp"

namespace su3f {

const IntMat& FusionTable::matrix(Weight w) const {
    const int idx = alcove_index(level, w);
    if (idx < 0)
        throw std::invalid_argument("FusionTable: weight " + format_weight(w) +
                                    " is not integrable at level " + std::to_string(level));
    return matrices[static_cast<size_t>(idx)];
}

FusionTable build_table(int level) {
    if (level < 0) throw std::invalid_argument("build_table: level must be >= 0");
    FusionTable t;
    t.level = level;
    t.weights = alcove(level);
    const int n = t.size();
    t.matrices.reserve(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        IntMat m(n, n);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                m.at(b, c) = fusion_coefficient({t.weights[a], t.weights[b], t.weights[c]}, level);
        t.matrices.push_back(std::move(m));
    }
    return t;
}

Weight rotation_action(int level, Weight w) {
    if (alcove_index(level, w) < 0)
        throw std::invalid_argument("rotation_action: weight " + format_weight(w) +
                                    " is not integrable at level " + std::to_string(level));
    return {level - w.l1 - w.l2, w.l1};
}

std::int64_t AnnotatedDecomposition::total() const {
    std::int64_t s = 0;
    for (const auto& e : entries) s += static_cast<std::int64_t>(e.levels.size());
    return s;
}

AnnotatedDecomposition product(int level, Weight lam, Weight mu) {
    if (!dominant(lam) || !dominant(mu))
        throw std::invalid_argument("product: weights must be dominant");
    if (level != kClassical) {
        if (level < 0) throw std::invalid_argument("product: level must be >= 0 or inf");
        if (norm(lam) > level || norm(mu) > level)
            throw std::invalid_argument("product: weights must be integrable at level " +
                                        std::to_string(level));
    }
    AnnotatedDecomposition d;
    d.lam = lam;
    d.mu = mu;
    d.level = level;
    const int bound = norm(lam) + norm(mu);
    std::vector<std::pair<ThresholdPair, Weight>> found;
    for (int n = 0; n <= bound; ++n)
        for (int n1 = 0; n1 <= n; ++n1) {
            const Weight nu{n1, n - n1};
            const Triple t{lam, mu, nu};
            if (!is_admissible(t)) continue;
            const ThresholdPair th = thresholds(t);
            if (level != kClassical && th.k0_min > level) continue;
            found.push_back({th, nu});
        }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (x.first.k0_min != y.first.k0_min) return x.first.k0_min < y.first.k0_min;
        if (x.second.l2 != y.second.l2) return x.second.l2 < y.second.l2;
        return x.second.l1 < y.second.l1;
    });
    for (const auto& [th, nu] : found) {
        DecompositionEntry e;
        e.nu = nu;
        const int last = (level == kClassical) ? th.k0_max : std::min(th.k0_max, level);
        for (int k = th.k0_min; k <= last; ++k) e.levels.push_back(k);
        d.entries.push_back(std::move(e));
    }
    return d;
}

namespace {

std::string entry_tag(const FusionTable& t, int a, int b, int c) {
    return format_weight(t.weights[a]) + " x " + format_weight(t.weights[b]) + " -> " +
           format_weight(t.weights[c]);
}

}  // namespace

TableReport verify_table(const FusionTable& t) {
    TableReport r;
    const int n = t.size();
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.first_violation = std::move(msg);
    };

    // Conjugation acts by transposition.
    for (int a = 0; a < n && r.ok; ++a) {
        ++r.checks;
        const int ac = alcove_index(t.level, conjugate(t.weights[a]));
        if (!(t.matrices[a].transposed() == t.matrices[ac]))
            fail("conjugation/transpose mismatch for " + format_weight(t.weights[a]));
    }

    // Triality selection rule.
    for (int a = 0; a < n && r.ok; ++a) {
        ++r.checks;
        for (int b = 0; b < n && r.ok; ++b)
            for (int c = 0; c < n && r.ok; ++c)
                if (t.matrices[a].at(b, c) != 0 &&
                    !triality_match({t.weights[a], t.weights[b], t.weights[c]}))
                    fail("triality violation at " + entry_tag(t, a, b, c));
    }

    // Pairwise commutation.
    for (int a = 0; a < n && r.ok; ++a)
        for (int b = a + 1; b < n && r.ok; ++b) {
            ++r.checks;
            if (!(t.matrices[a] * t.matrices[b] == t.matrices[b] * t.matrices[a]))
                fail("commutation failure between " + format_weight(t.weights[a]) + " and " +
                     format_weight(t.weights[b]));
        }

    // Rotation generator P has order 3 and implements the rotation identity.
    if (r.ok && n > 0) {
        const IntMat& P = t.matrix({t.level, 0});
        ++r.checks;
        if (!(P * P * P == IntMat::identity(n))) fail("rotation generator is not of order 3");
        for (int a = 0; a < n && r.ok; ++a) {
            ++r.checks;
            const Weight rot = rotation_action(t.level, t.weights[a]);
            if (!(P * t.matrices[a] == t.matrix(rot)))
                fail("rotation identity fails for " + format_weight(t.weights[a]));
        }
    }
    return r;
}

}  // namespace su3f
