#include "genfun.hpp"

#include <map>

#include "multiplicity.hpp"

namespace su3f {

namespace {

std::string diff_detail(const MatPoly& lhs, const MatPoly& rhs) {
    auto d = lhs.first_difference(rhs);
    if (!d) return "";
    const IntMat* a = lhs.coeff(d->mono);
    const IntMat* b = rhs.coeff(d->mono);
    std::int64_t va = a ? a->at(d->row, d->col) : 0;
    std::int64_t vb = b ? b->at(d->row, d->col) : 0;
    return format_mono(d->mono) + " entry (" + std::to_string(d->row) + "," +
           std::to_string(d->col) + "): " + std::to_string(va) + " != " + std::to_string(vb);
}

std::string mat_diff_detail(const IntMat& a, const IntMat& b) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j))
                return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                       "): " + std::to_string(a.at(i, j)) + " != " + std::to_string(b.at(i, j));
    return "";
}

}  // namespace

MatPoly build_X(const FusionTable& table) {
    MatPoly x(table.size());
    for (int i = 0; i < table.size(); ++i)
        x.add({table.weights[i].l1, table.weights[i].l2}, table.matrices[i]);
    return x;
}

Boundaries build_boundaries(const FusionTable& table) {
    const int k = table.level;
    Boundaries b{MatPoly(table.size()), MatPoly(table.size()), MatPoly(table.size())};
    for (int p = 0; p <= k; ++p) {
        b.L1.add({p, 0}, table.matrix({p, 0}));
        b.L2.add({0, p}, table.matrix({0, p}));
        b.L3.add({p, k - p}, table.matrix({p, k - p}));
    }
    return b;
}

GenFun build_genfun(const FusionTable& table) {
    const int k = table.level;
    const int n = table.size();
    GenFun gf;
    gf.level = k;
    gf.h = k + 3;
    gf.X = build_X(table);
    Boundaries b = build_boundaries(table);
    gf.L1 = b.L1;
    gf.L2 = b.L2;
    gf.L3 = b.L3;
    gf.G = k >= 1 ? table.matrix({1, 0}) : IntMat(n, n);
    gf.GT = k >= 1 ? table.matrix({0, 1}) : IntMat(n, n);
    gf.P = table.matrix({k, 0});
    gf.P2 = table.matrix({0, k});
    return gf;
}

IdentityReport verify_identities(int level, bool seed_fault) {
    FusionTable table = build_table(level);
    GenFun gf = build_genfun(table);
    if (seed_fault) std::swap(gf.G, gf.GT);

    const int n = table.size();
    const IntMat I = IntMat::identity(n);
    const MatPoly& X = gf.X;
    const MatPoly& L1 = gf.L1;
    const MatPoly& L2 = gf.L2;
    const MatPoly& L3 = gf.L3;
    const IntMat& G = gf.G;
    const IntMat& GT = gf.GT;
    const int h = gf.h;

    IdentityReport report;
    report.level = level;

    auto push = [&](char letter, const std::string& detail) {
        IdentityCheck c;
        c.letter = letter;
        c.ok = detail.empty();
        c.detail = detail;
        report.checks.push_back(c);
        if (!c.ok && report.all_ok) {
            report.all_ok = false;
            report.first_failure = std::string(1, letter) + ": " + detail;
        }
    };
    auto check_poly = [&](char letter, const MatPoly& lhs, const MatPoly& rhs,
                          const std::string& tag) {
        std::string d = diff_detail(lhs, rhs);
        push(letter, d.empty() ? "" : tag + d);
    };

    // (a) two three-term recurrences for X against the boundaries.
    {
        MatPoly lhs = X.shifted(2, 0) + X.shifted(0, 1) + X.shifted(1, 2) -
                      X.left_mul(G).shifted(1, 1);
        MatPoly rhs = L1.shifted(2, 0) + L2.shifted(0, 1) + L3.shifted(1, 2);
        std::string d = diff_detail(lhs, rhs);
        if (d.empty()) {
            lhs = X.shifted(0, 2) + X.shifted(1, 0) + X.shifted(2, 1) -
                  X.left_mul(GT).shifted(1, 1);
            rhs = L1.shifted(1, 0) + L2.shifted(0, 2) + L3.shifted(2, 1);
            d = diff_detail(lhs, rhs);
            if (!d.empty()) d = "second form: " + d;
        } else {
            d = "first form: " + d;
        }
        push('a', d);
    }

    // (b) the antisymmetric combination eliminating L3.
    {
        MatPoly lhs = X.shifted(3, 0) - X.left_mul(G).shifted(2, 1) +
                      X.left_mul(GT).shifted(1, 2) - X.shifted(0, 3);
        MatPoly rhs = L1.shifted(3, 0) - L1.shifted(1, 1) + L2.shifted(1, 1) - L2.shifted(0, 3);
        check_poly('b', lhs, rhs, "");
    }

    // (c) annihilator of L1: result collapses to 1 - s^h P.
    {
        MatPoly lhs =
            L1 - L1.left_mul(G).shifted(1, 0) + L1.left_mul(GT).shifted(2, 0) - L1.shifted(3, 0);
        MatPoly rhs(n);
        rhs.add({0, 0}, I);
        rhs.add({h, 0}, gf.P.scaled(-1));
        check_poly('c', lhs, rhs, "");
    }

    // (d) annihilator of L2: result collapses to 1 - t^h P^2.
    {
        MatPoly lhs =
            L2 - L2.left_mul(GT).shifted(0, 1) + L2.left_mul(G).shifted(0, 2) - L2.shifted(0, 3);
        MatPoly rhs(n);
        rhs.add({0, 0}, I);
        rhs.add({0, h}, gf.P2.scaled(-1));
        check_poly('d', lhs, rhs, "");
    }

    // (e) boundary rotations: N_(0,p) = P^2 N_(k-p,0) and N_(k-p,p) = P N_(p,0).
    {
        std::string d;
        for (int p = 0; p <= level && d.empty(); ++p) {
            IntMat left = table.matrix({0, p});
            IntMat right = gf.P2 * table.matrix({level - p, 0});
            std::string md = mat_diff_detail(left, right);
            if (!md.empty()) d = "reversal p=" + std::to_string(p) + " " + md;
        }
        for (int p = 0; p <= level && d.empty(); ++p) {
            IntMat left = table.matrix({level - p, p});
            IntMat right = gf.P * table.matrix({p, 0});
            std::string md = mat_diff_detail(left, right);
            if (!md.empty()) d = "top-boundary p=" + std::to_string(p) + " " + md;
        }
        push('e', d);
    }

    // (f) triple-annihilator product identity, both denominators cleared.
    {
        MatPoly D1(n), D2(n), D3(n);
        D1.add({0, 0}, I);
        D1.add({1, 0}, G.scaled(-1));
        D1.add({2, 0}, GT);
        D1.add({3, 0}, I.scaled(-1));
        D2.add({0, 0}, I);
        D2.add({0, 1}, GT.scaled(-1));
        D2.add({0, 2}, G);
        D2.add({0, 3}, I.scaled(-1));
        D3.add({3, 0}, I);
        D3.add({2, 1}, G.scaled(-1));
        D3.add({1, 2}, GT);
        D3.add({0, 3}, I.scaled(-1));

        MatPoly lhs = D1 * D2 * D3 * X;
        MatPoly t1 = D3 - D3.shifted(1, 1);
        MatPoly ph(n);
        ph.add({h, 0}, gf.P);
        MatPoly q2 = ph * D2;
        MatPoly t2 = q2.shifted(1, 1) - q2.shifted(3, 0);
        MatPoly p2h(n);
        p2h.add({0, h}, gf.P2);
        MatPoly q3 = p2h * D1;
        MatPoly t3 = q3.shifted(0, 3) - q3.shifted(1, 1);
        check_poly('f', lhs, t1 + t2 + t3, "");
    }

    // (g) the symmetric five-term combination.
    {
        MatPoly lhs = X.shifted(3, 0) + X.shifted(0, 3) + X.shifted(1, 1).scaled(2) +
                      X.shifted(2, 2).scaled(2) - X.left_mul(G).shifted(2, 1) -
                      X.left_mul(GT).shifted(1, 2);
        MatPoly rhs = L1.shifted(3, 0) + L1.shifted(1, 1) + L2.shifted(0, 3) + L2.shifted(1, 1) +
                      L3.shifted(2, 2).scaled(2);
        check_poly('g', lhs, rhs, "");
    }

    // (h) specialization at s=t=1: (6 - G - G^T) X = 2 (L1 + L2 + L3),
    //     with the quintic prefactor itself collapsing to 6 - G - G^T.
    {
        IntMat A = I.scaled(6) - G - GT;
        MatPoly Ap(n);
        Ap.add({3, 0}, I);
        Ap.add({0, 3}, I);
        Ap.add({1, 1}, I.scaled(2));
        Ap.add({2, 2}, I.scaled(2));
        Ap.add({2, 1}, G.scaled(-1));
        Ap.add({1, 2}, GT.scaled(-1));
        std::string d = mat_diff_detail(Ap.eval_ones(), A);
        if (!d.empty()) {
            d = "prefactor at ones: " + d;
        } else {
            IntMat lhs = A * X.eval_ones();
            IntMat rhs = (L1.eval_ones() + L2.eval_ones() + L3.eval_ones()).scaled(2);
            d = mat_diff_detail(lhs, rhs);
        }
        push('h', d);
    }

    return report;
}

bool lemma1_colsums(const FusionTable& table) {
    for (Weight w : table.weights)
        if (table.matrix(w).col_sums() != table.matrix(conjugate(w)).col_sums()) return false;
    return true;
}

bool lemma2_traces(const FusionTable& table) {
    if (table.level < 1) return true;
    const IntMat& G = table.matrix({1, 0});
    const IntMat& GT = table.matrix({0, 1});
    for (const IntMat& N : table.matrices)
        if ((GT * N).sum() != (G * N).sum()) return false;
    return true;
}

bool boundary_structure(const FusionTable& table) {
    const int k = table.level;
    for (int p = 0; p <= k; ++p) {
        const IntMat& edge = table.matrix({p, 0});
        const IntMat& top = table.matrix({p, k - p});
        if (!edge.entries_in_01() || !top.entries_in_01()) return false;
        for (int i = 0; i < edge.rows(); ++i) {
            int row_nonzero = 0, col_nonzero = 0;
            for (int j = 0; j < edge.cols(); ++j) {
                row_nonzero += edge.at(i, j) != 0;
                col_nonzero += edge.at(j, i) != 0;
            }
            if (row_nonzero != col_nonzero) return false;
        }
    }
    return true;
}

bool rows_balanced(const MatPoly& m) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        std::map<Mono, std::int64_t> count;
        for (const auto& [mono, mat] : m.terms()) {
            std::int64_t s = 0;
            for (int j = 0; j < n; ++j) s += mat.at(i, j);
            count[mono] = s;
        }
        for (const auto& [mono, v] : count) {
            auto it = count.find({mono.j, mono.i});
            if ((it == count.end() ? 0 : it->second) != v) return false;
        }
    }
    return true;
}

MatPoly lambda_combination(const GenFun& gf) {
    return gf.L1.shifted(3, 0) + gf.L1.shifted(1, 1) + gf.L2.shifted(0, 3) + gf.L2.shifted(1, 1) +
           gf.L3.shifted(2, 2).scaled(2);
}

bool truncation_window_matches(int level, int max_norm) {
    std::vector<Weight> small;
    for (Weight w : alcove(level))
        if (norm(w) <= max_norm) small.push_back(w);
    for (Weight lam : small)
        for (Weight mu : small)
            for (Weight nu : small)
                if (fusion_coefficient({lam, mu, nu}, level) !=
                    fusion_coefficient({lam, mu, nu}, kClassical))
                    return false;
    return true;
}

IntMat path_adjacency(int n) {
    IntMat a(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        a.at(i, i + 1) = 1;
        a.at(i + 1, i) = 1;
    }
    return a;
}

Su2Report su2_generating(const IntMat& adjacency, int g) {
    const int n = adjacency.rows();
    const IntMat I = IntMat::identity(n);
    const IntMat Z(n, n);

    // Indices 0..2g+2 so periodicity and reflection can use the same run.
    std::vector<IntMat> F{I, adjacency};
    for (int l = 2; l <= 2 * g + 2; ++l) F.push_back(adjacency * F[l - 1] - F[l - 2]);

    Su2Report r;
    r.terminates = F[g - 1].is_zero();
    const IntMat& P = F[g - 2];
    r.p_involution = P * P == I;
    r.p_permutation = P.is_permutation();

    for (int l = 0; l <= g - 2 && r.nonnegative; ++l)
        for (int i = 0; i < n && r.nonnegative; ++i)
            for (int j = 0; j < n; ++j)
                if (F[l].at(i, j) < 0) {
                    r.nonnegative = false;
                    break;
                }

    // Cleared identity: (1 - sG + s^2) X(s) = 1 + s^g P with X = sum F_l s^l.
    for (int l = 0; l <= g && r.recursion_identity; ++l) {
        IntMat term = Z;
        if (l <= g - 2) term = term + F[l];
        if (l >= 1 && l <= g - 1) term = term - adjacency * F[l - 1];
        if (l >= 2) term = term + F[l - 2];
        IntMat expected = l == 0 ? I : (l == g ? P : Z);
        if (!(term == expected)) r.recursion_identity = false;
    }

    for (int l = 0; l <= 2 && r.periodic; ++l)
        if (!(F[l + 2 * g] == F[l])) r.periodic = false;
    for (int l = 0; l <= g - 2 && r.reflection; ++l)
        if (!(F[l + g] == F[g - 2 - l].scaled(-1))) r.reflection = false;

    r.F.assign(F.begin(), F.begin() + (g - 1));
    return r;
}

}  // namespace su3f
