#include "paths.hpp"

#include <random>

namespace su3f {

namespace {

BigInt rising_product(int lo, int hi) {
    BigInt p = 1;
    for (int i = lo; i <= hi; ++i) p *= i;
    return p;
}

}  // namespace

Su3Sums su3_sums(int level) {
    FusionTable table = build_table(level);
    const int n = table.size();
    const IntMat zero(n, n);
    const IntMat& G = level >= 1 ? table.matrix({1, 0}) : zero;
    const IntMat& GT = level >= 1 ? table.matrix({0, 1}) : zero;

    Su3Sums r;
    r.level = level;
    BigInt sx = 0, sgx = 0;
    for (const IntMat& N : table.matrices) {
        sx += N.sum();
        sgx += (G * N).sum();
    }
    IntMat lambda(n, n);
    for (int p = 0; p <= level; ++p)
        lambda = lambda + table.matrix({p, 0}) + table.matrix({0, p}) +
                 table.matrix({p, level - p});
    lambda = lambda.scaled(2);

    r.direct_X = sx;
    r.direct_GX = sgx;
    r.direct_Lambda = lambda.sum();

    IntMat A = IntMat::identity(n).scaled(6) - G - GT;
    std::vector<Rat> y = solve_rational(A, std::vector<Rat>(n, Rat(1)));
    Rat sk = 0;
    for (const Rat& v : y) sk += v;
    r.direct_K = sk;

    r.formula_X = rising_product(level + 1, level + 5) *
                  (BigInt(level + 3) * (level + 3) + 5) / 1680;
    r.formula_GX = rising_product(level, level + 6) / 560;
    r.formula_Lambda = rising_product(level + 1, level + 5) / 20;
    r.formula_K = Rat((level + 1) * (level + 2), 4) * Rat((level + 4) * (level + 5), 60);

    r.x_ok = r.direct_X == r.formula_X;
    r.gx_ok = r.direct_GX == r.formula_GX;
    r.lambda_ok = r.direct_Lambda == r.formula_Lambda;
    r.k_ok = r.direct_K == r.formula_K;

    r.lambda_u_ok = true;
    std::vector<std::int64_t> lrows = lambda.row_sums();
    for (int i = 0; i < n; ++i)
        if (Rat(lrows[i]) != Rat(12 * (level + 3)) * y[i]) r.lambda_u_ok = false;

    r.six_combination_ok = 6 * sx - 2 * sgx == r.direct_Lambda;
    return r;
}

SigmaLambda1 sigma_lambda1_poly(int level) {
    FusionTable table = build_table(level);
    SigmaLambda1 r;
    r.level = level;
    r.matches_direct = true;
    for (int p = 0; p <= level; ++p) {
        BigInt c = BigInt(level + 2 - p) * (level + 1 - p) * (1 + p) * (2 + p) / 4;
        r.coeffs.push_back(c);
        if (BigInt(table.matrix({p, 0}).sum()) != c) r.matches_direct = false;
        r.value_at_one += c;
    }
    r.binomial_ok = r.value_at_one == binomial(level + 5, 5);
    return r;
}

PointCheckReport closed_form_point_checks(int level, int points, unsigned seed) {
    FusionTable table = build_table(level);
    const int n = table.size();
    const IntMat zero(n, n);
    const IntMat& G = level >= 1 ? table.matrix({1, 0}) : zero;

    std::vector<BigInt> wsum(table.size()), gsum(table.size());
    for (int i = 0; i < table.size(); ++i) {
        wsum[i] = table.matrices[i].sum();
        gsum[i] = (G * table.matrices[i]).sum();
    }
    auto boundary_sum = [&](const Rat& v) {
        Rat acc = 0;
        for (int p = 0; p <= level; ++p)
            acc += Rat(BigInt(level + 2 - p) * (level + 1 - p) * (1 + p) * (2 + p), 4) *
                   rat_pow(v, p);
        return acc;
    };

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(2, 8);
    PointCheckReport rep;
    while (rep.points < points) {
        Rat s(pick(rng), pick(rng));
        Rat t(pick(rng), pick(rng));
        if (s == 1 || t == 1 || s == t) continue;
        ++rep.points;
        Rat D = (s - 1) * (s - t) * (t - 1);
        Rat sx_direct = 0, sgx_direct = 0;
        for (int i = 0; i < table.size(); ++i) {
            Rat mono = rat_pow(s, table.weights[i].l1) * rat_pow(t, table.weights[i].l2);
            sx_direct += mono * Rat(wsum[i]);
            sgx_direct += mono * Rat(gsum[i]);
        }
        Rat sx_form = (boundary_sum(s) * (1 - s) * s +
                       boundary_sum(t / s) * rat_pow(s, level + 1) * t * (s - t) +
                       boundary_sum(Rat(1) / t) * rat_pow(t, level + 1) * (t - 1)) /
                      D;
        Rat sgx_form = (boundary_sum(s) * (1 - rat_pow(s, 3)) +
                        boundary_sum(Rat(1) / t) * rat_pow(t, level) * (rat_pow(t, 3) - 1) +
                        boundary_sum(t / s) * rat_pow(s, level) *
                            (rat_pow(s, 3) - rat_pow(t, 3))) /
                       D;
        if (sx_direct != sx_form || sgx_direct != sgx_form) {
            rep.ok = false;
            if (rep.detail.empty())
                rep.detail = std::string(sx_direct != sx_form ? "X" : "GX") + " sum at s=" +
                             format_rational(s) + " t=" + format_rational(t);
        }
    }
    return rep;
}

bool p_replacement_ok(const FusionTable& table) {
    return table.matrix({table.level, 0}).is_permutation();
}

DynkinDiagram dynkin(char family, int rank) {
    DynkinDiagram d;
    d.family = family;
    d.rank = rank;
    if (family == 'A' && rank >= 1) {
        d.adjacency = path_adjacency(rank);
        d.coxeter = rank + 1;
    } else if (family == 'D' && rank >= 4) {
        IntMat a(rank, rank);
        for (int i = 0; i < rank - 3; ++i) {
            a.at(i, i + 1) = 1;
            a.at(i + 1, i) = 1;
        }
        a.at(rank - 3, rank - 2) = a.at(rank - 2, rank - 3) = 1;
        a.at(rank - 3, rank - 1) = a.at(rank - 1, rank - 3) = 1;
        d.adjacency = a;
        d.coxeter = 2 * rank - 2;
    } else if (family == 'E' && rank >= 6 && rank <= 8) {
        IntMat a(rank, rank);
        for (int i = 0; i < rank - 2; ++i) {
            a.at(i, i + 1) = 1;
            a.at(i + 1, i) = 1;
        }
        a.at(2, rank - 1) = a.at(rank - 1, 2) = 1;
        d.adjacency = a;
        d.coxeter = rank == 6 ? 12 : rank == 7 ? 18 : 30;
    } else {
        throw std::invalid_argument("dynkin: unsupported diagram");
    }
    d.dual_coxeter = d.coxeter;
    d.name = std::string(1, family) + std::to_string(rank);
    return d;
}

PathStats su2_path_stats(const DynkinDiagram& diagram) {
    PathStats st;
    st.diagram = diagram;
    const int r = diagram.rank;
    const int g = diagram.coxeter;
    st.su2 = su2_generating(diagram.adjacency, g);
    const std::vector<IntMat>& F = st.su2.F;  // indices 0..g-2

    IntMat X(r, r);
    for (const IntMat& f : F) {
        X = X + f;
        std::int64_t dv = f.sum();
        st.d.push_back(dv);
        st.d_H += dv;
        st.d_B += dv * dv;
    }
    st.u = X.row_sums();
    st.v = X.col_sums();

    IntMat A = IntMat::identity(r).scaled(2) - diagram.adjacency;
    std::vector<Rat> y = solve_rational(A, std::vector<Rat>(r, Rat(1)));
    for (const Rat& v : y) st.sigma_K += v;

    st.d_H_formula_ok = Rat(st.d_H) == Rat(std::int64_t(g) * (g + 1) * r, 6);
    st.fdv_ok = st.sigma_K == Rat(std::int64_t(diagram.dual_coxeter) * (g + 1) * r, 12);
    st.d_H_twice_sigma_K_ok = Rat(st.d_H) == 2 * st.sigma_K;

    IntMat axt = A * X.transposed();
    st.literal_lambda_ok = axt == F[0] + F[r - 1];
    st.variant_lambda_ok = axt == F[0] + F[g - 2];
    st.f_rank_minus_1_permutation = F[r - 1].is_permutation();
    st.f_g_minus_2_permutation = F[g - 2].is_permutation();
    return st;
}

}  // namespace su3f
