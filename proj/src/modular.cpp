#include "modular.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "multiplicity.hpp"

namespace su3f {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct WeylElement {
    // Integer action on the shifted weight coordinates (x1, x2).
    std::array<std::array<int, 2>, 2> m;
    int det;
};

// The six elements generated by the two simple reflections.
const std::array<WeylElement, 6>& weyl_elements() {
    static const std::array<WeylElement, 6> els = [] {
        auto mul = [](const std::array<std::array<int, 2>, 2>& a,
                      const std::array<std::array<int, 2>, 2>& b) {
            std::array<std::array<int, 2>, 2> r{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            return r;
        };
        std::array<std::array<int, 2>, 2> e{{{1, 0}, {0, 1}}};
        std::array<std::array<int, 2>, 2> s1{{{-1, 0}, {1, 1}}};
        std::array<std::array<int, 2>, 2> s2{{{1, 1}, {0, -1}}};
        return std::array<WeylElement, 6>{{{e, 1},
                                           {s1, -1},
                                           {s2, -1},
                                           {mul(s1, s2), 1},
                                           {mul(s2, s1), 1},
                                           {mul(s1, mul(s2, s1)), -1}}};
    }();
    return els;
}

// Quadratic form pairing on weight coordinates: (2 1; 1 2)/3.
double form_pair(int x1, int x2, int y1, int y2) {
    return (2.0 * x1 * y1 + double(x1) * y2 + double(x2) * y1 + 2.0 * x2 * y2) / 3.0;
}

}  // namespace

SMatrix s_matrix(int level) {
    if (level < 0 || level > kModularLevelCap)
        throw std::invalid_argument("s_matrix: level outside the numeric-oracle range");
    const int n = level + 3;
    SMatrix s;
    s.level = level;
    s.weights = alcove(level);
    const int dim = static_cast<int>(s.weights.size());
    s.rows.assign(dim, std::vector<Complex>(dim));

    for (int i = 0; i < dim; ++i) {
        const int x1 = s.weights[i].l1 + 1, x2 = s.weights[i].l2 + 1;
        for (int j = 0; j < dim; ++j) {
            const int y1 = s.weights[j].l1 + 1, y2 = s.weights[j].l2 + 1;
            Complex acc = 0;
            for (const WeylElement& w : weyl_elements()) {
                const int wx1 = w.m[0][0] * x1 + w.m[0][1] * x2;
                const int wx2 = w.m[1][0] * x1 + w.m[1][1] * x2;
                const double phase = -kTwoPi * form_pair(wx1, wx2, y1, y2) / n;
                acc += double(w.det) * Complex(std::cos(phase), std::sin(phase));
            }
            s.rows[i][j] = acc;
        }
    }

    // Normalize: unit rows, then a positive real (0,0) entry.
    double alpha = 0;
    for (int j = 0; j < dim; ++j) alpha += std::norm(s.rows[0][j]);
    const double scale = 1.0 / std::sqrt(alpha);
    for (auto& row : s.rows)
        for (Complex& v : row) v *= scale;
    const Complex phase = s.rows[0][0] / std::abs(s.rows[0][0]);
    for (auto& row : s.rows)
        for (Complex& v : row) v /= phase;
    return s;
}

SMatrixInvariants s_matrix_invariants(const SMatrix& s) {
    const int n = s.size();
    SMatrixInvariants inv;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.symmetry_dev = std::max(inv.symmetry_dev, std::abs(s.at(i, j) - s.at(j, i)));

    std::vector<std::vector<Complex>> s2(n, std::vector<Complex>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex unit = 0, sq = 0;
            for (int l = 0; l < n; ++l) {
                unit += s.at(i, l) * std::conj(s.at(j, l));
                sq += s.at(i, l) * s.at(l, j);
            }
            inv.unitarity_dev =
                std::max(inv.unitarity_dev, std::abs(unit - (i == j ? 1.0 : 0.0)));
            s2[i][j] = sq;
        }

    for (int i = 0; i < n; ++i) {
        const int ci = alcove_index(s.level, conjugate(s.weights[i]));
        for (int j = 0; j < n; ++j)
            inv.conjugation_dev =
                std::max(inv.conjugation_dev, std::abs(std::conj(s.at(i, j)) - s.at(ci, j)));
    }

    // S^4 = (S^2)^2.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex v = 0;
            for (int l = 0; l < n; ++l) v += s2[i][l] * s2[l][j];
            inv.s4_dev = std::max(inv.s4_dev, std::abs(v - (i == j ? 1.0 : 0.0)));
        }

    inv.ok = inv.symmetry_dev <= kUnitarityTol && inv.unitarity_dev <= kUnitarityTol &&
             inv.conjugation_dev <= kUnitarityTol && inv.s4_dev <= kS4Tol;
    return inv;
}

VerlindeResult verlinde_fusion(const SMatrix& s) {
    const int n = s.size();
    VerlindeResult r;
    r.table.level = s.level;
    r.table.weights = s.weights;
    r.table.matrices.assign(n, IntMat(n, n));
    std::vector<Complex> u(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < n; ++x) u[x] = s.at(a, x) * s.at(b, x) / s.at(0, x);
            for (int c = 0; c < n; ++c) {
                Complex v = 0;
                for (int x = 0; x < n; ++x) v += u[x] * std::conj(s.at(c, x));
                const double rounded = std::round(v.real());
                const double dev = std::abs(v - rounded);
                r.max_deviation = std::max(r.max_deviation, dev);
                if (dev > kIntegralityTol)
                    throw std::domain_error("verlinde_fusion: non-integral coefficient");
                r.table.matrices[a].at(b, c) = static_cast<std::int64_t>(rounded);
            }
        }
    return r;
}

std::int64_t verlinde_coefficient(const SMatrix& s, const Triple& t) {
    const int a = alcove_index(s.level, t.lam);
    const int b = alcove_index(s.level, t.mu);
    const int c = alcove_index(s.level, t.nu);
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("verlinde_coefficient: weight outside the alcove");
    Complex v = 0;
    for (int x = 0; x < s.size(); ++x)
        v += s.at(a, x) * s.at(b, x) * std::conj(s.at(c, x)) / s.at(0, x);
    const double rounded = std::round(v.real());
    if (std::abs(v - rounded) > kIntegralityTol)
        throw std::domain_error("verlinde_coefficient: non-integral value");
    return static_cast<std::int64_t>(rounded);
}

RealColumnReport real_column_checks(const SMatrix& s) {
    const int k = s.level;
    const int n = k + 3;
    const int dim = s.size();
    RealColumnReport rep;
    rep.level = k;

    for (int mu = 0; 2 * mu <= k; ++mu) {
        const int sig = alcove_index(k, {mu, mu});
        const double m = mu + 1;

        // Column proportional to the three-sine combination.
        std::vector<double> f(dim);
        int ref = 0;
        for (int i = 0; i < dim; ++i) {
            const Weight la = s.weights[i];
            f[i] = std::sin(kTwoPi * m * (la.l1 + la.l2 + 2) / n) -
                   std::sin(kTwoPi * m * (la.l1 + 1) / n) -
                   std::sin(kTwoPi * m * (la.l2 + 1) / n);
            if (std::abs(f[i]) > std::abs(f[ref])) ref = i;
        }
        const Complex cst = s.at(ref, sig) / f[ref];
        for (int i = 0; i < dim; ++i)
            if (std::abs(s.at(i, sig) - cst * f[i]) > kUnitarityTol) rep.three_sine_ok = false;

        // Boundary-sum eigenvalue on the column.
        Complex boundary = 0;
        for (int l1 = 0; l1 <= k; ++l1) boundary += s.at(alcove_index(k, {l1, 0}), sig);
        boundary /= s.at(alcove_index(k, {0, 0}), sig);
        const double sn = std::sin(std::numbers::pi * m / n);
        const double target = n / (4.0 * sn * sn);
        if (std::abs(boundary - target) > kEigenvalueTol) rep.lambda1_eigen_ok = false;

        // Eigenvalue of 6 - G - G^T.
        double adj;
        if (k >= 1) {
            const Complex chi =
                s.at(alcove_index(k, {1, 0}), sig) / s.at(alcove_index(k, {0, 0}), sig);
            adj = 6.0 - 2.0 * chi.real();
        } else {
            adj = 6.0;
        }
        const double adj_target = 6.0 - 2.0 * (1.0 + 2.0 * std::cos(kTwoPi * m / n));
        if (std::abs(adj - adj_target) > kEigenvalueTol) rep.adjacency_eigen_ok = false;

        if (std::abs(adj * boundary.real() * 6.0 - 12.0 * n) > kEigenvalueTol)
            rep.product_ok = false;
    }

    for (int i = 0; i < dim; ++i) {
        Complex total = 0;
        for (int j = 0; j < dim; ++j) total += s.at(i, j);
        if (s.weights[i].l1 == s.weights[i].l2) {
            if (std::abs(total.imag()) > kUnitarityTol) rep.row_sum_ok = false;
        } else {
            if (std::abs(total) > kUnitarityTol) rep.row_sum_ok = false;
        }
    }
    return rep;
}

}  // namespace su3f
