#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "intmat.hpp"

namespace su3f {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// base^e with integer e (negative exponents invert; base must be nonzero).
inline Rat rat_pow(const Rat& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return rat_pow(Rat(1) / base, -e);
    }
    Rat r = 1, b = base;
    for (int n = e; n > 0; n >>= 1) {
        if (n & 1) r *= b;
        b *= b;
    }
    return r;
}

inline BigInt binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    BigInt v = 1;
    for (int i = 1; i <= r; ++i) {
        v *= n - r + i;
        v /= i;
    }
    return v;
}

// Gauss-Jordan solve of A y = rhs over the rationals.
// Throws std::domain_error("singular matrix") when A is singular.
inline std::vector<Rat> solve_rational(const IntMat& A, const std::vector<Rat>& rhs) {
    const int n = A.rows();
    if (A.cols() != n || static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("solve_rational: shape mismatch");
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = A.at(i, j);
        m[i][n] = rhs[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix");
        std::swap(m[col], m[piv]);
        Rat pv = m[col][col];
        for (int j = col; j <= n; ++j) m[col][j] /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<Rat> y(n);
    for (int i = 0; i < n; ++i) y[i] = m[i][n];
    return y;
}

// "num" for integers, "num/den" otherwise.
inline std::string format_rational(const Rat& r) {
    BigInt num = numerator(r), den = denominator(r);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

}  // namespace su3f
