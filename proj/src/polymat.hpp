#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "intmat.hpp"

namespace su3f {

// Exponent pair of the monomial s^i t^j.
struct Mono {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

// Sparse bivariate integer polynomial.
class Poly2 {
public:
    Poly2() = default;

    void add(Mono m, std::int64_t c);
    std::int64_t coeff(Mono m) const;
    const std::map<Mono, std::int64_t>& terms() const { return terms_; }

    Poly2 operator+(const Poly2&) const;
    Poly2 operator-(const Poly2&) const;
    Poly2 shifted(int di, int dj) const;  // multiply by s^di t^dj
    friend bool operator==(const Poly2&, const Poly2&) = default;

    std::int64_t eval_ones() const;  // value at s = t = 1

private:
    std::map<Mono, std::int64_t> terms_;  // zero coefficients never stored
};

// Sparse bivariate polynomial with square integer-matrix coefficients.
class MatPoly {
public:
    explicit MatPoly(int dim = 0) : dim_(dim) {}
    static MatPoly constant(const IntMat& m);

    int dim() const { return dim_; }
    void add(Mono m, const IntMat& c);
    const IntMat* coeff(Mono m) const;  // nullptr when absent
    const std::map<Mono, IntMat>& terms() const { return terms_; }

    MatPoly operator+(const MatPoly&) const;
    MatPoly operator-(const MatPoly&) const;
    MatPoly operator*(const MatPoly&) const;  // matrix product per term pair
    MatPoly shifted(int di, int dj) const;
    MatPoly left_mul(const IntMat& m) const;   // m * poly
    MatPoly scaled(std::int64_t c) const;
    friend bool operator==(const MatPoly&, const MatPoly&);

    IntMat eval_ones() const;  // value at s = t = 1

    // First monomial (and entry) where the two polynomials differ;
    // std::nullopt when equal.  For failure reporting.
    struct Difference {
        Mono mono;
        int row = 0, col = 0;
    };
    std::optional<Difference> first_difference(const MatPoly& o) const;

private:
    int dim_ = 0;
    std::map<Mono, IntMat> terms_;  // zero matrices never stored
};

std::string format_mono(Mono m);  // "s^i t^j"

}  // namespace su3f
