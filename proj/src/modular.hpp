#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fusion_table.hpp"

namespace su3f {

// The numeric oracle is double precision; these bounds are part of the
// contract and referenced by the tests.
inline constexpr int kModularLevelCap = 24;
inline constexpr double kUnitarityTol = 1e-9;
inline constexpr double kIntegralityTol = 1e-6;
inline constexpr double kEigenvalueTol = 1e-8;
inline constexpr double kS4Tol = 1e-8;

using Complex = std::complex<double>;

// Symmetric unitary matrix diagonalizing the level-k fusion family,
// alcove-indexed, normalized to a positive real (0,0) entry.
struct SMatrix {
    int level = 0;
    std::vector<Weight> weights;
    std::vector<std::vector<Complex>> rows;

    int size() const { return static_cast<int>(weights.size()); }
    const Complex& at(int i, int j) const { return rows[i][j]; }
};

// Weyl-sum construction.  Throws std::invalid_argument above the level cap.
SMatrix s_matrix(int level);

struct SMatrixInvariants {
    double symmetry_dev = 0;     // max |S - S^T|
    double unitarity_dev = 0;    // max |S S^dagger - 1|
    double conjugation_dev = 0;  // max |conj(S) - C S|
    double s4_dev = 0;           // max |S^4 - 1|
    bool ok = false;
};
SMatrixInvariants s_matrix_invariants(const SMatrix& s);

struct VerlindeResult {
    FusionTable table;         // rounded coefficients
    double max_deviation = 0;  // worst distance from an integer, pre-rounding
};
// Full table via the diagonalizing sum.  Throws std::domain_error when an
// entry is farther than the integrality tolerance from an integer.
VerlindeResult verlinde_fusion(const SMatrix& s);

// Single coefficient for spot checks; same integrality guarantee.
std::int64_t verlinde_coefficient(const SMatrix& s, const Triple& t);

struct RealColumnReport {
    int level = 0;
    bool three_sine_ok = true;       // (mu,mu) columns proportional to the sine combination
    bool lambda1_eigen_ok = true;    // boundary-sum eigenvalue closed form
    bool adjacency_eigen_ok = true;  // 6 - 2(1 + 2cos(...)) closed form
    bool product_ok = true;          // eigen(A) * eigen(Lambda1) * 6 == 12(level+3)
    bool row_sum_ok = true;          // row sums vanish off the real locus

    bool ok() const {
        return three_sine_ok && lambda1_eigen_ok && adjacency_eigen_ok && product_ok &&
               row_sum_ok;
    }
};
RealColumnReport real_column_checks(const SMatrix& s);

}  // namespace su3f
