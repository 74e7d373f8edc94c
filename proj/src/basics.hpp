#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace su3f {

// Dominant weight of su(3) in the fundamental-weight basis.
struct Weight {
    int l1 = 0;
    int l2 = 0;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

// Ordered fusion argument (lam, mu; nu): nu is the output slot.
struct Triple {
    Weight lam, mu, nu;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Sentinel level for the classical (unbounded) product.
inline constexpr int kClassical = -1;

inline int norm(Weight w) { return w.l1 + w.l2; }
inline bool dominant(Weight w) { return w.l1 >= 0 && w.l2 >= 0; }
inline Weight conjugate(Weight w) { return {w.l2, w.l1}; }
inline int triality(Weight w) { return ((w.l1 + 2 * w.l2) % 3 + 3) % 3; }

// Triality is conserved: tau(lam) + tau(mu) == tau(nu) mod 3.
bool triality_match(const Triple& t);

// Level-k alcove in canonical order: ascending l1+l2, then ascending l1.
std::vector<Weight> alcove(int level);
int alcove_size(int level);
// Position of w in alcove(level); -1 when w lies outside.
int alcove_index(int level, Weight w);

// Affine dominant weight (l0, l1, l2); the level is the component sum.
struct AffineWeight {
    int l0 = 0, l1 = 0, l2 = 0;
    friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;
};

inline int level_of(const AffineWeight& w) { return w.l0 + w.l1 + w.l2; }
AffineWeight affine(int level, Weight w);
inline Weight finite_part(const AffineWeight& w) { return {w.l1, w.l2}; }

// Order-3 outer automorphism rotating the affine components.
// Throws std::domain_error when a component is negative (non-integrable input).
AffineWeight zeta(const AffineWeight& w);

// --- parsing / formatting -------------------------------------------------

// "l1,l2" with non-negative integers.  Throws std::invalid_argument.
Weight parse_weight(const std::string& text);
// "l1,l2/m1,m2/n1,n2".  Throws std::invalid_argument.
Triple parse_triple(const std::string& text);
// "inf" or a non-negative integer.  Throws std::invalid_argument.
int parse_level(const std::string& text);

std::string format_weight(Weight w);          // "(l1,l2)"
std::string format_triple(const Triple& t);   // "((l1,l2),(m1,m2);(n1,n2))"
std::string format_level(int level);          // "inf" or decimal

}  // namespace su3f
