#pragma once

#include <array>
#include <string>
#include <vector>

#include "basics.hpp"

namespace su3f {

// Pictograph for one coupling, stored in the left-fundamental coordinates
// (a,b,c,d,e,f,g).  The first six must be non-negative; g may be negative.
struct OBlade {
    std::array<int, 7> coords{};  // a, b, c, d, e, f, g

    int a() const { return coords[0]; }
    int b() const { return coords[1]; }
    int c() const { return coords[2]; }
    int d() const { return coords[3]; }
    int e() const { return coords[4]; }
    int f() const { return coords[5]; }
    int g() const { return coords[6]; }

    friend auto operator<=>(const OBlade&, const OBlade&) = default;
};

// The nine edge values in the order m12,m23,m13, n12,n23,n13, l12,l23,l13.
inline constexpr std::array<const char*, 9> kEdgeNames = {
    "m12", "m23", "m13", "n12", "n23", "n13", "l12", "l23", "l13"};
std::array<int, 9> edges_of(const OBlade& o);

// A pictograph is valid when a..f and all nine edges are non-negative.
bool is_valid(const OBlade& o);

// Reads (lam, mu; nu) off the coordinates.
Triple weights_of(const OBlade& o);

// The level at which this coupling first appears.
int threshold(const OBlade& o);

// All valid pictographs of the triple; count equals the classical
// multiplicity and their thresholds fill the window with no repeats.
// Triality violation yields the empty list.
std::vector<OBlade> enumerate_couplings(const Triple& t);

// Involution on triples.  Throws std::domain_error ("psi undefined on this
// triple") when the six linear forms are not all non-negative integers.
Triple psi_triple(const Triple& t);

// Coordinate form of the involution; threshold-preserving on valid input.
OBlade psi_oblade(const OBlade& o);

// The eight fundamental pictographs: seven left-coordinate basis elements
// plus the right fork.
struct FundamentalOBlade {
    std::string name;
    OBlade blade;
};
std::array<FundamentalOBlade, 8> fundamental_oblades();
OBlade left_fork();   // (0,0,0,0,0,0,1)
OBlade right_fork();  // (0,1,0,1,0,1,-1)

}  // namespace su3f
