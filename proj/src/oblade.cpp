#include "oblade.hpp"

#include <algorithm>
#include <stdexcept>

namespace su3f {

std::array<int, 9> edges_of(const OBlade& o) {
    return {
        o.f() + o.g(), o.f(), o.e(),  // m12, m23, m13
        o.b() + o.g(), o.b(), o.a(),  // n12, n23, n13
        o.d() + o.g(), o.d(), o.c(),  // l12, l23, l13
    };
}

bool is_valid(const OBlade& o) {
    for (int i = 0; i < 6; ++i)
        if (o.coords[i] < 0) return false;
    const auto e = edges_of(o);
    return std::all_of(e.begin(), e.end(), [](int v) { return v >= 0; });
}

Triple weights_of(const OBlade& o) {
    Triple t;
    t.lam = {o.b() + o.e() + o.g(), o.a() + o.f()};
    t.mu = {o.a() + o.d() + o.g(), o.b() + o.c()};
    t.nu = {o.d() + o.e(), o.c() + o.f() + o.g()};
    return t;
}

int threshold(const OBlade& o) {
    const int s = o.a() + o.c() + o.e() + o.g();
    return std::max({s + o.b() + o.f(), s + o.d() + o.f(), s + o.b() + o.d()});
}

std::vector<OBlade> enumerate_couplings(const Triple& t) {
    std::vector<OBlade> out;
    if (!dominant(t.lam) || !dominant(t.mu) || !dominant(t.nu)) return out;
    const int S1 = t.lam.l1 + t.mu.l1 + t.nu.l2;
    const int S2 = t.lam.l2 + t.mu.l2 + t.nu.l1;
    if ((S1 - S2) % 3 != 0) return out;
    const int g = (S1 - S2) / 3;
    // One free parameter once g is fixed; walk it over the window where the
    // first six coordinates stay non-negative.
    const int a_hi = std::min(t.lam.l2, t.mu.l1 - g);
    for (int a = 0; a <= a_hi; ++a) {
        const int f = t.lam.l2 - a;
        const int d = t.mu.l1 - g - a;
        const int e = t.nu.l1 - d;
        const int b = t.lam.l1 - g - e;
        const int c = t.mu.l2 - b;
        const OBlade o{{a, b, c, d, e, f, g}};
        if (is_valid(o)) out.push_back(o);
    }
    return out;
}

Triple psi_triple(const Triple& t) {
    const int l1 = t.lam.l1, l2 = t.lam.l2;
    const int m1 = t.mu.l1, m2 = t.mu.l2;
    const int n1 = t.nu.l1, n2 = t.nu.l2;
    const std::array<int, 6> forms = {
        2 * l1 + l2 - m1 + m2 + n1 - n2,  l1 + 2 * l2 + m1 - m2 - n1 + n2,
        -l1 + l2 + 2 * m1 + m2 + n1 - n2, l1 - l2 + m1 + 2 * m2 - n1 + n2,
        l1 - l2 + m1 - m2 + 2 * n1 + n2,  -l1 + l2 - m1 + m2 + n1 + 2 * n2,
    };
    for (int v : forms)
        if (v % 3 != 0) throw std::domain_error("psi undefined on this triple");
    for (int v : forms)
        if (v < 0) throw std::domain_error("psi image is not a dominant triple");
    return {{forms[0] / 3, forms[1] / 3}, {forms[2] / 3, forms[3] / 3}, {forms[4] / 3, forms[5] / 3}};
}

OBlade psi_oblade(const OBlade& o) {
    return OBlade{{o.a(), o.b() + o.g(), o.c(), o.d() + o.g(), o.e(), o.f() + o.g(), -o.g()}};
}

OBlade left_fork() { return OBlade{{0, 0, 0, 0, 0, 0, 1}}; }
OBlade right_fork() { return OBlade{{0, 1, 0, 1, 0, 1, -1}}; }

std::array<FundamentalOBlade, 8> fundamental_oblades() {
    std::array<FundamentalOBlade, 8> out;
    static constexpr std::array<const char*, 7> names = {"e1", "e2", "e3", "e4",
                                                         "e5", "e6", "left-fork"};
    for (int i = 0; i < 7; ++i) {
        OBlade o{};
        o.coords[static_cast<size_t>(i)] = 1;
        out[static_cast<size_t>(i)] = {names[static_cast<size_t>(i)], o};
    }
    out[7] = {"right-fork", right_fork()};
    return out;
}

}  // namespace su3f
