#include "basics.hpp"

#include <charconv>
#include <stdexcept>

namespace su3f {

bool triality_match(const Triple& t) {
    return (triality(t.lam) + triality(t.mu) - triality(t.nu)) % 3 == 0;
}

std::vector<Weight> alcove(int level) {
    if (level < 0) throw std::invalid_argument("alcove: level must be >= 0");
    std::vector<Weight> out;
    out.reserve(static_cast<size_t>(alcove_size(level)));
    for (int n = 0; n <= level; ++n)
        for (int l1 = 0; l1 <= n; ++l1) out.push_back({l1, n - l1});
    return out;
}

int alcove_size(int level) {
    if (level < 0) throw std::invalid_argument("alcove_size: level must be >= 0");
    return (level + 1) * (level + 2) / 2;
}

int alcove_index(int level, Weight w) {
    if (level < 0) throw std::invalid_argument("alcove_index: level must be >= 0");
    if (!dominant(w) || norm(w) > level) return -1;
    int n = norm(w);
    return n * (n + 1) / 2 + w.l1;
}

AffineWeight affine(int level, Weight w) {
    if (!dominant(w)) throw std::invalid_argument("affine: weight must be dominant");
    if (norm(w) > level) throw std::invalid_argument("affine: weight is not integrable at this level");
    return {level - norm(w), w.l1, w.l2};
}

AffineWeight zeta(const AffineWeight& w) {
    if (w.l0 < 0 || w.l1 < 0 || w.l2 < 0)
        throw std::domain_error("zeta: affine weight is not integrable (negative component)");
    return {w.l2, w.l0, w.l1};
}

namespace {

int parse_nonneg(std::string_view s, const char* what) {
    int value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0)
        throw std::invalid_argument(std::string(what) + ": expected a non-negative integer, got '" +
                                    std::string(s) + "'");
    return value;
}

}  // namespace

Weight parse_weight(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("weight: expected 'l1,l2', got '" + text + "'");
    Weight w;
    w.l1 = parse_nonneg(std::string_view(text).substr(0, comma), "weight");
    w.l2 = parse_nonneg(std::string_view(text).substr(comma + 1), "weight");
    return w;
}

Triple parse_triple(const std::string& text) {
    auto a = text.find('/');
    auto b = (a == std::string::npos) ? std::string::npos : text.find('/', a + 1);
    if (a == std::string::npos || b == std::string::npos ||
        text.find('/', b + 1) != std::string::npos)
        throw std::invalid_argument("triple: expected 'l1,l2/m1,m2/n1,n2', got '" + text + "'");
    Triple t;
    t.lam = parse_weight(text.substr(0, a));
    t.mu = parse_weight(text.substr(a + 1, b - a - 1));
    t.nu = parse_weight(text.substr(b + 1));
    return t;
}

int parse_level(const std::string& text) {
    if (text == "inf") return kClassical;
    return parse_nonneg(text, "level");
}

std::string format_weight(Weight w) {
    return "(" + std::to_string(w.l1) + "," + std::to_string(w.l2) + ")";
}

std::string format_triple(const Triple& t) {
    return "(" + format_weight(t.lam) + "," + format_weight(t.mu) + ";" + format_weight(t.nu) + ")";
}

std::string format_level(int level) {
    return level == kClassical ? "inf" : std::to_string(level);
}

}  // namespace su3f
