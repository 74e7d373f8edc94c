#include "polymat.hpp"

#include <stdexcept>

namespace su3f {

void Poly2::add(Mono m, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t Poly2::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
}

Poly2 Poly2::shifted(int di, int dj) const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.add({m.i + di, m.j + dj}, c);
    return r;
}

std::int64_t Poly2::eval_ones() const {
    std::int64_t s = 0;
    for (const auto& [m, c] : terms_) {
        (void)m;
        s += c;
    }
    return s;
}

MatPoly MatPoly::constant(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("MatPoly: coefficient must be square");
    MatPoly r(m.rows());
    r.add({0, 0}, m);
    return r;
}

void MatPoly::add(Mono m, const IntMat& c) {
    if (c.rows() != dim_ || c.cols() != dim_)
        throw std::invalid_argument("MatPoly: coefficient dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const IntMat* MatPoly::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("MatPoly: dimension mismatch");
    MatPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

MatPoly MatPoly::operator-(const MatPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("MatPoly: dimension mismatch");
    MatPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c.scaled(-1));
    return r;
}

MatPoly MatPoly::operator*(const MatPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("MatPoly: dimension mismatch");
    MatPoly r(dim_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add({m1.i + m2.i, m1.j + m2.j}, c1 * c2);
    return r;
}

MatPoly MatPoly::shifted(int di, int dj) const {
    MatPoly r(dim_);
    for (const auto& [m, c] : terms_) r.add({m.i + di, m.j + dj}, c);
    return r;
}

MatPoly MatPoly::left_mul(const IntMat& m) const {
    MatPoly r(dim_);
    for (const auto& [mono, c] : terms_) r.add(mono, m * c);
    return r;
}

MatPoly MatPoly::scaled(std::int64_t c) const {
    MatPoly r(dim_);
    for (const auto& [mono, coeffm] : terms_) r.add(mono, coeffm.scaled(c));
    return r;
}

bool operator==(const MatPoly& x, const MatPoly& y) {
    return x.dim_ == y.dim_ && x.terms_ == y.terms_;
}

IntMat MatPoly::eval_ones() const {
    IntMat s(dim_, dim_);
    for (const auto& [m, c] : terms_) {
        (void)m;
        s = s + c;
    }
    return s;
}

std::optional<MatPoly::Difference> MatPoly::first_difference(const MatPoly& o) const {
    const IntMat zero(dim_, dim_);
    auto look = [&](const MatPoly& a, const MatPoly& b) -> std::optional<Difference> {
        for (const auto& [m, c] : a.terms_) {
            const IntMat* oc = b.coeff(m);
            const IntMat& other = oc ? *oc : zero;
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j)
                    if (c.at(i, j) != other.at(i, j)) return Difference{m, i, j};
        }
        return std::nullopt;
    };
    if (auto d = look(*this, o)) return d;
    return look(o, *this);
}

std::string format_mono(Mono m) {
    return "s^" + std::to_string(m.i) + " t^" + std::to_string(m.j);
}

}  // namespace su3f
