#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace su3f {

// Dense integer matrix; alcove sizes at desk scale stay small, so no sparsity.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMat: negative dimension");
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    std::int64_t at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    IntMat operator+(const IntMat& o) const {
        check_same_shape(o);
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    IntMat operator-(const IntMat& o) const {
        check_same_shape(o);
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMat: shape mismatch in product");
        IntMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int l = 0; l < cols_; ++l) {
                std::int64_t v = at(i, l);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(l, j);
            }
        return r;
    }

    IntMat scaled(std::int64_t c) const {
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
        return r;
    }

    IntMat transposed() const {
        IntMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
    }

    std::int64_t sum() const { return std::accumulate(a_.begin(), a_.end(), std::int64_t(0)); }

    std::vector<std::int64_t> row_sums() const {
        std::vector<std::int64_t> r(rows_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += at(i, j);
        return r;
    }

    std::vector<std::int64_t> col_sums() const {
        std::vector<std::int64_t> r(cols_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[j] += at(i, j);
        return r;
    }

    bool entries_in_01() const {
        return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0 || v == 1; });
    }

    bool is_permutation() const {
        if (rows_ != cols_ || !entries_in_01()) return false;
        auto rs = row_sums(), cs = col_sums();
        auto one = [](std::int64_t v) { return v == 1; };
        return std::all_of(rs.begin(), rs.end(), one) && std::all_of(cs.begin(), cs.end(), one);
    }

private:
    void check_same_shape(const IntMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMat: shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

}  // namespace su3f
