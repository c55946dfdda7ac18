#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "umc/errors.hpp"

namespace umc {

// All chain-level arithmetic is exact. Smith normal form intermediates can
// exceed 64 bits even on small inputs, so the integer type is never fixed width.
using Int = boost::multiprecision::cpp_int;

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const {
        for (const Int& v : a_)
            if (v != 0) return false;
        return true;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }
    // row i += f * row j
    void add_row(int i, int j, const Int& f) {
        for (int c = 0; c < cols_; ++c) at(i, c) += f * at(j, c);
    }
    void add_col(int i, int j, const Int& f) {
        for (int r = 0; r < rows_; ++r) at(r, i) += f * at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
    }

    Matrix operator*(const Matrix& o) const {
        Matrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    if (o.at(k, j) != 0) out.at(i, j) += v * o.at(k, j);
            }
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Column-major sparse integer matrix; columns keep (row, value) entries
// sorted by row. Boundary matrices of normalized chains live here.
class SparseIntMatrix {
public:
    using Entry = std::pair<int, Int>;

    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Accumulates; zero results are dropped on normalize_column.
    void add(int r, int c, Int v) {
        auto& col = col_[c];
        for (auto& e : col) {
            if (e.first == r) {
                e.second += v;
                return;
            }
        }
        if (v != 0) col.emplace_back(r, std::move(v));
    }

    void finalize() {
        for (auto& col : col_) {
            col.erase(std::remove_if(col.begin(), col.end(),
                                     [](const Entry& e) { return e.second == 0; }),
                      col.end());
            std::sort(col.begin(), col.end(),
                      [](const Entry& a, const Entry& b) { return a.first < b.first; });
        }
    }

    const std::vector<Entry>& column(int c) const { return col_[c]; }

    long long nnz() const {
        long long n = 0;
        for (const auto& col : col_) n += (long long)col.size();
        return n;
    }

    Matrix to_dense() const {
        Matrix m(rows_, cols_);
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : col_[c]) m.at(r, c) = v;
        return m;
    }

    // (this * o) == 0, used for the exact dd=0 checks.
    bool compose_is_zero(const SparseIntMatrix& o) const {
        std::vector<Int> acc(rows_);
        std::vector<int> touched;
        for (int c = 0; c < o.cols(); ++c) {
            for (const auto& [mid, v] : o.column(c)) {
                for (const auto& [r, w] : col_[mid]) {
                    if (acc[r] == 0) touched.push_back(r);
                    acc[r] += v * w;
                }
            }
            for (int r : touched)
                if (acc[r] != 0) return false;
            for (int r : touched) acc[r] = 0;
            touched.clear();
        }
        return true;
    }

    // Basis reindexing (rows of degree n-1, columns of degree n).
    SparseIntMatrix permuted(const std::vector<int>& row_perm,
                             const std::vector<int>& col_perm) const {
        SparseIntMatrix out(rows_, cols_);
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : col_[c]) out.add(row_perm[r], col_perm[c], v);
        out.finalize();
        return out;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<Entry>> col_;
};

}  // namespace umc
