#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "surgery/errors.hpp"

namespace surgery {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    IntMatrix transpose() const;
    IntMatrix negated() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    std::vector<Int> apply(const std::vector<Int>& x) const;

    /// Exact determinant (fraction-free Bareiss elimination).
    Int determinant() const;

    /// Exact inverse of a matrix with determinant ±1.
    IntMatrix inverse_unimodular() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Column-major sparse integer matrix; each column holds (row, value) pairs
/// sorted by row. The workhorse for boundary matrices of subdivisions, whose
/// dense form would not fit in memory.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(static_cast<size_t>(cols)) {}

    static SparseIntMatrix identity(int n);
    static SparseIntMatrix from_dense(const IntMatrix& m);
    IntMatrix to_dense() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Entries must be added in increasing row order per column.
    void push_entry(int col, int row, Int value);
    /// Arbitrary-order insertion; sorts and merges duplicates.
    void set_unsorted(int col, std::vector<std::pair<int, Int>> entries);

    const std::vector<std::pair<int, Int>>& column(int c) const {
        return cols_data_[static_cast<size_t>(c)];
    }

    size_t nonzero_count() const;
    bool is_zero() const;

    SparseIntMatrix transpose() const;
    SparseIntMatrix negated() const;
    SparseIntMatrix operator*(const SparseIntMatrix& o) const;

    std::vector<Int> apply(const std::vector<Int>& x) const;

    /// Block assembly: place o at (row_offset, col_offset), scaled by sign.
    void add_block(const SparseIntMatrix& o, int row_offset, int col_offset, int sign = 1);

    /// Rows/columns restricted to index subsets (order preserved);
    /// keep_row[i] < 0 drops row i, otherwise names its new index.
    SparseIntMatrix submatrix(const std::vector<int>& new_row_of, int new_rows,
                              const std::vector<int>& keep_cols) const;

    bool operator==(const SparseIntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && cols_data_ == o.cols_data_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<int, Int>>> cols_data_;
};

} // namespace surgery
