#include "surgery/int_matrix.hpp"

#include <algorithm>

namespace surgery {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0)
            return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r))
                return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix t(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        t.a_[i] = -a_[i];
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw structural_error("matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(r, k);
            if (v == 0)
                continue;
            for (int c = 0; c < o.cols_; ++c)
                if (o.at(k, c) != 0)
                    p.at(r, c) += v * o.at(k, c);
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw structural_error("matrix sum shape mismatch");
    IntMatrix s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        s.a_[i] = a_[i] + o.a_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    return *this + o.negated();
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw structural_error("matrix apply shape mismatch");
    std::vector<Int> y(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0)
                y[static_cast<size_t>(r)] += at(r, c) * x[static_cast<size_t>(c)];
    return y;
}

Int IntMatrix::determinant() const {
    if (!is_square())
        throw domain_error("determinant of non-square matrix");
    int n = rows_;
    if (n == 0)
        return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    swap = r;
                    break;
                }
            if (swap < 0)
                return 0;
            for (int c = 0; c < n; ++c)
                std::swap(m.at(k, c), m.at(swap, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c)
                m.at(r, c) = (m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c)) / prev;
            m.at(r, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntMatrix IntMatrix::inverse_unimodular() const {
    if (!is_square())
        throw domain_error("inverse of non-square matrix");
    int n = rows_;
    // Gauss-Jordan over the rationals; entries of the result are integral
    // when det = ±1, which we verify at the end.
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(2 * n)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] = Rational(at(r, c));
        m[static_cast<size_t>(r)][static_cast<size_t>(n + r)] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw domain_error("inverse_unimodular: singular matrix");
        std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(piv)]);
        Rational p = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (auto& v : m[static_cast<size_t>(k)])
            v /= p;
        for (int r = 0; r < n; ++r) {
            if (r == k)
                continue;
            Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(k)];
            if (f == 0)
                continue;
            for (int c = 0; c < 2 * n; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * m[static_cast<size_t>(k)][static_cast<size_t>(c)];
        }
    }
    IntMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Rational& v = m[static_cast<size_t>(r)][static_cast<size_t>(n + c)];
            if (boost::multiprecision::denominator(v) != 1)
                throw domain_error("inverse_unimodular: matrix is not unimodular");
            inv.at(r, c) = boost::multiprecision::numerator(v);
        }
    return inv;
}

SparseIntMatrix SparseIntMatrix::identity(int n) {
    SparseIntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.push_entry(i, i, 1);
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
    SparseIntMatrix s(m.rows(), m.cols());
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            if (m.at(r, c) != 0)
                s.push_entry(c, r, m.at(r, c));
    return s;
}

IntMatrix SparseIntMatrix::to_dense() const {
    IntMatrix m(rows_, cols_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : column(c))
            m.at(r, c) = v;
    return m;
}

void SparseIntMatrix::push_entry(int col, int row, Int value) {
    if (value == 0)
        return;
    auto& cd = cols_data_[static_cast<size_t>(col)];
    if (!cd.empty() && cd.back().first >= row)
        throw structural_error("push_entry: rows not strictly increasing");
    cd.emplace_back(row, std::move(value));
}

void SparseIntMatrix::set_unsorted(int col, std::vector<std::pair<int, Int>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Int>> merged;
    for (auto& e : entries) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second == 0; }),
                 merged.end());
    cols_data_[static_cast<size_t>(col)] = std::move(merged);
}

size_t SparseIntMatrix::nonzero_count() const {
    size_t n = 0;
    for (const auto& c : cols_data_)
        n += c.size();
    return n;
}

bool SparseIntMatrix::is_zero() const {
    return nonzero_count() == 0;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t(cols_, rows_);
    // columns of the transpose are rows of *this; collect then sort
    std::vector<std::vector<std::pair<int, Int>>> rows_of(static_cast<size_t>(rows_));
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : column(c))
            rows_of[static_cast<size_t>(r)].emplace_back(c, v);
    for (int r = 0; r < rows_; ++r)
        t.cols_data_[static_cast<size_t>(r)] = std::move(rows_of[static_cast<size_t>(r)]);
    return t;
}

SparseIntMatrix SparseIntMatrix::negated() const {
    SparseIntMatrix t = *this;
    for (auto& cd : t.cols_data_)
        for (auto& [r, v] : cd)
            v = -v;
    return t;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& o) const {
    if (cols_ != o.rows_)
        throw structural_error("sparse product shape mismatch");
    SparseIntMatrix p(rows_, o.cols_);
    for (int c = 0; c < o.cols_; ++c) {
        std::vector<std::pair<int, Int>> acc;
        for (const auto& [k, v] : o.column(c))
            for (const auto& [r, w] : column(k))
                acc.emplace_back(r, v * w);
        p.set_unsorted(c, std::move(acc));
    }
    return p;
}

std::vector<Int> SparseIntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw structural_error("sparse apply shape mismatch");
    std::vector<Int> y(static_cast<size_t>(rows_));
    for (int c = 0; c < cols_; ++c) {
        if (x[static_cast<size_t>(c)] == 0)
            continue;
        for (const auto& [r, v] : column(c))
            y[static_cast<size_t>(r)] += v * x[static_cast<size_t>(c)];
    }
    return y;
}

void SparseIntMatrix::add_block(const SparseIntMatrix& o, int row_offset, int col_offset, int sign) {
    if (row_offset + o.rows() > rows_ || col_offset + o.cols() > cols_)
        throw structural_error("add_block out of range");
    for (int c = 0; c < o.cols(); ++c) {
        if (o.column(c).empty())
            continue;
        std::vector<std::pair<int, Int>> acc = cols_data_[static_cast<size_t>(col_offset + c)];
        for (const auto& [r, v] : o.column(c))
            acc.emplace_back(row_offset + r, sign > 0 ? v : -v);
        set_unsorted(col_offset + c, std::move(acc));
    }
}

SparseIntMatrix SparseIntMatrix::submatrix(const std::vector<int>& new_row_of, int new_rows,
                                           const std::vector<int>& keep_cols) const {
    SparseIntMatrix s(new_rows, static_cast<int>(keep_cols.size()));
    for (size_t j = 0; j < keep_cols.size(); ++j) {
        for (const auto& [r, v] : column(keep_cols[j])) {
            int nr = new_row_of[static_cast<size_t>(r)];
            if (nr >= 0)
                s.push_entry(static_cast<int>(j), nr, v);
        }
    }
    return s;
}

} // namespace surgery
