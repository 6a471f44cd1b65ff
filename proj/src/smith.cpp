#include "surgery/smith.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace surgery {

std::vector<Int> SNFResult::diagonal() const {
    std::vector<Int> out;
    int k = std::min(d.rows(), d.cols());
    for (int i = 0; i < k; ++i)
        out.push_back(d.at(i, i));
    return out;
}

std::vector<Int> SNFResult::invariant_factors() const {
    std::vector<Int> out;
    for (const auto& v : diagonal())
        if (v != 0)
            out.push_back(v);
    return out;
}

long SNFResult::rank() const {
    return static_cast<long>(invariant_factors().size());
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? -v : v; }

// Classic Smith reduction with minimal-|entry| pivoting. U and V are
// optional so the torsion-core path can skip transform bookkeeping.
void dense_smith(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
    const int m = d.rows(), n = d.cols();
    auto row_sub = [&](int dst, int src, const Int& q) {
        for (int c = 0; c < n; ++c)
            d.at(dst, c) -= q * d.at(src, c);
        if (u)
            for (int c = 0; c < m; ++c)
                u->at(dst, c) -= q * u->at(src, c);
    };
    auto col_sub = [&](int dst, int src, const Int& q) {
        for (int r = 0; r < m; ++r)
            d.at(r, dst) -= q * d.at(r, src);
        if (v)
            for (int r = 0; r < n; ++r)
                v->at(r, dst) -= q * v->at(r, src);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b)
            return;
        for (int c = 0; c < n; ++c)
            std::swap(d.at(a, c), d.at(b, c));
        if (u)
            for (int c = 0; c < m; ++c)
                std::swap(u->at(a, c), u->at(b, c));
    };
    auto col_swap = [&](int a, int b) {
        if (a == b)
            return;
        for (int r = 0; r < m; ++r)
            std::swap(d.at(r, a), d.at(r, b));
        if (v)
            for (int r = 0; r < n; ++r)
                std::swap(v->at(r, a), v->at(r, b));
    };

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        // smallest nonzero |entry| of the remaining submatrix becomes the pivot
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const Int& w = d.at(i, j);
                if (w == 0)
                    continue;
                if (pi < 0 || abs_int(w) < abs_int(d.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;
        row_swap(t, pi);
        col_swap(t, pj);

        while (true) {
            bool residue = false;
            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0)
                    continue;
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0)
                    row_sub(i, t, q);
                if (d.at(i, t) != 0)
                    residue = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0)
                    continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0)
                    col_sub(j, t, q);
                if (d.at(t, j) != 0)
                    residue = true;
            }
            if (residue) {
                // a remainder strictly smaller than the pivot exists; re-pivot
                int ri = t, rj = t;
                for (int i = t; i < m; ++i)
                    for (int j = t; j < n; ++j) {
                        const Int& w = d.at(i, j);
                        if (w == 0)
                            continue;
                        if (abs_int(w) < abs_int(d.at(ri, rj))) {
                            ri = i;
                            rj = j;
                        }
                    }
                row_swap(t, ri);
                col_swap(t, rj);
                continue;
            }
            // pivot must divide the rest of the submatrix for the chain
            int bi = -1, bj = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0)
                break;
            row_sub(t, bi, Int(-1));  // row_t += row_bi, then reduce again
        }
        if (d.at(t, t) < 0) {
            for (int c = t; c < n; ++c)
                d.at(t, c) = -d.at(t, c);
            if (u)
                for (int c = 0; c < m; ++c)
                    u->at(t, c) = -u->at(t, c);
        }
    }
}

// Sparse elimination of ±1 pivots. Rows are kept as sorted (col, value)
// vectors; a column-to-rows index drives pivot selection. Only what the
// caller asks for (right-hand side, column-operation log) is tracked.
class SparseElim {
public:
    struct Pivot {
        int row, col;
        int value;  // ±1
    };
    struct ColOp {
        int target, src;
        Int k;  // col_target -= k * col_src
    };

    SparseElim(const SparseIntMatrix& a, std::vector<Int>* rhs, bool track_col_ops)
        : rows_(a.rows()), cols_(a.cols()), rhs_(rhs), track_(track_col_ops) {
        row_.resize(static_cast<size_t>(rows_));
        colrows_.resize(static_cast<size_t>(cols_));
        row_done_.assign(static_cast<size_t>(rows_), 0);
        col_done_.assign(static_cast<size_t>(cols_), 0);
        col_dirty_.assign(static_cast<size_t>(cols_), 1);
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : a.column(c)) {
                row_[static_cast<size_t>(r)].emplace_back(c, v);
                colrows_[static_cast<size_t>(c)].insert(r);
            }
        // columns of a are row-sorted, so each row_ vector is col-sorted
        bucket_.resize(static_cast<size_t>(rows_) + 1);
        for (int c = 0; c < cols_; ++c)
            bucket_[colrows_[static_cast<size_t>(c)].size()].insert(c);
    }

    void run() {
        while (true) {
            auto piv = find_pivot();
            if (piv.row < 0)
                break;
            eliminate(piv);
        }
    }

    const std::vector<Pivot>& pivots() const { return pivots_; }
    const std::vector<ColOp>& col_ops() const { return col_ops_; }

    // Dense matrix of the remaining (non-pivoted, nonzero) block.
    IntMatrix core(std::vector<int>& core_rows, std::vector<int>& core_cols) const {
        core_rows.clear();
        core_cols.clear();
        std::vector<int> col_index(static_cast<size_t>(cols_), -1);
        for (int c = 0; c < cols_; ++c)
            if (!col_done_[static_cast<size_t>(c)] && !colrows_[static_cast<size_t>(c)].empty()) {
                col_index[static_cast<size_t>(c)] = static_cast<int>(core_cols.size());
                core_cols.push_back(c);
            }
        for (int r = 0; r < rows_; ++r)
            if (!row_done_[static_cast<size_t>(r)] && !row_[static_cast<size_t>(r)].empty())
                core_rows.push_back(r);
        IntMatrix m(static_cast<int>(core_rows.size()), static_cast<int>(core_cols.size()));
        for (size_t i = 0; i < core_rows.size(); ++i)
            for (const auto& [c, v] : row_[static_cast<size_t>(core_rows[i])])
                m.at(static_cast<int>(i), col_index[static_cast<size_t>(c)]) = v;
        return m;
    }

    // Active rows that ended up empty (their equation reads 0 = b).
    std::vector<int> empty_active_rows() const {
        std::vector<int> out;
        for (int r = 0; r < rows_; ++r)
            if (!row_done_[static_cast<size_t>(r)] && row_[static_cast<size_t>(r)].empty())
                out.push_back(r);
        return out;
    }

private:
    const Int* value_at(int r, int c) const {
        const auto& row = row_[static_cast<size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it == row.end() || it->first != c)
            return nullptr;
        return &it->second;
    }

    Pivot find_pivot() {
        for (size_t nnz = 1; nnz < bucket_.size(); ++nnz) {
            for (auto it = bucket_[nnz].begin(); it != bucket_[nnz].end(); ++it) {
                int c = *it;
                if (!col_dirty_[static_cast<size_t>(c)])
                    continue;
                int best_row = -1;
                size_t best_len = 0;
                int best_val = 0;
                for (int r : colrows_[static_cast<size_t>(c)]) {
                    const Int* v = value_at(r, c);
                    if (*v == 1 || *v == -1) {
                        size_t len = row_[static_cast<size_t>(r)].size();
                        if (best_row < 0 || len < best_len ||
                            (len == best_len && r < best_row)) {
                            best_row = r;
                            best_len = len;
                            best_val = (*v == 1) ? 1 : -1;
                        }
                    }
                }
                if (best_row >= 0)
                    return Pivot{best_row, c, best_val};
                col_dirty_[static_cast<size_t>(c)] = 0;
            }
        }
        return Pivot{-1, -1, 0};
    }

    void bucket_move(int c, size_t old_nnz, size_t new_nnz) {
        if (old_nnz == new_nnz)
            return;
        bucket_[old_nnz].erase(c);
        bucket_[new_nnz].insert(c);
    }

    void touch_col(int c, int r, bool insert, bool erase) {
        auto& cr = colrows_[static_cast<size_t>(c)];
        size_t old_nnz = cr.size();
        if (insert)
            cr.insert(r);
        if (erase)
            cr.erase(r);
        bucket_move(c, old_nnz, cr.size());
        col_dirty_[static_cast<size_t>(c)] = 1;
    }

    void eliminate(const Pivot& p) {
        const auto& prow = row_[static_cast<size_t>(p.row)];
        std::vector<int> targets(colrows_[static_cast<size_t>(p.col)].begin(),
                                 colrows_[static_cast<size_t>(p.col)].end());
        for (int r : targets) {
            if (r == p.row)
                continue;
            const Int* a = value_at(r, p.col);
            Int mult = (*a) * p.value;  // a / pivot, pivot = ±1
            // row_r -= mult * row_pivot, by sorted merge
            auto& row = row_[static_cast<size_t>(r)];
            std::vector<std::pair<int, Int>> merged;
            merged.reserve(row.size() + prow.size());
            size_t i = 0, j = 0;
            while (i < row.size() || j < prow.size()) {
                if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
                    merged.push_back(row[i]);
                    ++i;
                } else if (i == row.size() || prow[j].first < row[i].first) {
                    Int nv = -mult * prow[j].second;
                    touch_col(prow[j].first, r, true, false);
                    merged.emplace_back(prow[j].first, std::move(nv));
                    ++j;
                } else {
                    Int nv = row[i].second - mult * prow[j].second;
                    if (nv == 0)
                        touch_col(row[i].first, r, false, true);
                    else {
                        col_dirty_[static_cast<size_t>(row[i].first)] = 1;
                        merged.emplace_back(row[i].first, std::move(nv));
                    }
                    ++i;
                    ++j;
                }
            }
            row = std::move(merged);
            if (rhs_)
                (*rhs_)[static_cast<size_t>(r)] -= mult * (*rhs_)[static_cast<size_t>(p.row)];
        }
        // retire the pivot row; the implied column operations only touch it
        for (const auto& [c, w] : prow) {
            if (track_ && c != p.col)
                col_ops_.push_back(ColOp{c, p.col, w * p.value});
            touch_col(c, p.row, false, true);
        }
        row_[static_cast<size_t>(p.row)].clear();
        row_[static_cast<size_t>(p.row)].shrink_to_fit();
        row_done_[static_cast<size_t>(p.row)] = 1;
        col_done_[static_cast<size_t>(p.col)] = 1;
        bucket_[colrows_[static_cast<size_t>(p.col)].size()].erase(p.col);
        pivots_.push_back(p);
    }

    int rows_, cols_;
    std::vector<Int>* rhs_;
    bool track_;
    std::vector<std::vector<std::pair<int, Int>>> row_;
    std::vector<std::unordered_set<int>> colrows_;
    std::vector<std::set<int>> bucket_;
    std::vector<char> row_done_, col_done_, col_dirty_;
    std::vector<Pivot> pivots_;
    std::vector<ColOp> col_ops_;
};

} // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
    SNFResult res;
    res.d = a;
    res.u = IntMatrix::identity(a.rows());
    res.v = IntMatrix::identity(a.cols());
    dense_smith(res.d, &res.u, &res.v);
    return res;
}

std::vector<Int> invariant_factors(const SparseIntMatrix& a) {
    SparseElim elim(a, nullptr, false);
    elim.run();
    std::vector<int> core_rows, core_cols;
    IntMatrix core = elim.core(core_rows, core_cols);
    dense_smith(core, nullptr, nullptr);
    std::vector<Int> factors(elim.pivots().size(), Int(1));
    for (int i = 0; i < std::min(core.rows(), core.cols()); ++i)
        if (core.at(i, i) != 0)
            factors.push_back(core.at(i, i));
    return factors;
}

long rank(const SparseIntMatrix& a) {
    return static_cast<long>(invariant_factors(a).size());
}

std::optional<std::vector<Int>> solve(const SparseIntMatrix& a, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw structural_error("solve: rhs size mismatch");
    std::vector<Int> rhs = b;
    SparseElim elim(a, &rhs, true);
    elim.run();

    for (int r : elim.empty_active_rows())
        if (rhs[static_cast<size_t>(r)] != 0)
            return std::nullopt;

    std::vector<int> core_rows, core_cols;
    IntMatrix core = elim.core(core_rows, core_cols);

    std::vector<Int> x(static_cast<size_t>(a.cols()));
    if (core.rows() > 0 || core.cols() > 0) {
        SNFResult snf;
        snf.d = core;
        snf.u = IntMatrix::identity(core.rows());
        snf.v = IntMatrix::identity(core.cols());
        dense_smith(snf.d, &snf.u, &snf.v);
        std::vector<Int> bc(static_cast<size_t>(core.rows()));
        for (size_t i = 0; i < core_rows.size(); ++i)
            bc[i] = rhs[static_cast<size_t>(core_rows[i])];
        std::vector<Int> y = snf.u.apply(bc);
        std::vector<Int> z(static_cast<size_t>(core.cols()));
        int diag = std::min(core.rows(), core.cols());
        for (int i = 0; i < core.rows(); ++i) {
            const Int di = (i < diag) ? snf.d.at(i, i) : Int(0);
            if (di != 0) {
                if (y[static_cast<size_t>(i)] % di != 0)
                    return std::nullopt;
                z[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / di;
            } else if (y[static_cast<size_t>(i)] != 0) {
                return std::nullopt;
            }
        }
        std::vector<Int> xc = snf.v.apply(z);
        for (size_t j = 0; j < core_cols.size(); ++j)
            x[static_cast<size_t>(core_cols[j])] = xc[j];
    }
    for (const auto& p : elim.pivots())
        x[static_cast<size_t>(p.col)] = rhs[static_cast<size_t>(p.row)] * p.value;

    // undo the recorded column operations, last first
    const auto& ops = elim.col_ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
        x[static_cast<size_t>(it->src)] -= it->k * x[static_cast<size_t>(it->target)];
    return x;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    int diag = std::min(a.rows(), a.cols());
    std::vector<int> free_cols;
    for (int j = 0; j < a.cols(); ++j)
        if (j >= diag || snf.d.at(j, j) == 0)
            free_cols.push_back(j);
    IntMatrix k(a.cols(), static_cast<int>(free_cols.size()));
    for (size_t jj = 0; jj < free_cols.size(); ++jj)
        for (int r = 0; r < a.cols(); ++r)
            k.at(r, static_cast<int>(jj)) = snf.v.at(r, free_cols[jj]);
    return k;
}

} // namespace surgery
