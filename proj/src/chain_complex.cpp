#include "surgery/chain_complex.hpp"

#include <algorithm>
#include <sstream>

#include "surgery/smith.hpp"

namespace surgery {

DegreeHomology HomologySummary::at(int degree) const {
    auto it = groups.find(degree);
    return it == groups.end() ? DegreeHomology{} : it->second;
}

void HomologySummary::set(int degree, DegreeHomology h) {
    if (h.trivial())
        groups.erase(degree);
    else
        groups[degree] = std::move(h);
}

HomologySummary HomologySummary::shifted(int k) const {
    HomologySummary s;
    for (const auto& [deg, h] : groups)
        s.groups[deg + k] = h;
    return s;
}

std::string HomologySummary::to_string() const {
    if (groups.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, h] : groups) {
        if (!first)
            os << ", ";
        first = false;
        os << "H_" << deg << " = ";
        bool any = false;
        if (h.betti == 1) {
            os << "Z";
            any = true;
        } else if (h.betti > 1) {
            os << "Z^" << h.betti;
            any = true;
        }
        for (const auto& t : h.torsion) {
            if (any)
                os << " + ";
            os << "Z/" << t;
            any = true;
        }
        if (!any)
            os << "0";
    }
    return os.str();
}

IntChainComplex::IntChainComplex(int bottom, std::vector<int> ranks,
                                 std::vector<SparseIntMatrix> diffs)
    : bottom_(bottom), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (!ranks_.empty() && diffs_.size() + 1 != ranks_.size())
        throw structural_error("chain complex: differential count does not match rank count");
    for (size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows() != ranks_[i] || diffs_[i].cols() != ranks_[i + 1])
            throw structural_error("chain complex: differential shape mismatch in degree " +
                                   std::to_string(bottom_ + static_cast<int>(i) + 1));
    }
    for (size_t i = 0; i + 1 < diffs_.size(); ++i) {
        if (!(diffs_[i] * diffs_[i + 1]).is_zero())
            throw structural_error("chain complex: d∘d != 0 at degree " +
                                   std::to_string(bottom_ + static_cast<int>(i) + 2));
    }
}

int IntChainComplex::rank(int degree) const {
    int i = degree - bottom_;
    if (i < 0 || i >= static_cast<int>(ranks_.size()))
        return 0;
    return ranks_[static_cast<size_t>(i)];
}

long IntChainComplex::total_rank() const {
    long t = 0;
    for (int r : ranks_)
        t += r;
    return t;
}

bool IntChainComplex::has_diff(int degree) const {
    int i = degree - bottom_ - 1;
    return i >= 0 && i < static_cast<int>(diffs_.size());
}

const SparseIntMatrix& IntChainComplex::diff(int degree) const {
    if (!has_diff(degree))
        throw structural_error("no differential at degree " + std::to_string(degree));
    return diffs_[static_cast<size_t>(degree - bottom_ - 1)];
}

SparseIntMatrix IntChainComplex::diff_or_zero(int degree) const {
    if (has_diff(degree))
        return diff(degree);
    return SparseIntMatrix(rank(degree - 1), rank(degree));
}

IntChainComplex IntChainComplex::shifted(int k) const {
    IntChainComplex s = *this;
    s.bottom_ += k;
    return s;
}

HomologySummary homology(const IntChainComplex& c) {
    HomologySummary out;
    if (c.empty())
        return out;
    const int bottom = c.bottom_degree(), top = c.top_degree();
    std::map<int, std::vector<Int>> factors;  // keyed by differential degree
    for (int r = bottom + 1; r <= top; ++r)
        factors[r] = invariant_factors(c.diff(r));
    for (int r = bottom; r <= top; ++r) {
        long rk_out = (r > bottom) ? static_cast<long>(factors[r].size()) : 0;
        long rk_in = (r < top) ? static_cast<long>(factors[r + 1].size()) : 0;
        DegreeHomology h;
        h.betti = c.rank(r) - rk_out - rk_in;
        if (r < top)
            for (const auto& d : factors[r + 1])
                if (d > 1)
                    h.torsion.push_back(d);
        out.set(r, std::move(h));
    }
    return out;
}

bool is_contractible(const IntChainComplex& c) {
    return homology(c).trivial();
}

IntChainComplex dualize(const IntChainComplex& c, int n) {
    if (c.empty())
        return c;
    const int bottom = n - c.top_degree();
    const int top = n - c.bottom_degree();
    std::vector<int> ranks;
    for (int r = bottom; r <= top; ++r)
        ranks.push_back(c.rank(n - r));
    std::vector<SparseIntMatrix> diffs;
    for (int r = bottom + 1; r <= top; ++r) {
        // d'_r = (-1)^r (d_{n-r+1})^T
        SparseIntMatrix t = c.diff(n - r + 1).transpose();
        if (((r % 2) + 2) % 2 == 1)
            t = t.negated();
        diffs.push_back(std::move(t));
    }
    return IntChainComplex(bottom, std::move(ranks), std::move(diffs));
}

ChainMap::ChainMap(IntChainComplex src, IntChainComplex tgt, std::map<int, SparseIntMatrix> m)
    : source(std::move(src)), target(std::move(tgt)), mats(std::move(m)) {
    for (const auto& [r, mat] : mats)
        if (mat.rows() != target.rank(r) || mat.cols() != source.rank(r))
            throw structural_error("chain map: shape mismatch in degree " + std::to_string(r));
    const int lo = std::min(source.bottom_degree(), target.bottom_degree());
    const int hi = std::max(source.top_degree(), target.top_degree());
    for (int r = lo + 1; r <= hi; ++r) {
        SparseIntMatrix lhs = target.diff_or_zero(r) * matrix(r);
        SparseIntMatrix rhs = matrix(r - 1) * source.diff_or_zero(r);
        if (!(lhs == rhs))
            throw structural_error("chain map identity fails in degree " + std::to_string(r));
    }
}

SparseIntMatrix ChainMap::matrix(int degree) const {
    auto it = mats.find(degree);
    if (it != mats.end())
        return it->second;
    return SparseIntMatrix(target.rank(degree), source.rank(degree));
}

ChainMap ChainMap::identity(const IntChainComplex& c) {
    std::map<int, SparseIntMatrix> mats;
    for (int r = c.bottom_degree(); r <= c.top_degree(); ++r)
        if (c.rank(r) > 0)
            mats[r] = SparseIntMatrix::identity(c.rank(r));
    return ChainMap(c, c, std::move(mats));
}

IntChainComplex mapping_cone(const ChainMap& f) {
    const IntChainComplex& s = f.source;
    const IntChainComplex& t = f.target;
    if (s.empty() && t.empty())
        return IntChainComplex();
    int bottom, top;
    if (s.empty()) {
        bottom = t.bottom_degree();
        top = t.top_degree();
    } else if (t.empty()) {
        bottom = s.bottom_degree() + 1;
        top = s.top_degree() + 1;
    } else {
        bottom = std::min(t.bottom_degree(), s.bottom_degree() + 1);
        top = std::max(t.top_degree(), s.top_degree() + 1);
    }
    std::vector<int> ranks;
    for (int r = bottom; r <= top; ++r)
        ranks.push_back(t.rank(r) + s.rank(r - 1));
    std::vector<SparseIntMatrix> diffs;
    for (int r = bottom + 1; r <= top; ++r) {
        SparseIntMatrix d(t.rank(r - 1) + s.rank(r - 2), t.rank(r) + s.rank(r - 1));
        if (t.has_diff(r))
            d.add_block(t.diff(r), 0, 0, 1);
        if (t.rank(r - 1) > 0 && s.rank(r - 1) > 0)
            d.add_block(f.matrix(r - 1), 0, t.rank(r), 1);
        if (s.has_diff(r - 1))
            d.add_block(s.diff(r - 1), t.rank(r - 1), t.rank(r), -1);
        diffs.push_back(std::move(d));
    }
    return IntChainComplex(bottom, std::move(ranks), std::move(diffs));
}

bool is_boundary(const IntChainComplex& c, int degree, const std::vector<Int>& w) {
    if (static_cast<int>(w.size()) != c.rank(degree))
        throw structural_error("is_boundary: chain size mismatch");
    bool zero = std::all_of(w.begin(), w.end(), [](const Int& v) { return v == 0; });
    if (zero)
        return true;
    if (!c.has_diff(degree + 1))
        return false;
    return solve(c.diff(degree + 1), w).has_value();
}

HomologyGenerators homology_generators(const IntChainComplex& c, int degree) {
    HomologyGenerators out;
    const int n = c.rank(degree);
    if (n == 0)
        return out;
    IntMatrix d_out = c.diff_or_zero(degree).to_dense();
    IntMatrix z = kernel_basis(d_out);  // n x k
    const int k = z.cols();
    if (k == 0)
        return out;

    IntMatrix m(k, 0);
    if (c.has_diff(degree + 1)) {
        IntMatrix b = c.diff(degree + 1).to_dense();
        // coordinates of the image inside the kernel lattice: z * y = b
        SNFResult zs = smith_normal_form(z);
        m = IntMatrix(k, b.cols());
        for (int j = 0; j < b.cols(); ++j) {
            std::vector<Int> col(static_cast<size_t>(n));
            for (int r = 0; r < n; ++r)
                col[static_cast<size_t>(r)] = b.at(r, j);
            std::vector<Int> ub = zs.u.apply(col);
            std::vector<Int> y(static_cast<size_t>(k));
            for (int i = 0; i < n; ++i) {
                const Int di = (i < k) ? zs.d.at(i, i) : Int(0);
                if (di != 0) {
                    if (ub[static_cast<size_t>(i)] % di != 0)
                        throw structural_error("homology_generators: image not in kernel lattice");
                    y[static_cast<size_t>(i)] = ub[static_cast<size_t>(i)] / di;
                } else if (ub[static_cast<size_t>(i)] != 0) {
                    throw structural_error("homology_generators: image not in kernel");
                }
            }
            std::vector<Int> coords = zs.v.apply(y);
            for (int i = 0; i < k; ++i)
                m.at(i, j) = coords[static_cast<size_t>(i)];
        }
    }

    SNFResult ms = smith_normal_form(m);
    IntMatrix basis_change = ms.u.inverse_unimodular();  // new kernel basis columns
    IntMatrix g = z * basis_change;
    const int diag = std::min(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) {
        Int di = (i < diag) ? ms.d.at(i, i) : Int(0);
        if (di == 1)
            continue;  // killed by the image
        std::vector<Int> gen(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r)
            gen[static_cast<size_t>(r)] = g.at(r, i);
        if (di == 0)
            out.free_part.push_back(std::move(gen));
        else
            out.torsion.emplace_back(std::move(gen), di);
    }
    return out;
}

} // namespace surgery
