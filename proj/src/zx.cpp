#include "surgery/zx.hpp"

#include <algorithm>

namespace surgery {

const std::vector<int>& ZXComplex::labels_at(int degree) const {
    static const std::vector<int> empty;
    int i = degree - chain.bottom_degree();
    if (i < 0 || i >= static_cast<int>(labels.size()))
        return empty;
    return labels[static_cast<size_t>(i)];
}

int ZXComplex::label_of(int degree, int index) const {
    return labels_at(degree)[static_cast<size_t>(index)];
}

const Simplex& ZXComplex::label_simplex(int degree, int index) const {
    return base->simplex(label_of(degree, index));
}

ZXComplex ZXComplex::shifted(int k) const {
    ZXComplex s = *this;
    s.chain = chain.shifted(k);
    return s;
}

namespace {

void check_label_shape(const ZXComplex& c) {
    if (!c.base)
        throw structural_error("ZXComplex: missing base complex");
    if (c.chain.empty()) {
        if (!c.labels.empty())
            throw structural_error("ZXComplex: labels on empty chain");
        return;
    }
    size_t degrees = static_cast<size_t>(c.chain.top_degree() - c.chain.bottom_degree() + 1);
    if (c.labels.size() != degrees)
        throw structural_error("ZXComplex: label table does not cover all degrees");
    for (int r = c.chain.bottom_degree(); r <= c.chain.top_degree(); ++r)
        if (static_cast<int>(c.labels_at(r).size()) != c.chain.rank(r))
            throw structural_error("ZXComplex: label count mismatch in degree " + std::to_string(r));
}

} // namespace

SupportCheck check_support(const ZXComplex& c) {
    check_label_shape(c);
    SupportCheck out;
    for (int r = c.chain.bottom_degree() + 1; r <= c.chain.top_degree(); ++r) {
        const SparseIntMatrix& d = c.chain.diff(r);
        for (int j = 0; j < d.cols(); ++j) {
            const Simplex& col_label = c.label_simplex(r, j);
            for (const auto& [i, v] : d.column(j)) {
                (void)v;
                const Simplex& row_label = c.label_simplex(r - 1, i);
                if (!row_label.contains(col_label)) {
                    out.ok = false;
                    out.violations.push_back(
                        SupportViolation{r, i, j, c.label_of(r - 1, i), c.label_of(r, j)});
                }
            }
        }
    }
    return out;
}

SupportCheck check_support(const ZXComplex& source, const ZXComplex& target,
                           const std::map<int, SparseIntMatrix>& mats) {
    SupportCheck out;
    for (const auto& [r, m] : mats) {
        for (int j = 0; j < m.cols(); ++j) {
            const Simplex& col_label = source.label_simplex(r, j);
            for (const auto& [i, v] : m.column(j)) {
                (void)v;
                const Simplex& row_label = target.label_simplex(r, i);
                if (!row_label.contains(col_label)) {
                    out.ok = false;
                    out.violations.push_back(
                        SupportViolation{r, i, j, target.label_of(r, i), source.label_of(r, j)});
                }
            }
        }
    }
    return out;
}

ZXMorphism::ZXMorphism(ZXComplex src, ZXComplex tgt, std::map<int, SparseIntMatrix> m)
    : source(std::move(src)), target(std::move(tgt)), mats(std::move(m)) {
    if (!source.base || !target.base || !(*source.base == *target.base))
        throw structural_error("ZXMorphism: source and target have different base complexes");
    // chain-map identity (shapes included)
    ChainMap check(source.chain, target.chain, mats);
    SupportCheck sc = check_support(source, target, mats);
    if (!sc.ok) {
        const auto& v = sc.violations.front();
        throw structural_error(
            "ZXMorphism: support violation in degree " + std::to_string(v.degree) + " at (" +
            std::to_string(v.row) + "," + std::to_string(v.col) + "): label " +
            target.base->simplex(v.row_label).to_string() + " does not contain " +
            source.base->simplex(v.col_label).to_string());
    }
}

SparseIntMatrix ZXMorphism::matrix(int degree) const {
    auto it = mats.find(degree);
    if (it != mats.end())
        return it->second;
    return SparseIntMatrix(target.chain.rank(degree), source.chain.rank(degree));
}

SupportCheck check_support(const ZXMorphism& f) {
    return check_support(f.source, f.target, f.mats);
}

ZXComplex label_simplicial_chains(const BarycentricSubdivision& sd) {
    ZXComplex out;
    out.base = std::make_shared<SimplicialComplex>(sd.base());
    out.chain = chain_complex_of(sd.derived());
    const SimplicialComplex& xp = sd.derived();
    for (int p = 0; p <= xp.dim(); ++p) {
        std::vector<int> lab;
        lab.reserve(static_cast<size_t>(xp.count_of_dim(p)));
        for (int i = 0; i < xp.count_of_dim(p); ++i)
            lab.push_back(xp.simplex_at(p, i).vertex(0));  // derived vertex 0 = minimal flag entry
        out.labels.push_back(std::move(lab));
    }
    return out;
}

ZXComplex label_simplicial_chains(const SimplicialComplex& x) {
    return label_simplicial_chains(BarycentricSubdivision(x));
}

ZXComplex labeled_dual_cochains(const SimplicialComplex& x, int n) {
    ZXComplex out;
    out.base = std::make_shared<SimplicialComplex>(x);
    out.chain = dualize(chain_complex_of(x), n);
    for (int r = out.chain.bottom_degree(); r <= out.chain.top_degree(); ++r) {
        int p = n - r;  // degree r holds duals of p-simplices
        std::vector<int> lab;
        for (int i = 0; i < x.count_of_dim(p); ++i)
            lab.push_back(x.index_of(x.simplex_at(p, i)));
        out.labels.push_back(std::move(lab));
    }
    return out;
}

namespace {

std::vector<std::vector<char>> label_mask(const ZXComplex& c, int simplex_id) {
    std::vector<std::vector<char>> keep;
    for (int r = c.chain.bottom_degree(); r <= c.chain.top_degree(); ++r) {
        std::vector<char> mask(static_cast<size_t>(c.chain.rank(r)), 0);
        const auto& lab = c.labels_at(r);
        for (int i = 0; i < c.chain.rank(r); ++i)
            if (lab[static_cast<size_t>(i)] == simplex_id)
                mask[static_cast<size_t>(i)] = 1;
        keep.push_back(std::move(mask));
    }
    return keep;
}

} // namespace

IntChainComplex local_complex(const ZXComplex& c, const Simplex& s) {
    int id = c.base->index_of(s);
    if (id < 0)
        throw domain_error("local_complex: simplex " + s.to_string() + " not in base");
    if (c.chain.empty())
        return IntChainComplex();
    return masked_subquotient(c.chain, label_mask(c, id));
}

LocalComponent local_component(const ZXMorphism& f, const Simplex& s) {
    int id = f.source.base->index_of(s);
    if (id < 0)
        throw domain_error("local_component: simplex " + s.to_string() + " not in base");
    LocalComponent out;
    out.simplex = s;
    out.source = local_complex(f.source, s);
    out.target = local_complex(f.target, s);

    auto src_mask = label_mask(f.source, id);
    auto tgt_mask = label_mask(f.target, id);
    std::map<int, SparseIntMatrix> mats;
    for (int r = out.source.bottom_degree(); r <= out.source.top_degree(); ++r) {
        if (out.source.rank(r) == 0)
            continue;
        // column/row selections at label s
        std::vector<int> cols;
        const auto& smask = src_mask[static_cast<size_t>(r - f.source.chain.bottom_degree())];
        for (int i = 0; i < f.source.chain.rank(r); ++i)
            if (smask[static_cast<size_t>(i)])
                cols.push_back(i);
        std::vector<int> row_map(static_cast<size_t>(f.target.chain.rank(r)), -1);
        int cnt = 0;
        if (r >= f.target.chain.bottom_degree() && r <= f.target.chain.top_degree()) {
            const auto& tmask = tgt_mask[static_cast<size_t>(r - f.target.chain.bottom_degree())];
            for (int i = 0; i < f.target.chain.rank(r); ++i)
                if (tmask[static_cast<size_t>(i)])
                    row_map[static_cast<size_t>(i)] = cnt++;
        }
        mats[r] = f.matrix(r).submatrix(row_map, cnt, cols);
    }
    out.map = ChainMap(out.source, out.target, std::move(mats));
    return out;
}

LocalEquivalenceReport is_local_equivalence(const ZXMorphism& f) {
    LocalEquivalenceReport out;
    for (const auto& s : f.source.base->simplices()) {
        LocalComponent loc = local_component(f, s);
        HomologySummary h = homology(mapping_cone(loc.map));
        if (!h.trivial()) {
            out.ok = false;
            out.defects[s] = std::move(h);
        }
    }
    return out;
}

IntChainComplex assemble(const ZXComplex& c) {
    return c.chain;
}

ChainMap assemble(const ZXMorphism& f) {
    return ChainMap(f.source.chain, f.target.chain, f.mats);
}

ChainDual chain_dual_with_basis(const ZXComplex& c) {
    check_label_shape(c);
    const SimplicialComplex& x = *c.base;
    const int nsimp = x.simplex_count();

    ChainDual out;
    out.complex.base = c.base;
    if (c.chain.empty())
        return out;

    // TC_r at label σ is indexed by basis elements of C_{-|σ|-r} with label ⊇ σ
    const int cb = c.chain.bottom_degree(), ct = c.chain.top_degree();
    int max_dim = x.dim();
    const int bottom = -max_dim - ct, top = -cb;

    std::vector<std::vector<ChainDualBasisElement>> basis;
    std::vector<std::vector<int>> labels;
    // index_of[r - bottom] : (σ, i) -> position
    std::vector<std::map<std::pair<int, int>, int>> index_of;
    for (int r = bottom; r <= top; ++r) {
        std::vector<ChainDualBasisElement> bas;
        std::vector<int> lab;
        std::map<std::pair<int, int>, int> idx;
        for (int sigma = 0; sigma < nsimp; ++sigma) {
            int d = -x.simplex(sigma).dim() - r;
            if (d < cb || d > ct)
                continue;
            const auto& clab = c.labels_at(d);
            for (int i = 0; i < c.chain.rank(d); ++i) {
                if (!x.simplex(clab[static_cast<size_t>(i)]).contains(x.simplex(sigma)))
                    continue;
                idx[{sigma, i}] = static_cast<int>(bas.size());
                bas.push_back(ChainDualBasisElement{sigma, i});
                lab.push_back(sigma);
            }
        }
        basis.push_back(std::move(bas));
        labels.push_back(std::move(lab));
        index_of.push_back(std::move(idx));
    }

    // transposed differentials of C give row access
    std::map<int, SparseIntMatrix> diff_t;
    for (int d = cb + 1; d <= ct; ++d)
        diff_t[d] = c.chain.diff(d).transpose();

    std::vector<int> ranks;
    for (const auto& b : basis)
        ranks.push_back(static_cast<int>(b.size()));
    std::vector<SparseIntMatrix> diffs;
    for (int r = bottom + 1; r <= top; ++r) {
        const auto& src = basis[static_cast<size_t>(r - bottom)];
        const auto& tgt_idx = index_of[static_cast<size_t>(r - bottom - 1)];
        SparseIntMatrix m(ranks[static_cast<size_t>(r - bottom - 1)],
                          ranks[static_cast<size_t>(r - bottom)]);
        for (size_t j = 0; j < src.size(); ++j) {
            const int sigma = src[j].label;
            const int i = src[j].underlying_index;
            const Simplex& sig = x.simplex(sigma);
            const int d = -sig.dim() - r;
            std::vector<std::pair<int, Int>> col;
            // (a) dual of d_C within the label σ, sign (-1)^r on degree-r elements
            if (d + 1 <= ct) {
                const int sgn = (((r % 2) + 2) % 2 == 0) ? 1 : -1;
                auto it = diff_t.find(d + 1);
                if (it != diff_t.end()) {
                    for (const auto& [ip, v] : it->second.column(i)) {
                        auto tpos = tgt_idx.find({sigma, ip});
                        if (tpos != tgt_idx.end())
                            col.emplace_back(tpos->second, sgn * v);
                    }
                }
            }
            // (b) label-raising components σ -> σ ∪ {w} for w in label(b) \ σ
            const Simplex& blab = c.label_simplex(d, i);
            for (int w : blab.vertices()) {
                if (sig.has_vertex(w))
                    continue;
                std::vector<int> verts = sig.vertices();
                verts.push_back(w);
                Simplex tau{std::move(verts)};
                int tau_id = x.index_of(tau);
                if (tau_id < 0)
                    throw structural_error("chain_dual: coface missing from face-closed complex");
                auto tpos = tgt_idx.find({tau_id, i});
                if (tpos == tgt_idx.end())
                    throw structural_error("chain_dual: expected dual basis element missing");
                col.emplace_back(tpos->second, Simplex::incidence_sign(tau, sig));
            }
            m.set_unsorted(static_cast<int>(j), std::move(col));
        }
        diffs.push_back(std::move(m));
    }

    try {
        out.complex.chain = IntChainComplex(bottom, std::move(ranks), std::move(diffs));
    } catch (const structural_error& e) {
        throw structural_error(std::string("chain_dual: sign convention broken: ") + e.what());
    }
    out.complex.labels = std::move(labels);
    out.basis = std::move(basis);
    return out;
}

ZXComplex chain_dual(const ZXComplex& c) {
    return chain_dual_with_basis(c).complex;
}

ZXMorphism double_dual_evaluation(const ZXComplex& c) {
    ChainDual t1 = chain_dual_with_basis(c);
    ChainDual t2 = chain_dual_with_basis(t1.complex);
    const SimplicialComplex& x = *c.base;

    std::map<int, SparseIntMatrix> mats;
    const IntChainComplex& tt = t2.complex.chain;
    for (int r = tt.bottom_degree(); r <= tt.top_degree(); ++r) {
        if (tt.rank(r) == 0 || c.chain.rank(r) == 0)
            continue;
        SparseIntMatrix m(c.chain.rank(r), tt.rank(r));
        const auto& bas2 = t2.basis[static_cast<size_t>(r - tt.bottom_degree())];
        for (size_t j = 0; j < bas2.size(); ++j) {
            const int sigma = bas2[j].label;
            const int d1 = -x.simplex(sigma).dim() - r;  // degree in TC
            const auto& bas1 =
                t1.basis[static_cast<size_t>(d1 - t1.complex.chain.bottom_degree())];
            const auto& middle = bas1[static_cast<size_t>(bas2[j].underlying_index)];
            if (middle.label != sigma)
                continue;  // evaluation kills τ != σ
            // e(σ,(σ,b)) = (-1)^{deg(b)(|σ|+1)} b
            const int deg_b = -x.simplex(sigma).dim() - d1;  // == r
            const int exponent = deg_b * (x.simplex(sigma).dim() + 1);
            const int sgn = (((exponent % 2) + 2) % 2 == 0) ? 1 : -1;
            m.set_unsorted(static_cast<int>(j), {{middle.underlying_index, Int(sgn)}});
        }
        mats[r] = std::move(m);
    }
    return ZXMorphism(t2.complex, c, std::move(mats));
}

ZXComplex zx_mapping_cone(const ZXMorphism& f) {
    ZXComplex out;
    out.base = f.target.base;
    ChainMap plain(f.source.chain, f.target.chain, f.mats);
    out.chain = mapping_cone(plain);
    for (int r = out.chain.bottom_degree(); r <= out.chain.top_degree(); ++r) {
        std::vector<int> lab;
        lab.reserve(static_cast<size_t>(out.chain.rank(r)));
        const auto& tl = f.target.labels_at(r);
        lab.insert(lab.end(), tl.begin(), tl.end());
        const auto& sl = f.source.labels_at(r - 1);
        lab.insert(lab.end(), sl.begin(), sl.end());
        if (static_cast<int>(lab.size()) != out.chain.rank(r))
            throw structural_error("zx_mapping_cone: label bookkeeping mismatch");
        out.labels.push_back(std::move(lab));
    }
    return out;
}

} // namespace surgery
