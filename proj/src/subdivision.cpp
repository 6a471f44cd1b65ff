#include "surgery/subdivision.hpp"

#include <algorithm>

namespace surgery {

IntChainComplex chain_complex_of(const SimplicialComplex& x) {
    if (x.empty())
        return IntChainComplex();
    std::vector<int> ranks;
    for (int p = 0; p <= x.dim(); ++p)
        ranks.push_back(x.count_of_dim(p));
    std::vector<SparseIntMatrix> diffs;
    for (int p = 1; p <= x.dim(); ++p) {
        SparseIntMatrix d(x.count_of_dim(p - 1), x.count_of_dim(p));
        for (int j = 0; j < x.count_of_dim(p); ++j) {
            const Simplex& s = x.simplex_at(p, j);
            std::vector<std::pair<int, Int>> col;
            for (int i = 0; i <= p; ++i) {
                int row = x.local_index(s.face_omitting(i));
                col.emplace_back(row, (i % 2 == 0) ? 1 : -1);
            }
            d.set_unsorted(j, std::move(col));
        }
        diffs.push_back(std::move(d));
    }
    return IntChainComplex(0, std::move(ranks), std::move(diffs));
}

namespace {

// All strictly increasing chains in the face poset, as vertex lists of
// derived simplices (entries are base-simplex ids).
std::vector<Simplex> enumerate_flags(const SimplicialComplex& base) {
    const int n = base.simplex_count();
    std::vector<std::vector<int>> cofaces(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (base.simplex(j).dim() > base.simplex(i).dim() &&
                base.simplex(j).contains(base.simplex(i)))
                cofaces[static_cast<size_t>(i)].push_back(j);

    std::vector<Simplex> flags;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int last) -> void {
        flags.emplace_back(chain);
        for (int j : cofaces[static_cast<size_t>(last)]) {
            chain.push_back(j);
            self(self, j);
            chain.pop_back();
        }
    };
    for (int i = 0; i < n; ++i) {
        chain.assign(1, i);
        extend(extend, i);
    }
    return flags;
}

} // namespace

BarycentricSubdivision::BarycentricSubdivision(SimplicialComplex base) : base_(std::move(base)) {
    derived_ = SimplicialComplex(base_.name() + "'", enumerate_flags(base_));
}

DualCell dual_cell(const BarycentricSubdivision& sd, const Simplex& s) {
    if (!sd.base().contains(s))
        throw domain_error("dual_cell: simplex " + s.to_string() + " not in complex");
    std::vector<Simplex> cell, boundary;
    for (const auto& f : sd.derived().simplices()) {
        const Simplex& sigma0 = sd.min_flag_entry(f);
        if (!sigma0.contains(s))
            continue;
        cell.push_back(f);
        if (sigma0.dim() > s.dim())
            boundary.push_back(f);
    }
    DualCell d;
    d.center = s;
    d.cell = SimplicialComplex("D(" + s.to_string() + ")", std::move(cell));
    d.boundary = SimplicialComplex("dD(" + s.to_string() + ")", std::move(boundary));
    return d;
}

DualCell dual_cell(const SimplicialComplex& x, const Simplex& s) {
    return dual_cell(BarycentricSubdivision(x), s);
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::map<int, int> vertex_image)
    : source_(std::move(source)), target_(std::move(target)),
      vertex_image_(std::move(vertex_image)) {
    for (int i = 0; i < source_.count_of_dim(0); ++i) {
        int v = source_.simplex_at(0, i).vertex(0);
        if (vertex_image_.find(v) == vertex_image_.end())
            throw domain_error("simplicial map: vertex " + std::to_string(v) + " has no image");
    }
    for (const auto& s : source_.simplices()) {
        Simplex c = carrier(s);
        if (!target_.contains(c))
            throw domain_error("simplicial map: image of " + s.to_string() +
                               " is not a simplex of the target");
    }
}

int SimplicialMap::image_of_vertex(int v) const {
    auto it = vertex_image_.find(v);
    if (it == vertex_image_.end())
        throw domain_error("simplicial map: vertex " + std::to_string(v) + " has no image");
    return it->second;
}

Simplex SimplicialMap::carrier(const Simplex& s) const {
    std::vector<int> img;
    for (int v : s.vertices())
        img.push_back(image_of_vertex(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return Simplex(std::move(img));
}

ChainMap SimplicialMap::chain_map() const {
    IntChainComplex src = chain_complex_of(source_);
    IntChainComplex tgt = chain_complex_of(target_);
    std::map<int, SparseIntMatrix> mats;
    for (int p = 0; p <= source_.dim(); ++p) {
        SparseIntMatrix m(tgt.rank(p), src.rank(p));
        for (int j = 0; j < source_.count_of_dim(p); ++j) {
            const Simplex& s = source_.simplex_at(p, j);
            std::vector<int> img;
            for (int v : s.vertices())
                img.push_back(image_of_vertex(v));
            std::vector<int> sorted = img;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                continue;  // degenerate image
            int inversions = 0;
            for (size_t a = 0; a < img.size(); ++a)
                for (size_t b = a + 1; b < img.size(); ++b)
                    if (img[a] > img[b])
                        ++inversions;
            int row = target_.local_index(Simplex(sorted));
            m.set_unsorted(j, {{row, (inversions % 2 == 0) ? Int(1) : Int(-1)}});
        }
        mats[p] = std::move(m);
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(mats));
}

ChainMap subdivision_chain_map(const BarycentricSubdivision& sd) {
    const SimplicialComplex& x = sd.base();
    const SimplicialComplex& xp = sd.derived();
    IntChainComplex src = chain_complex_of(x);
    IntChainComplex tgt = chain_complex_of(xp);
    std::map<int, SparseIntMatrix> mats;
    for (int p = 0; p <= x.dim(); ++p) {
        SparseIntMatrix m(tgt.rank(p), src.rank(p));
        for (int j = 0; j < x.count_of_dim(p); ++j) {
            const Simplex& s = x.simplex_at(p, j);
            std::vector<std::pair<int, Int>> col;
            // flags with top s correspond to orderings of the vertices of s
            std::vector<int> order = s.vertices();
            std::sort(order.begin(), order.end());
            do {
                int sign = 1;
                std::vector<int> flag_ids;
                std::vector<int> partial;
                for (int k = 0; k <= p; ++k) {
                    partial.push_back(order[static_cast<size_t>(k)]);
                    std::vector<int> sorted = partial;
                    std::sort(sorted.begin(), sorted.end());
                    Simplex sk{sorted};
                    flag_ids.push_back(x.index_of(sk));
                    if (k > 0) {
                        // (-1)^k * incidence sign of adding order[k]
                        int pos = sk.position_of(order[static_cast<size_t>(k)]);
                        if ((k + pos) % 2 == 1)
                            sign = -sign;
                    }
                }
                std::sort(flag_ids.begin(), flag_ids.end());
                int row = xp.local_index(Simplex(flag_ids));
                col.emplace_back(row, sign);
            } while (std::next_permutation(order.begin(), order.end()));
            m.set_unsorted(j, std::move(col));
        }
        mats[p] = std::move(m);
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(mats));
}

SimplicialMap last_vertex_map(const BarycentricSubdivision& sd) {
    std::map<int, int> img;
    for (int i = 0; i < sd.base().simplex_count(); ++i)
        img[i] = sd.base().simplex(i).max_vertex();
    return SimplicialMap(sd.derived(), sd.base(), std::move(img));
}

IntChainComplex masked_subquotient(const IntChainComplex& c,
                                   const std::vector<std::vector<char>>& keep) {
    if (c.empty())
        return c;
    const int bottom = c.bottom_degree();
    std::vector<std::vector<int>> new_index;  // old local -> new local or -1
    std::vector<int> ranks;
    for (int r = bottom; r <= c.top_degree(); ++r) {
        const auto& mask = keep[static_cast<size_t>(r - bottom)];
        std::vector<int> idx(static_cast<size_t>(c.rank(r)), -1);
        int cnt = 0;
        for (int i = 0; i < c.rank(r); ++i)
            if (mask[static_cast<size_t>(i)])
                idx[static_cast<size_t>(i)] = cnt++;
        new_index.push_back(std::move(idx));
        ranks.push_back(cnt);
    }
    std::vector<SparseIntMatrix> diffs;
    for (int r = bottom + 1; r <= c.top_degree(); ++r) {
        std::vector<int> kept_cols;
        const auto& col_idx = new_index[static_cast<size_t>(r - bottom)];
        for (int i = 0; i < c.rank(r); ++i)
            if (col_idx[static_cast<size_t>(i)] >= 0)
                kept_cols.push_back(i);
        diffs.push_back(c.diff(r).submatrix(new_index[static_cast<size_t>(r - bottom - 1)],
                                            ranks[static_cast<size_t>(r - bottom - 1)], kept_cols));
    }
    return IntChainComplex(bottom, std::move(ranks), std::move(diffs));
}

IntChainComplex dual_cell_pair_complex(const BarycentricSubdivision& sd,
                                       const IntChainComplex& derived_chain, const Simplex& s) {
    const SimplicialComplex& xp = sd.derived();
    std::vector<std::vector<char>> keep;
    for (int p = 0; p <= xp.dim(); ++p) {
        std::vector<char> mask(static_cast<size_t>(xp.count_of_dim(p)), 0);
        for (int i = 0; i < xp.count_of_dim(p); ++i)
            if (sd.min_flag_entry(xp.simplex_at(p, i)) == s)
                mask[static_cast<size_t>(i)] = 1;
        keep.push_back(std::move(mask));
    }
    return masked_subquotient(derived_chain, keep);
}

} // namespace surgery
