#include "surgery/duality.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "surgery/smith.hpp"

namespace surgery {

FundamentalCycle FundamentalCycle::reversed() const {
    FundamentalCycle r = *this;
    for (auto& [id, s] : r.signs)
        s = -s;
    return r;
}

std::vector<Int> FundamentalCycle::as_chain(const SimplicialComplex& x) const {
    std::vector<Int> chain(static_cast<size_t>(x.count_of_dim(n)));
    for (const auto& [id, s] : signs)
        chain[static_cast<size_t>(x.local_index(x.simplex(id)))] = s;
    return chain;
}

namespace {

// Search a small kernel lattice for a ±1 vector; covers connected complexes
// whose codimension-1 faces are not all 2-cofacet (where sign propagation
// does not apply).
std::optional<std::vector<Int>> search_unit_kernel_vector(const IntMatrix& kernel) {
    const int k = kernel.cols(), m = kernel.rows();
    if (k == 0 || k > 12)
        return std::nullopt;
    std::vector<int> coeff(static_cast<size_t>(k), -1);
    while (true) {
        std::vector<Int> v(static_cast<size_t>(m));
        for (int j = 0; j < k; ++j)
            for (int r = 0; r < m; ++r)
                v[static_cast<size_t>(r)] += coeff[static_cast<size_t>(j)] * kernel.at(r, j);
        bool unit = true;
        for (const auto& e : v)
            if (e != 1 && e != -1) {
                unit = false;
                break;
            }
        if (unit)
            return v;
        int j = 0;
        while (j < k && coeff[static_cast<size_t>(j)] == 1)
            coeff[static_cast<size_t>(j++)] = -1;
        if (j == k)
            return std::nullopt;
        coeff[static_cast<size_t>(j)] = 1;
    }
}

} // namespace

FundamentalCycle fundamental_cycle(const SimplicialComplex& x, int n) {
    if (x.empty())
        throw domain_error("fundamental_cycle: empty complex");
    if (!x.is_pure(n))
        throw domain_error("fundamental_cycle: not all facets have dimension " + std::to_string(n));

    FundamentalCycle out;
    out.n = n;
    const int nf = x.count_of_dim(n);
    if (n == 0) {
        for (int i = 0; i < nf; ++i)
            out.signs[x.index_of(x.simplex_at(0, i))] = 1;
        return out;
    }

    // cofacets of every (n-1)-simplex
    const int nr = x.count_of_dim(n - 1);
    std::vector<std::vector<int>> cofacets(static_cast<size_t>(nr));  // local facet indices
    for (int j = 0; j < nf; ++j) {
        const Simplex& f = x.simplex_at(n, j);
        for (int i = 0; i <= n; ++i)
            cofacets[static_cast<size_t>(x.local_index(f.face_omitting(i)))].push_back(j);
    }

    bool propagation_applies = true;
    for (int t = 0; t < nr; ++t) {
        size_t cnt = cofacets[static_cast<size_t>(t)].size();
        if (cnt % 2 == 1)
            throw not_orientable_error(
                "face " + x.simplex_at(n - 1, t).to_string() + " has odd cofacet count " +
                    std::to_string(cnt),
                x.simplex_at(n - 1, t).vertices());
        if (cnt != 2)
            propagation_applies = false;
    }

    if (!propagation_applies) {
        auto kernel = kernel_basis(chain_complex_of(x).diff(n).to_dense());
        auto unit = search_unit_kernel_vector(kernel);
        if (!unit) {
            int witness = 0;
            for (int t = 0; t < nr; ++t)
                if (cofacets[static_cast<size_t>(t)].size() != 2) {
                    witness = t;
                    break;
                }
            throw not_orientable_error("no ±1 facet weighting with zero boundary exists",
                                       x.simplex_at(n - 1, witness).vertices());
        }
        int flip = (*unit)[0] == 1 ? 1 : -1;
        for (int j = 0; j < nf; ++j)
            out.signs[x.index_of(x.simplex_at(n, j))] =
                ((*unit)[static_cast<size_t>(j)] == 1 ? 1 : -1) * flip;
        return out;
    }

    std::vector<int> sign(static_cast<size_t>(nf), 0);
    for (int start = 0; start < nf; ++start) {
        if (sign[static_cast<size_t>(start)] != 0)
            continue;
        sign[static_cast<size_t>(start)] = 1;  // the least facet of this component is visited first
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int f = bfs.front();
            bfs.pop();
            const Simplex& fs = x.simplex_at(n, f);
            for (int i = 0; i <= n; ++i) {
                Simplex tau = fs.face_omitting(i);
                int t = x.local_index(tau);
                const auto& pair = cofacets[static_cast<size_t>(t)];
                int g = pair[0] == f ? pair[1] : pair[0];
                const Simplex& gs = x.simplex_at(n, g);
                // zero boundary across tau: c_g = -c_f [f:tau][g:tau]
                int needed = -sign[static_cast<size_t>(f)] * Simplex::incidence_sign(fs, tau) *
                             Simplex::incidence_sign(gs, tau);
                if (sign[static_cast<size_t>(g)] == 0) {
                    sign[static_cast<size_t>(g)] = needed;
                    bfs.push(g);
                } else if (sign[static_cast<size_t>(g)] != needed) {
                    throw not_orientable_error(
                        "inconsistent orientation loop at face " + tau.to_string(),
                        tau.vertices());
                }
            }
        }
    }

    for (int j = 0; j < nf; ++j)
        out.signs[x.index_of(x.simplex_at(n, j))] = sign[static_cast<size_t>(j)];

    // exact check: the weighted facet sum is a cycle
    std::vector<Int> bd = chain_complex_of(x).diff(n).apply(out.as_chain(x));
    for (size_t t = 0; t < bd.size(); ++t)
        if (bd[t] != 0)
            throw not_orientable_error("propagated weighting is not a cycle at face " +
                                           x.simplex_at(n - 1, static_cast<int>(t)).to_string(),
                                       x.simplex_at(n - 1, static_cast<int>(t)).vertices());
    return out;
}

namespace {

int phi_degree_sign(int n, int p) {
    // (-1)^{(n+1)p}: normalizes ∂Φ = ΦD across parities of n
    return ((n + 1) * p) % 2 == 0 ? 1 : -1;
}

// tails σ = σ_p < σ_{p+1} < ... < σ_n with consecutive dimensions, together
// with the weight c(σ_n)·Π_{k>p} (-1)^k [σ_k : σ_{k-1}]
void enumerate_tails(const SimplicialComplex& x, const FundamentalCycle& cycle,
                     std::vector<int>& chain_ids, const Simplex& current, int k, int n, int sign,
                     const std::function<void(const std::vector<int>&, int)>& emit) {
    if (k == n) {
        auto it = cycle.signs.find(x.index_of(current));
        if (it == cycle.signs.end())
            throw structural_error("duality map: facet missing from fundamental cycle");
        emit(chain_ids, sign * it->second);
        return;
    }
    // extend by one dimension: cofaces current ∪ {w}
    for (int t = 0; t < x.simplex_count(); ++t) {
        const Simplex& cand = x.simplex(t);
        if (cand.dim() != k + 1 || !cand.contains(current))
            continue;
        int inc = Simplex::incidence_sign(cand, current);
        int step = ((k + 1) % 2 == 0 ? 1 : -1) * inc;
        chain_ids.push_back(t);
        enumerate_tails(x, cycle, chain_ids, cand, k + 1, n, sign * step, emit);
        chain_ids.pop_back();
    }
}

} // namespace

DualityPackage duality_map(const SimplicialComplex& x, int n, bool reverse_orientation) {
    DualityPackage pkg;
    pkg.x = std::make_shared<SimplicialComplex>(x);
    pkg.n = n;
    pkg.cycle = fundamental_cycle(x, n);
    if (reverse_orientation)
        pkg.cycle = pkg.cycle.reversed();
    pkg.subdivision = std::make_shared<BarycentricSubdivision>(x);
    pkg.source = labeled_dual_cochains(x, n);
    pkg.target = label_simplicial_chains(*pkg.subdivision);

    const SimplicialComplex& xp = pkg.subdivision->derived();
    // cofaces of each simplex by dimension, for tail enumeration
    std::map<int, SparseIntMatrix> mats;
    for (int p = 0; p <= n; ++p) {
        const int r = n - p;  // source degree holding duals of p-simplices
        SparseIntMatrix m(pkg.target.chain.rank(r), pkg.source.chain.rank(r));
        const int lambda = phi_degree_sign(n, p);
        for (int j = 0; j < x.count_of_dim(p); ++j) {
            const Simplex& sigma = x.simplex_at(p, j);
            std::vector<std::pair<int, Int>> col;
            std::vector<int> ids{x.index_of(sigma)};
            enumerate_tails(x, pkg.cycle, ids, sigma, p, n, 1,
                            [&](const std::vector<int>& flag, int w) {
                                int row = xp.local_index(Simplex(flag));
                                col.emplace_back(row, lambda * w);
                            });
            m.set_unsorted(j, std::move(col));
        }
        mats[r] = std::move(m);
    }
    try {
        pkg.phi = ZXMorphism(pkg.source, pkg.target, std::move(mats));
    } catch (const structural_error& e) {
        throw structural_error(std::string("duality map: sign convention inconsistency: ") +
                               e.what());
    }
    return pkg;
}

ZXMorphism aw_duality_map(const DualityPackage& pkg) {
    const SimplicialComplex& x = *pkg.x;
    const SimplicialComplex& xp = pkg.subdivision->derived();
    const int n = pkg.n;

    std::map<int, SparseIntMatrix> cols;  // degree -> accumulated entries
    std::map<int, std::vector<std::vector<std::pair<int, Int>>>> acc;
    for (int p = 0; p <= n; ++p)
        acc[n - p].assign(static_cast<size_t>(x.count_of_dim(p)), {});

    // ξ = sd[X] runs over orderings (w_0..w_n) of each facet's vertices
    for (const auto& [facet_id, c] : pkg.cycle.signs) {
        const Simplex& facet = x.simplex(facet_id);
        std::vector<int> order = facet.vertices();
        std::sort(order.begin(), order.end());
        do {
            int eps = c;
            std::vector<int> flag_ids;
            std::vector<int> partial;
            bool valid = true;
            for (int k = 0; k <= n; ++k) {
                partial.push_back(order[static_cast<size_t>(k)]);
                std::vector<int> sorted = partial;
                std::sort(sorted.begin(), sorted.end());
                Simplex sk{sorted};
                int id = x.index_of(sk);
                if (id < 0) {
                    valid = false;
                    break;
                }
                flag_ids.push_back(id);
                if (k > 0) {
                    int pos = sk.position_of(order[static_cast<size_t>(k)]);
                    if ((k + pos) % 2 == 1)
                        eps = -eps;
                }
            }
            if (!valid)
                throw structural_error("aw_duality_map: face of a facet missing");
            // fronts with strictly increasing last-vertex images
            for (int p = 0; p <= n; ++p) {
                std::vector<int> lv;
                bool strict = true;
                for (int k = 0; k <= p; ++k) {
                    int m = x.simplex(flag_ids[static_cast<size_t>(k)]).max_vertex();
                    if (!lv.empty() && m <= lv.back()) {
                        strict = false;
                        break;
                    }
                    lv.push_back(m);
                }
                if (!strict)
                    continue;
                int sigma_local = x.local_index(Simplex(lv));
                if (sigma_local < 0)
                    throw structural_error("aw_duality_map: last-vertex image missing");
                std::vector<int> tail(flag_ids.begin() + p, flag_ids.end());
                int row = xp.local_index(Simplex(tail));
                acc[n - p][static_cast<size_t>(sigma_local)].emplace_back(
                    row, phi_degree_sign(n, p) * eps);
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }

    std::map<int, SparseIntMatrix> mats;
    for (auto& [r, columns] : acc) {
        SparseIntMatrix m(pkg.target.chain.rank(r), pkg.source.chain.rank(r));
        for (size_t j = 0; j < columns.size(); ++j)
            m.set_unsorted(static_cast<int>(j), std::move(columns[j]));
        mats[r] = std::move(m);
    }
    return ZXMorphism(pkg.source, pkg.target, std::move(mats));
}

bool SymmetricForm::is_even() const {
    for (int i = 0; i < matrix.rows(); ++i)
        if (matrix.at(i, i) % 2 != 0)
            return false;
    return true;
}

bool SymmetricForm::is_unimodular() const {
    Int d = matrix.determinant();
    return d == 1 || d == -1;
}

SymmetricForm intersection_form(const SimplicialComplex& x, int n, bool reverse_orientation) {
    if (n % 4 != 0)
        throw domain_error("intersection_form: dimension " + std::to_string(n) +
                           " is not a multiple of 4");
    FundamentalCycle cycle = fundamental_cycle(x, n);
    if (reverse_orientation)
        cycle = cycle.reversed();
    const int k2 = n / 2;

    // free part of H^{2k}: generators of homology of C(X)^{-*} in degree -2k
    IntChainComplex cochains = dualize(chain_complex_of(x), 0);
    HomologyGenerators gens = homology_generators(cochains, -k2);
    const int f = static_cast<int>(gens.free_part.size());

    IntMatrix form(f, f);
    for (int a = 0; a < f; ++a)
        for (int b = 0; b < f; ++b) {
            Int val = 0;
            for (const auto& [facet_id, c] : cycle.signs) {
                const Simplex& facet = x.simplex(facet_id);
                std::vector<int> front(facet.vertices().begin(),
                                       facet.vertices().begin() + k2 + 1);
                std::vector<int> back(facet.vertices().begin() + k2, facet.vertices().end());
                int fi = x.local_index(Simplex(front));
                int bi = x.local_index(Simplex(back));
                val += Int(c) * gens.free_part[static_cast<size_t>(a)][static_cast<size_t>(fi)] *
                       gens.free_part[static_cast<size_t>(b)][static_cast<size_t>(bi)];
            }
            form.at(a, b) = val;
        }
    if (!form.is_symmetric())
        throw structural_error("intersection_form: cup-product matrix is not symmetric");
    return SymmetricForm{std::move(form)};
}

} // namespace surgery
