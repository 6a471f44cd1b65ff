#pragma once

#include <map>
#include <string>
#include <vector>

#include "surgery/int_matrix.hpp"

namespace surgery {

struct DegreeHomology {
    long betti = 0;
    std::vector<Int> torsion;  // each > 1, each dividing the next

    bool trivial() const { return betti == 0 && torsion.empty(); }
    bool operator==(const DegreeHomology& o) const = default;
};

/// Homology groups per degree; degrees with trivial homology are omitted,
/// so equality of summaries is equality of graded groups.
struct HomologySummary {
    std::map<int, DegreeHomology> groups;

    bool trivial() const { return groups.empty(); }
    DegreeHomology at(int degree) const;
    void set(int degree, DegreeHomology h);
    /// Shift every degree by k.
    HomologySummary shifted(int k) const;
    bool operator==(const HomologySummary& o) const = default;
    std::string to_string() const;
};

/// Bounded chain complex of based free Z-modules. Differentials are sparse;
/// d∘d = 0 is enforced at construction.
class IntChainComplex {
public:
    IntChainComplex() = default;

    /// diffs[i] maps degree bottom+i+1 to degree bottom+i
    /// (so diffs.size() == ranks.size() - 1; both may be empty).
    IntChainComplex(int bottom, std::vector<int> ranks, std::vector<SparseIntMatrix> diffs);

    int bottom_degree() const { return bottom_; }
    int top_degree() const { return bottom_ + static_cast<int>(ranks_.size()) - 1; }
    bool empty() const { return ranks_.empty(); }

    int rank(int degree) const;
    long total_rank() const;

    bool has_diff(int degree) const;
    /// d_degree : C_degree -> C_{degree-1}; the degree must satisfy
    /// bottom < degree <= top.
    const SparseIntMatrix& diff(int degree) const;
    /// Same, but degrees outside the support yield an empty matrix of the
    /// right shape.
    SparseIntMatrix diff_or_zero(int degree) const;

    IntChainComplex shifted(int k) const;

private:
    int bottom_ = 0;
    std::vector<int> ranks_;
    std::vector<SparseIntMatrix> diffs_;
};

HomologySummary homology(const IntChainComplex& c);

/// True iff homology vanishes in every degree. For bounded complexes of
/// f.g. free Z-modules this is equivalent to chain contractibility.
bool is_contractible(const IntChainComplex& c);

/// C^{n-*}: degree r holds the dual of C_{n-r}; the differential is the
/// transpose with the sign convention (δx)(c) = (-1)^r x(dc) on degree-r
/// elements.
IntChainComplex dualize(const IntChainComplex& c, int n);

/// Degree-0 chain map; the chain-map identity is checked at construction.
struct ChainMap {
    IntChainComplex source, target;
    std::map<int, SparseIntMatrix> mats;  // absent degree = zero map

    ChainMap() = default;
    ChainMap(IntChainComplex src, IntChainComplex tgt, std::map<int, SparseIntMatrix> m);

    SparseIntMatrix matrix(int degree) const;

    static ChainMap identity(const IntChainComplex& c);
};

/// cone(f)_r = target_r ⊕ source_{r-1} with differential
/// [[d_target, f], [0, -d_source]].
IntChainComplex mapping_cone(const ChainMap& f);

/// Is the degree-r chain w a boundary (w = d x for an integral x)?
bool is_boundary(const IntChainComplex& c, int degree, const std::vector<Int>& w);

/// Cycles representing generators of H_degree: a basis of the free part plus
/// one generator per torsion summand (with its order).
struct HomologyGenerators {
    std::vector<std::vector<Int>> free_part;
    std::vector<std::pair<std::vector<Int>, Int>> torsion;
};

HomologyGenerators homology_generators(const IntChainComplex& c, int degree);

} // namespace surgery
