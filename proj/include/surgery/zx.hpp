#pragma once

#include <map>
#include <memory>
#include <vector>

#include "surgery/chain_complex.hpp"
#include "surgery/simplex.hpp"
#include "surgery/subdivision.hpp"

namespace surgery {

/// Chain complex in the (Z,X)-category: every basis element carries a label
/// simplex of the base complex and the differential raises labels
/// ("the matrix is upper triangular").
struct ZXComplex {
    std::shared_ptr<const SimplicialComplex> base;
    IntChainComplex chain;
    /// labels[degree - bottom][i] = global simplex index into base->simplices()
    std::vector<std::vector<int>> labels;

    const std::vector<int>& labels_at(int degree) const;
    int label_of(int degree, int index) const;
    const Simplex& label_simplex(int degree, int index) const;

    ZXComplex shifted(int k) const;
};

struct SupportViolation {
    int degree = 0, row = 0, col = 0;
    int row_label = -1, col_label = -1;
};

struct SupportCheck {
    bool ok = true;
    std::vector<SupportViolation> violations;
};

SupportCheck check_support(const ZXComplex& c);

/// Raw support check for candidate morphism data (degree -> matrix).
SupportCheck check_support(const ZXComplex& source, const ZXComplex& target,
                           const std::map<int, SparseIntMatrix>& mats);

/// A (Z,X)-morphism: chain map with label-raising matrices. Construction
/// validates the chain-map identity and the support condition.
struct ZXMorphism {
    ZXComplex source, target;
    std::map<int, SparseIntMatrix> mats;

    ZXMorphism() = default;
    ZXMorphism(ZXComplex src, ZXComplex tgt, std::map<int, SparseIntMatrix> m);

    SparseIntMatrix matrix(int degree) const;
};

SupportCheck check_support(const ZXMorphism& f);

/// C(X') as a (Z,X)-complex: the flag σ̂₀ < … < σ̂_p is labeled σ₀.
ZXComplex label_simplicial_chains(const BarycentricSubdivision& sd);
ZXComplex label_simplicial_chains(const SimplicialComplex& x);

/// C(X)^{n-*} as a (Z,X)-complex: the dual basis element σ* is labeled σ.
ZXComplex labeled_dual_cochains(const SimplicialComplex& x, int n);

/// The σ-labeled sub-blocks of source and target together with the diagonal
/// block f(σ,σ); these are complexes and a chain map because the strictly
/// label-raising parts vanish on the diagonal.
struct LocalComponent {
    Simplex simplex;
    IntChainComplex source, target;
    ChainMap map;
};

LocalComponent local_component(const ZXMorphism& f, const Simplex& s);
IntChainComplex local_complex(const ZXComplex& c, const Simplex& s);

struct LocalEquivalenceReport {
    bool ok = true;
    /// σ with non-vanishing local cone homology, with the certificate.
    std::map<Simplex, HomologySummary> defects;
};

/// f is a chain equivalence iff every local cone is acyclic.
LocalEquivalenceReport is_local_equivalence(const ZXMorphism& f);

/// Assembly for trivial fundamental group: forget the labels.
IntChainComplex assemble(const ZXComplex& c);
ChainMap assemble(const ZXMorphism& f);

/// Chain duality TC(σ)_r = Σ_{τ≥σ} Hom(C_{-|σ|-r}(τ), Z). The differential
/// combines the dual of d_C within each label with incidence-signed
/// label-raising components; d∘d = 0 is asserted.
ZXComplex chain_dual(const ZXComplex& c);

/// chain_dual plus the (label, underlying basis element) decomposition of
/// each TC basis element, for constructions that need it.
struct ChainDualBasisElement {
    int label;             // σ (global simplex id)
    int underlying_index;  // basis index in C at degree -|σ|-r
};
struct ChainDual {
    ZXComplex complex;
    std::vector<std::vector<ChainDualBasisElement>> basis;  // parallel to labels
};
ChainDual chain_dual_with_basis(const ZXComplex& c);

/// The canonical evaluation T(T(C)) -> C, a local equivalence.
ZXMorphism double_dual_evaluation(const ZXComplex& c);

/// Label-aware mapping cone: cone_r = target_r ⊕ source_{r-1}, each half
/// keeping its own labels.
ZXComplex zx_mapping_cone(const ZXMorphism& f);

} // namespace surgery
