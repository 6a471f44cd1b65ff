#pragma once

#include <map>
#include <memory>
#include <optional>

#include "surgery/zx.hpp"

namespace surgery {

/// A ±1 weighting of the top-dimensional simplices with zero boundary,
/// normalized so the lexicographically least facet of each connected
/// component has coefficient +1.
struct FundamentalCycle {
    int n = 0;
    std::map<int, int> signs;  // global simplex id of facet -> ±1

    FundamentalCycle reversed() const;
    /// Coefficient vector over the basis of C_n(X).
    std::vector<Int> as_chain(const SimplicialComplex& x) const;
};

FundamentalCycle fundamental_cycle(const SimplicialComplex& x, int n);

/// The chain-level duality map Φ = [X] ∩ -: C(X)^{n-*} -> C(X') as a
/// (Z,X)-morphism. Φ(σ*) is carried by the dual cell D(σ,X), so the support
/// condition holds by construction; the chain-map identity is asserted.
struct DualityPackage {
    std::shared_ptr<const SimplicialComplex> x;
    int n = 0;
    FundamentalCycle cycle;
    std::shared_ptr<const BarycentricSubdivision> subdivision;
    ZXComplex source;  // C(X)^{n-*}, σ* labeled σ
    ZXComplex target;  // C(X'), flags labeled by their minimal entry
    ZXMorphism phi;
};

DualityPackage duality_map(const SimplicialComplex& x, int n, bool reverse_orientation = false);

/// Independent construction of the duality map: Alexander-Whitney cap of the
/// pushed fundamental cycle against the last-vertex pullback of cochains.
/// Cross-check only; induces the same map on homology as the dual-cell
/// formula.
ZXMorphism aw_duality_map(const DualityPackage& pkg);

struct SymmetricForm {
    IntMatrix matrix;

    int rank() const { return matrix.rows(); }
    bool is_even() const;
    bool is_unimodular() const;
};

/// The cup-product pairing on the free part of middle cohomology, evaluated
/// against the fundamental cycle. Requires n ≡ 0 (mod 4).
SymmetricForm intersection_form(const SimplicialComplex& x, int n,
                                bool reverse_orientation = false);

} // namespace surgery
