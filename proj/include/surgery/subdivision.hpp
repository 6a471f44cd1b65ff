#pragma once

#include <map>
#include <vector>

#include "surgery/chain_complex.hpp"
#include "surgery/simplex.hpp"

namespace surgery {

/// Simplicial chain complex C(X) in degrees 0..dim(X): basis of C_p is the
/// set of p-simplices in canonical order, boundary signs (-1)^i on deleting
/// the vertex at position i.
IntChainComplex chain_complex_of(const SimplicialComplex& x);

/// Barycentric subdivision X'. The derived vertex for a base simplex is the
/// global index of that simplex in the canonical order, so barycenters of
/// lower-dimensional simplices come first — flags read off a derived simplex
/// by sorting its vertices.
class BarycentricSubdivision {
public:
    explicit BarycentricSubdivision(SimplicialComplex base);

    const SimplicialComplex& base() const { return base_; }
    const SimplicialComplex& derived() const { return derived_; }

    /// Base simplex whose barycenter is the given derived vertex.
    const Simplex& barycenter_of(int derived_vertex) const {
        return base_.simplex(derived_vertex);
    }

    /// Derived simplex -> increasing chain of base-simplex ids.
    std::vector<int> flag_of(const Simplex& derived) const { return derived.vertices(); }

    /// Minimal entry sigma_0 of the flag of a derived simplex.
    const Simplex& min_flag_entry(const Simplex& derived) const {
        return base_.simplex(derived.vertex(0));
    }

private:
    SimplicialComplex base_;
    SimplicialComplex derived_;
};

/// Dual cell D(σ,X) = { flags σ̂₀…σ̂_p with σ ≤ σ₀ } with boundary
/// ∂D(σ,X) = { flags with σ < σ₀ }.
struct DualCell {
    Simplex center;
    SimplicialComplex cell;
    SimplicialComplex boundary;
};

DualCell dual_cell(const BarycentricSubdivision& sd, const Simplex& s);
DualCell dual_cell(const SimplicialComplex& x, const Simplex& s);

/// Simplicial map given by a vertex assignment; validated so that images of
/// simplices span simplices of the target. Degenerate images are sent to 0
/// by the chain map.
class SimplicialMap {
public:
    SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                  std::map<int, int> vertex_image);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    int image_of_vertex(int v) const;

    /// Image vertex set of a source simplex (duplicates removed).
    Simplex carrier(const Simplex& s) const;

    ChainMap chain_map() const;

private:
    SimplicialComplex source_, target_;
    std::map<int, int> vertex_image_;
};

/// The recursive subdivision operator sd(σ) = ±σ̂·sd(∂σ) as a chain map
/// C(X) -> C(X'); a chain homotopy equivalence.
ChainMap subdivision_chain_map(const BarycentricSubdivision& sd);

/// Simplicial approximation to the identity X' -> X, σ̂ ↦ max vertex of σ.
SimplicialMap last_vertex_map(const BarycentricSubdivision& sd);

/// Quotient complex spanned by the masked basis elements
/// (keep[degree - bottom][i] != 0). Valid when the kept set is the
/// complement of a subcomplex inside a subcomplex.
IntChainComplex masked_subquotient(const IntChainComplex& c,
                                   const std::vector<std::vector<char>>& keep);

/// Relative chain complex C(D(σ), ∂D(σ)) inside C(X'): basis = flags with
/// minimal entry exactly σ.
IntChainComplex dual_cell_pair_complex(const BarycentricSubdivision& sd,
                                       const IntChainComplex& derived_chain, const Simplex& s);

} // namespace surgery
