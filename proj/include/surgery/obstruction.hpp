#pragma once

#include <optional>

#include "surgery/duality.hpp"
#include "surgery/zx.hpp"

namespace surgery {

struct ManifoldDefect {
    Simplex simplex;
    HomologySummary link_homology;
};

struct ManifoldCheckResult {
    bool ok = true;
    int n = 0;
    std::vector<ManifoldDefect> defects;  // canonical simplex order
};

/// True iff the link of every simplex σ has the integral homology of
/// S^{n-|σ|-1} (the empty complex playing S^{-1} for facets).
ManifoldCheckResult homology_manifold_check(const SimplicialComplex& x, int n);

/// Homological Lefschetz duality for the dual-cell pair:
/// H_r(D(σ), ∂D(σ)) ≅ H^{(n-|σ|)-r}(D(σ)) for all r. Requires a
/// fundamental cycle to exist (NotOrientable propagates).
bool poincare_pair_check(const SimplicialComplex& x, int n, const Simplex& s);

/// Shared context for checking many simplices of the same complex.
class PoincarePairContext {
public:
    PoincarePairContext(const SimplicialComplex& x, int n);
    bool check(const Simplex& s) const;

private:
    int n_;
    BarycentricSubdivision sd_;
    IntChainComplex derived_chain_;
};

struct ObstructionReport {
    int n = 0;
    bool has_fundamental_cycle = false;
    bool globally_acyclic = false;
    bool locally_acyclic = false;
    /// Homology of the assembled cone C([X]∩-)_{*+1}; empty when no
    /// fundamental cycle exists.
    HomologySummary global_homology;
    /// σ with nonzero local certificate: the local cone homology of Φ(σ,σ)
    /// when the cone exists, otherwise the dual-cell pair homology where it
    /// deviates from the local duality pattern.
    std::map<Simplex, HomologySummary> local_defects;
    std::vector<std::string> warnings;
};

struct ObstructionOptions {
    bool reverse_orientation = false;
    /// Global cone homology is the expensive part; local certificates alone
    /// decide locally_acyclic.
    bool compute_global = true;
};

struct ObstructionResult {
    /// The labeled cone C([X]∩-: C(X)^{n-*} -> C(X'))_{*+1}; absent when
    /// the complex has no fundamental cycle and the degraded local check ran.
    std::optional<ZXComplex> complex;
    ObstructionReport report;
};

ObstructionResult obstruction_complex(const SimplicialComplex& x, int n,
                                      const ObstructionOptions& opts = {});

struct StructureDefectEntry {
    Simplex simplex;
    HomologySummary domain_pair;  // H_*(N(σ), ∂N(σ))
    HomologySummary cell_pair;    // H_*(D(σ,K), ∂D(σ,K))
    HomologySummary local_cone;   // shifted local cone of the comparison map
    bool domain_empty = false;    // N(σ) contains no simplex at all
    bool defect = false;
};

struct StructureDefectReport {
    bool defect_free = true;
    std::vector<StructureDefectEntry> entries;  // every simplex of K, canonical order
    HomologySummary global_cone_homology;       // of the assembled C(h)_{*+1}
};

/// Dissect h: N -> K' over the dual cells of K and measure the failure of
/// the point inverses N(σ) = h^{-1}(D(σ,K)) to match the cells; the
/// comparison runs through the label-aware cone of C(N) -> C(K') shifted by
/// one. h.target() must be the barycentric subdivision of K.
StructureDefectReport structure_defect(const SimplicialMap& h, const BarycentricSubdivision& k_sd);

} // namespace surgery
