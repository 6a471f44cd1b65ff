#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surgery/simplex.hpp"

namespace surgery::fixtures {

/// Δ^k on vertices 0..k.
SimplicialComplex full_simplex(int k);
/// ∂Δ^k: all proper faces of Δ^k; an (k-1)-sphere.
SimplicialComplex boundary_simplex(int k);
/// The 7-vertex Möbius-Kantor triangulation of the torus.
SimplicialComplex torus7();
/// The 6-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane6();
/// The Kühnel 9-vertex triangulation of the complex projective plane.
SimplicialComplex complex_projective_plane9();
/// Suspension: two cone points past the largest vertex id.
SimplicialComplex suspension(const SimplicialComplex& x);
/// ΣT2_7 with suspension vertices 7 and 8.
SimplicialComplex suspended_torus7();

/// The bundled corpus, keyed by fixture file stem.
std::vector<std::pair<std::string, SimplicialComplex>> bundled_corpus();

} // namespace surgery::fixtures
