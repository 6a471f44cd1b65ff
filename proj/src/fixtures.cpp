#include "surgery/fixtures.hpp"

namespace surgery::fixtures {

SimplicialComplex full_simplex(int k) {
    std::vector<int> verts;
    for (int v = 0; v <= k; ++v)
        verts.push_back(v);
    return SimplicialComplex("delta_" + std::to_string(k), {Simplex(verts)});
}

SimplicialComplex boundary_simplex(int k) {
    std::vector<Simplex> facets;
    for (int omit = 0; omit <= k; ++omit) {
        std::vector<int> verts;
        for (int v = 0; v <= k; ++v)
            if (v != omit)
                verts.push_back(v);
        facets.emplace_back(std::move(verts));
    }
    return SimplicialComplex("boundary_delta_" + std::to_string(k), std::move(facets));
}

SimplicialComplex torus7() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back(Simplex({i, (i + 1) % 7, (i + 3) % 7}));
        facets.push_back(Simplex({i, (i + 2) % 7, (i + 3) % 7}));
    }
    return SimplicialComplex("torus_7", std::move(facets));
}

SimplicialComplex projective_plane6() {
    std::vector<std::vector<int>> f = {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                                       {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
    std::vector<Simplex> facets;
    for (auto& v : f)
        facets.emplace_back(v);
    return SimplicialComplex("rp2_6", std::move(facets));
}

SimplicialComplex complex_projective_plane9() {
    std::vector<std::vector<int>> f = {
        {1, 2, 4, 5, 6}, {2, 3, 5, 6, 4}, {3, 1, 6, 4, 5}, {1, 2, 4, 5, 9}, {2, 3, 5, 6, 7},
        {3, 1, 6, 4, 8}, {2, 3, 6, 4, 9}, {3, 1, 4, 5, 7}, {1, 2, 5, 6, 8}, {3, 1, 5, 6, 9},
        {1, 2, 6, 4, 7}, {2, 3, 4, 5, 8}, {4, 5, 7, 8, 9}, {5, 6, 8, 9, 7}, {6, 4, 9, 7, 8},
        {4, 5, 7, 8, 3}, {5, 6, 8, 9, 1}, {6, 4, 9, 7, 2}, {5, 6, 9, 7, 3}, {6, 4, 7, 8, 1},
        {4, 5, 8, 9, 2}, {6, 4, 8, 9, 3}, {4, 5, 9, 7, 1}, {5, 6, 7, 8, 2}, {7, 8, 1, 2, 3},
        {8, 9, 2, 3, 1}, {9, 7, 3, 1, 2}, {7, 8, 1, 2, 6}, {8, 9, 2, 3, 4}, {9, 7, 3, 1, 5},
        {8, 9, 3, 1, 6}, {9, 7, 1, 2, 4}, {7, 8, 2, 3, 5}, {9, 7, 2, 3, 6}, {7, 8, 3, 1, 4},
        {8, 9, 1, 2, 5}};
    std::vector<Simplex> facets;
    for (auto& v : f)
        facets.emplace_back(v);
    return SimplicialComplex("cp2_9", std::move(facets));
}

SimplicialComplex suspension(const SimplicialComplex& x) {
    int north = 0;
    for (const auto& s : x.simplices())
        north = std::max(north, s.max_vertex() + 1);
    int south = north + 1;
    std::vector<Simplex> facets;
    for (const auto& f : x.facets()) {
        std::vector<int> a = f.vertices(), b = f.vertices();
        a.push_back(north);
        b.push_back(south);
        facets.emplace_back(std::move(a));
        facets.emplace_back(std::move(b));
    }
    return SimplicialComplex("suspended_" + x.name(), std::move(facets));
}

SimplicialComplex suspended_torus7() {
    return suspension(torus7());
}

std::vector<std::pair<std::string, SimplicialComplex>> bundled_corpus() {
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    for (int k = 1; k <= 5; ++k)
        out.emplace_back("boundary_delta_" + std::to_string(k), boundary_simplex(k));
    out.emplace_back("torus_7", torus7());
    out.emplace_back("rp2_6", projective_plane6());
    out.emplace_back("cp2_9", complex_projective_plane9());
    out.emplace_back("suspended_torus_7", suspended_torus7());
    out.emplace_back("delta_2", full_simplex(2));
    return out;
}

} // namespace surgery::fixtures
