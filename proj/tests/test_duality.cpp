#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "surgery/fixtures.hpp"
#include "surgery/l_theory.hpp"
#include "surgery/smith.hpp"

using namespace surgery;

TEST_CASE("fundamental cycle of sphere boundaries alternates") {
    for (int n = 1; n <= 4; ++n) {
        auto x = fixtures::boundary_simplex(n + 1);
        FundamentalCycle c = fundamental_cycle(x, n);
        REQUIRE(static_cast<int>(c.signs.size()) == n + 2);
        // the facet omitting vertex i carries (-1)^i, up to one global sign
        std::vector<int> expected;
        for (int i = 0; i <= n + 1; ++i)
            expected.push_back(i % 2 == 0 ? 1 : -1);
        std::vector<int> got;
        for (int i = 0; i <= n + 1; ++i) {
            std::vector<int> verts;
            for (int v = 0; v <= n + 1; ++v)
                if (v != i)
                    verts.push_back(v);
            got.push_back(c.signs.at(x.index_of(Simplex(verts))));
        }
        // facet omitting the last vertex is lexicographically least: +1 there
        CHECK(got[static_cast<size_t>(n + 1)] == 1);
        // the alternating pattern holds up to that global normalization
        int flip = expected[static_cast<size_t>(n + 1)];
        for (size_t i = 0; i < got.size(); ++i)
            CHECK(got[i] * flip == expected[i]);
        // zero boundary, exactly
        CHECK(chain_complex_of(x).diff(n).apply(c.as_chain(x)) ==
              std::vector<Int>(static_cast<size_t>(x.count_of_dim(n - 1))));
    }
}

TEST_CASE("fundamental cycle of the torus exists and is a cycle") {
    auto x = fixtures::torus7();
    FundamentalCycle c = fundamental_cycle(x, 2);
    CHECK(c.signs.size() == 14);
    for (const auto& [id, s] : c.signs)
        CHECK((s == 1 || s == -1));
    CHECK(chain_complex_of(x).diff(2).apply(c.as_chain(x)) == std::vector<Int>(21));
}

TEST_CASE("projective plane is not orientable, with a witness") {
    auto x = fixtures::projective_plane6();
    CHECK_THROWS_AS(fundamental_cycle(x, 2), not_orientable_error);
    try {
        fundamental_cycle(x, 2);
    } catch (const not_orientable_error& e) {
        CHECK(e.witness_vertices().size() == 2);  // an edge in the inconsistent loop
        CHECK(x.contains(Simplex(e.witness_vertices())));
    }
}

TEST_CASE("complexes with boundary have no fundamental cycle") {
    CHECK_THROWS_AS(fundamental_cycle(fixtures::full_simplex(2), 2), not_orientable_error);
    CHECK_THROWS_AS(fundamental_cycle(fixtures::boundary_simplex(3), 1), domain_error);
}

TEST_CASE("orientation reversal flips all signs") {
    auto x = fixtures::torus7();
    FundamentalCycle c = fundamental_cycle(x, 2);
    FundamentalCycle r = c.reversed();
    for (const auto& [id, s] : c.signs)
        CHECK(r.signs.at(id) == -s);
}

TEST_CASE("duality map on the 2-sphere: facet duals are single barycenters") {
    auto x = fixtures::boundary_simplex(3);
    DualityPackage pkg = duality_map(x, 2);
    const SimplicialComplex& xp = pkg.subdivision->derived();
    SparseIntMatrix phi0 = pkg.phi.matrix(0);  // duals of facets live in degree 0
    for (int j = 0; j < 4; ++j) {
        const auto& col = phi0.column(j);
        REQUIRE(col.size() == 1);
        CHECK((col[0].second == 1 || col[0].second == -1));
        // the image is the barycenter of the facet itself
        const Simplex& target_vertex = xp.simplex_at(0, col[0].first);
        CHECK(pkg.subdivision->barycenter_of(target_vertex.vertex(0)) == x.simplex_at(2, j));
    }
    // local block at a facet is 1x1 with determinant ±1
    LocalComponent loc = local_component(pkg.phi, x.simplex_at(2, 0));
    CHECK(loc.source.total_rank() == 1);
    CHECK(loc.target.total_rank() == 1);
    SparseIntMatrix block = loc.map.matrix(0);
    REQUIRE(block.column(0).size() == 1);
    CHECK((block.column(0)[0].second == 1 || block.column(0)[0].second == -1));
}

TEST_CASE("global and local Poincaré duality of manifold fixtures") {
    struct Item {
        SimplicialComplex x;
        int n;
    };
    for (const auto& [x, n] : {Item{fixtures::boundary_simplex(1), 0},
                               Item{fixtures::boundary_simplex(2), 1},
                               Item{fixtures::boundary_simplex(3), 2},
                               Item{fixtures::boundary_simplex(4), 3},
                               Item{fixtures::torus7(), 2}}) {
        DualityPackage pkg = duality_map(x, n);
        CHECK_MESSAGE(check_support(pkg.phi).ok, x.name());
        CHECK_MESSAGE(is_local_equivalence(pkg.phi).ok, x.name());
        CHECK_MESSAGE(is_contractible(mapping_cone(assemble(pkg.phi))), x.name());
    }
}

TEST_CASE("suspension of the torus fails duality exactly at the suspension points") {
    auto x = fixtures::suspended_torus7();
    DualityPackage pkg = duality_map(x, 3);
    CHECK(check_support(pkg.phi).ok);
    auto rep = is_local_equivalence(pkg.phi);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.defects.size() == 2);
    CHECK(rep.defects.count(Simplex({7})) == 1);
    CHECK(rep.defects.count(Simplex({8})) == 1);
    CHECK_FALSE(is_contractible(mapping_cone(assemble(pkg.phi))));
}

TEST_CASE("orientation reversal negates the duality map, verdicts unchanged") {
    auto x = fixtures::torus7();
    DualityPackage a = duality_map(x, 2);
    DualityPackage b = duality_map(x, 2, true);
    for (int r = 0; r <= 2; ++r)
        CHECK(b.phi.matrix(r) == a.phi.matrix(r).negated());
    CHECK(is_local_equivalence(b.phi).ok);
    CHECK(is_contractible(mapping_cone(assemble(b.phi))));
}

TEST_CASE("flag-formula and Alexander-Whitney duality maps agree on homology") {
    struct Item {
        SimplicialComplex x;
        int n;
    };
    for (const auto& [x, n] :
         {Item{fixtures::boundary_simplex(2), 1}, Item{fixtures::boundary_simplex(3), 2},
          Item{fixtures::boundary_simplex(4), 3}, Item{fixtures::torus7(), 2},
          Item{fixtures::boundary_simplex(5), 4},
          Item{fixtures::complex_projective_plane9(), 4}}) {
        DualityPackage pkg = duality_map(x, n);
        ZXMorphism aw = aw_duality_map(pkg);
        CHECK_MESSAGE(check_support(aw).ok, x.name());
        CHECK_MESSAGE(check_support(pkg.source).ok, x.name());
        CHECK_MESSAGE(check_support(pkg.target).ok, x.name());
        IntChainComplex target = pkg.target.chain;
        for (int r = 0; r <= n; ++r) {
            HomologyGenerators gens = homology_generators(pkg.source.chain, r);
            auto check_gen = [&](const std::vector<Int>& g) {
                std::vector<Int> d1 = pkg.phi.matrix(r).apply(g);
                std::vector<Int> d2 = aw.matrix(r).apply(g);
                for (size_t i = 0; i < d1.size(); ++i)
                    d1[i] -= d2[i];
                CHECK_MESSAGE(is_boundary(target, r, d1), x.name());
            };
            for (const auto& g : gens.free_part)
                check_gen(g);
            for (const auto& [g, order] : gens.torsion)
                check_gen(g);
        }
    }
}

TEST_CASE("intersection form of the 4-sphere is empty") {
    SymmetricForm f = intersection_form(fixtures::boundary_simplex(5), 4);
    CHECK(f.rank() == 0);
    CHECK(signature(f) == 0);
}

TEST_CASE("intersection form of the complex projective plane") {
    auto x = fixtures::complex_projective_plane9();
    SymmetricForm f = intersection_form(x, 4);
    REQUIRE(f.rank() == 1);
    CHECK(f.is_unimodular());
    CHECK(f.is_even() == false);
    long s = signature(f);
    CHECK((s == 1 || s == -1));
    SymmetricForm g = intersection_form(x, 4, true);
    CHECK(signature(g) == -s);
    CHECK(g.matrix == f.matrix.negated());
}

TEST_CASE("intersection form requires dimension 4k and orientability") {
    CHECK_THROWS_AS(intersection_form(fixtures::torus7(), 2), domain_error);
    CHECK_THROWS_AS(intersection_form(fixtures::suspended_torus7(), 3), domain_error);
}

TEST_CASE("intersection form is independent of the cohomology basis lift") {
    auto x = fixtures::complex_projective_plane9();
    FundamentalCycle cycle = fundamental_cycle(x, 4);
    IntChainComplex cochains = dualize(chain_complex_of(x), 0);
    HomologyGenerators gens = homology_generators(cochains, -2);
    REQUIRE(gens.free_part.size() == 1);

    auto pair_with_cycle = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int val = 0;
        for (const auto& [fid, c] : cycle.signs) {
            const Simplex& facet = x.simplex(fid);
            std::vector<int> front(facet.vertices().begin(), facet.vertices().begin() + 3);
            std::vector<int> back(facet.vertices().begin() + 2, facet.vertices().end());
            val += Int(c) * a[static_cast<size_t>(x.local_index(Simplex(front)))] *
                   b[static_cast<size_t>(x.local_index(Simplex(back)))];
        }
        return val;
    };

    Int base_val = pair_with_cycle(gens.free_part[0], gens.free_part[0]);
    SymmetricForm lib = intersection_form(x, 4);
    CHECK(lib.matrix.at(0, 0) == base_val);

    // perturb the lift by coboundaries and a sign; the pairing of classes
    // cannot change (up to the GL_1(Z) = ±1 congruence)
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const SparseIntMatrix& delta = cochains.diff(-1);  // image = coboundaries in degree -2
    for (int t = 0; t < 10; ++t) {
        std::vector<Int> v(static_cast<size_t>(cochains.rank(-1)));
        for (auto& e : v)
            e = coeff(rng);
        std::vector<Int> lift = gens.free_part[0];
        std::vector<Int> db = delta.apply(v);
        int unit = (t % 2 == 0) ? 1 : -1;
        for (size_t i = 0; i < lift.size(); ++i)
            lift[i] = unit * lift[i] + db[i];
        CHECK(pair_with_cycle(lift, lift) == base_val);
    }
}
