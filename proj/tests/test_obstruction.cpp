#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "surgery/fixtures.hpp"
#include "surgery/json_io.hpp"
#include "surgery/obstruction.hpp"

using namespace surgery;

namespace {

std::set<Simplex> defect_loci(const ManifoldCheckResult& r) {
    std::set<Simplex> out;
    for (const auto& d : r.defects)
        out.insert(d.simplex);
    return out;
}

std::set<Simplex> defect_loci(const ObstructionReport& r) {
    std::set<Simplex> out;
    for (const auto& [s, h] : r.local_defects)
        out.insert(s);
    return out;
}

} // namespace

TEST_CASE("homology manifold check: spheres pass") {
    CHECK(homology_manifold_check(fixtures::boundary_simplex(5), 4).ok);
    CHECK(homology_manifold_check(fixtures::boundary_simplex(1), 0).ok);
    CHECK(homology_manifold_check(fixtures::torus7(), 2).ok);
    CHECK(homology_manifold_check(fixtures::projective_plane6(), 2).ok);
}

TEST_CASE("homology manifold check: the suspended torus fails at the poles") {
    auto r = homology_manifold_check(fixtures::suspended_torus7(), 3);
    CHECK_FALSE(r.ok);
    CHECK(defect_loci(r) == std::set<Simplex>{Simplex({7}), Simplex({8})});
    // the pole links are tori: H_1 = Z^2 obstructs
    CHECK(r.defects[0].link_homology.at(1) == DegreeHomology{2, {}});
}

TEST_CASE("homology manifold check: the closed 2-simplex fails on its boundary") {
    auto r = homology_manifold_check(fixtures::full_simplex(2), 2);
    CHECK_FALSE(r.ok);
    std::set<Simplex> expected;
    for (int v = 0; v < 3; ++v)
        expected.insert(Simplex({v}));
    expected.insert(Simplex({0, 1}));
    expected.insert(Simplex({0, 2}));
    expected.insert(Simplex({1, 2}));
    CHECK(defect_loci(r) == expected);
}

TEST_CASE("homology manifold check rejects mixed facet dimensions") {
    auto x = parse_complex("0 1 2\n3 4\n");
    CHECK_THROWS_AS(homology_manifold_check(x, 2), domain_error);
}

TEST_CASE("poincare pair check on the 2-sphere") {
    auto x = fixtures::boundary_simplex(3);
    PoincarePairContext ctx(x, 2);
    CHECK(ctx.check(Simplex({0, 1, 2})));  // point pair
    CHECK(ctx.check(Simplex({0})));        // disc mod hexagon
    for (const auto& s : x.simplices())
        CHECK(ctx.check(s));
    CHECK(poincare_pair_check(x, 2, Simplex({1, 2})));
    CHECK_THROWS_AS(ctx.check(Simplex({7})), domain_error);
}

TEST_CASE("poincare pair check fails at the suspension points") {
    auto x = fixtures::suspended_torus7();
    PoincarePairContext ctx(x, 3);
    CHECK_FALSE(ctx.check(Simplex({7})));
    CHECK_FALSE(ctx.check(Simplex({8})));
    CHECK(ctx.check(Simplex({0})));
    // agreement with "link is a homology sphere" across all simplices
    auto manifold = homology_manifold_check(x, 3);
    std::set<Simplex> link_defects = defect_loci(manifold);
    for (const auto& s : x.simplices())
        CHECK(ctx.check(s) == (link_defects.count(s) == 0));
}

TEST_CASE("poincare pair check propagates non-orientability") {
    CHECK_THROWS_AS(poincare_pair_check(fixtures::projective_plane6(), 2, Simplex({1})),
                    not_orientable_error);
}

TEST_CASE("obstruction complex of the 2-sphere: vanishing certificate") {
    auto res = obstruction_complex(fixtures::boundary_simplex(3), 2);
    CHECK(res.report.has_fundamental_cycle);
    CHECK(res.report.globally_acyclic);
    CHECK(res.report.locally_acyclic);
    CHECK(res.report.local_defects.empty());
    CHECK(res.report.global_homology.trivial());
    REQUIRE(res.complex.has_value());
    // the cone C(Φ)_{*+1} lives in degrees -1..n and is support-legal
    CHECK(res.complex->chain.bottom_degree() == -1);
    CHECK(res.complex->chain.top_degree() == 2);
    CHECK(check_support(*res.complex).ok);
}

TEST_CASE("obstruction complex of a single point") {
    auto res = obstruction_complex(SimplicialComplex("pt", {Simplex({0})}), 0);
    CHECK(res.report.globally_acyclic);
    CHECK(res.report.locally_acyclic);
}

TEST_CASE("obstruction complex of the suspended torus") {
    auto res = obstruction_complex(fixtures::suspended_torus7(), 3);
    CHECK(res.report.has_fundamental_cycle);
    CHECK_FALSE(res.report.locally_acyclic);
    CHECK_FALSE(res.report.globally_acyclic);
    CHECK(defect_loci(res.report) == std::set<Simplex>{Simplex({7}), Simplex({8})});
}

TEST_CASE("degraded obstruction reports for complexes without fundamental cycles") {
    auto rp = obstruction_complex(fixtures::projective_plane6(), 2);
    CHECK_FALSE(rp.report.has_fundamental_cycle);
    CHECK_FALSE(rp.report.globally_acyclic);
    CHECK(rp.report.locally_acyclic);  // RP^2 is a homology manifold
    CHECK_FALSE(rp.complex.has_value());

    auto d2 = obstruction_complex(fixtures::full_simplex(2), 2);
    CHECK_FALSE(d2.report.has_fundamental_cycle);
    CHECK_FALSE(d2.report.locally_acyclic);
}

TEST_CASE("detector equivalence: manifold check mirrors the local certificates") {
    struct Item {
        SimplicialComplex x;
        int n;
    };
    for (const auto& [x, n] :
         {Item{fixtures::boundary_simplex(3), 2}, Item{fixtures::boundary_simplex(4), 3},
          Item{fixtures::torus7(), 2}, Item{fixtures::suspended_torus7(), 3},
          Item{fixtures::full_simplex(2), 2}, Item{fixtures::projective_plane6(), 2}}) {
        auto manifold = homology_manifold_check(x, n);
        auto obstruction = obstruction_complex(x, n);
        CHECK_MESSAGE(manifold.ok == obstruction.report.locally_acyclic, x.name());
        CHECK_MESSAGE(defect_loci(manifold) == defect_loci(obstruction.report), x.name());
    }
}

TEST_CASE("obstruction reports are natural under disjoint union") {
    auto x = disjoint_union(fixtures::suspended_torus7(), fixtures::boundary_simplex(4));
    auto r = obstruction_complex(x, 3);
    CHECK(r.report.has_fundamental_cycle);
    CHECK_FALSE(r.report.locally_acyclic);
    // only the suspension points of the first summand are defective
    CHECK(defect_loci(r.report) == std::set<Simplex>{Simplex({7}), Simplex({8})});

    auto m = homology_manifold_check(x, 3);
    auto m1 = homology_manifold_check(fixtures::suspended_torus7(), 3);
    CHECK(defect_loci(m) == defect_loci(m1));
}

TEST_CASE("structure defect of the identity on K' is zero") {
    auto k = fixtures::boundary_simplex(3);
    BarycentricSubdivision sd(k);
    std::map<int, int> id;
    for (int i = 0; i < sd.derived().count_of_dim(0); ++i) {
        int v = sd.derived().simplex_at(0, i).vertex(0);
        id[v] = v;
    }
    SimplicialMap h(sd.derived(), sd.derived(), id);
    auto rep = structure_defect(h, sd);
    CHECK(rep.defect_free);
    CHECK(rep.entries.size() == k.simplices().size());
    CHECK(rep.global_cone_homology.trivial());
}

TEST_CASE("structure defect of a simplicial isomorphism is zero") {
    auto k = fixtures::boundary_simplex(3);
    BarycentricSubdivision sd(k);
    // the automorphism of K swapping vertices 0 and 1, induced on K'
    auto permute = [&](const Simplex& s) {
        std::vector<int> v;
        for (int w : s.vertices())
            v.push_back(w == 0 ? 1 : (w == 1 ? 0 : w));
        return Simplex(v);
    };
    std::map<int, int> img;
    for (int i = 0; i < sd.derived().count_of_dim(0); ++i) {
        int v = sd.derived().simplex_at(0, i).vertex(0);
        img[v] = k.index_of(permute(k.simplex(v)));
    }
    SimplicialMap h(sd.derived(), sd.derived(), img);
    CHECK(structure_defect(h, sd).defect_free);
}

TEST_CASE("structure defect of the last-vertex approximation K'' -> K' is zero") {
    auto k = fixtures::boundary_simplex(3);
    BarycentricSubdivision kp(k);
    BarycentricSubdivision kpp(kp.derived());
    SimplicialMap lv = last_vertex_map(kpp);
    auto rep = structure_defect(lv, kp);
    CHECK(rep.defect_free);
    for (const auto& e : rep.entries) {
        CHECK(e.domain_pair == e.cell_pair);
        CHECK(e.local_cone.trivial());
        CHECK_FALSE(e.domain_empty);
    }
}

TEST_CASE("structure defect of the S^0 collapse: the exact two-entry table") {
    SimplicialComplex k("s0", {Simplex({0}), Simplex({1})});
    BarycentricSubdivision sd(k);  // K' = K, derived vertex i = base vertex i
    SimplicialComplex n("s0_domain", {Simplex({0}), Simplex({1})});
    // both vertices collapse onto the barycenter of {0}
    std::map<int, int> img{{0, 0}, {1, 0}};
    SimplicialMap h(n, sd.derived(), img);
    auto rep = structure_defect(h, sd);
    CHECK_FALSE(rep.defect_free);
    REQUIRE(rep.entries.size() == 2);

    const auto& at_p = rep.entries[0];  // σ = {0}
    CHECK(at_p.simplex == Simplex({0}));
    CHECK(at_p.defect);
    CHECK(at_p.domain_pair.at(0) == DegreeHomology{2, {}});  // both points land here
    CHECK(at_p.cell_pair.at(0) == DegreeHomology{1, {}});
    CHECK(at_p.local_cone.at(0) == DegreeHomology{1, {}});  // shifted kernel class
    CHECK_FALSE(at_p.domain_empty);

    const auto& at_q = rep.entries[1];  // σ = {1}
    CHECK(at_q.simplex == Simplex({1}));
    CHECK(at_q.defect);
    CHECK(at_q.domain_pair.trivial());                       // empty point inverse
    CHECK(at_q.cell_pair.at(0) == DegreeHomology{1, {}});    // the cell is a point
    CHECK(at_q.local_cone.at(-1) == DegreeHomology{1, {}});  // cone of 0 -> Z, shifted
    CHECK(at_q.domain_empty);
}

TEST_CASE("report serialization has stable shape") {
    auto res = obstruction_complex(fixtures::suspended_torus7(), 3);
    ordered_json j = to_json(res.report);
    CHECK(j["n"] == 3);
    CHECK(j["locally_acyclic"] == false);
    REQUIRE(j["local_defects"].size() == 2);
    CHECK(j["local_defects"][0]["simplex"] == ordered_json::array({7}));
    CHECK(j["local_defects"][1]["simplex"] == ordered_json::array({8}));

    auto x = fixtures::boundary_simplex(3);
    auto ok = obstruction_complex(x, 2);
    ordered_json g = to_json(ok.report);
    CHECK(g["globally_acyclic"] == true);
    CHECK(g["global_homology"] == ordered_json::array());
}
