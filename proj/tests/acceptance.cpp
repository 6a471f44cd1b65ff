// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "surgery/fixtures.hpp"
#include "surgery/l_theory.hpp"
#include "surgery/obstruction.hpp"
#include "surgery/smith.hpp"

using namespace surgery;
using clock_type = std::chrono::steady_clock;

namespace {

struct Criterion {
    int number;
    std::string label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

std::set<Simplex> loci(const ManifoldCheckResult& r) {
    std::set<Simplex> out;
    for (const auto& d : r.defects)
        out.insert(d.simplex);
    return out;
}

std::set<Simplex> loci(const ObstructionReport& r) {
    std::set<Simplex> out;
    for (const auto& [s, h] : r.local_defects)
        out.insert(s);
    return out;
}

bool check(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty())
        detail = what;
    return cond;
}

// --- criterion 1: detector equivalence --------------------------------------

bool criterion_detectors(std::string& detail) {
    bool ok = true;
    struct Item {
        SimplicialComplex x;
        int n;
        bool expected;
    };
    std::vector<Item> items;
    for (int n = 0; n <= 4; ++n)
        items.push_back({fixtures::boundary_simplex(n + 1), n, true});
    items.push_back({fixtures::torus7(), 2, true});
    items.push_back({fixtures::projective_plane6(), 2, true});
    items.push_back({fixtures::complex_projective_plane9(), 4, true});
    items.push_back({fixtures::suspended_torus7(), 3, false});
    items.push_back({fixtures::full_simplex(2), 2, false});
    for (const auto& [x, n, expected] : items) {
        auto manifold = homology_manifold_check(x, n);
        auto obstruction = obstruction_complex(x, n);
        ok &= check(manifold.ok == expected, x.name() + ": manifold check verdict", detail);
        ok &= check(obstruction.report.locally_acyclic == expected,
                    x.name() + ": local certificate verdict", detail);
        ok &= check(loci(manifold) == loci(obstruction.report),
                    x.name() + ": defect loci differ", detail);
    }
    // the negative fixtures fail at the advertised places
    auto susp = homology_manifold_check(fixtures::suspended_torus7(), 3);
    ok &= check(loci(susp) == std::set<Simplex>{Simplex({7}), Simplex({8})},
                "suspended torus defect loci", detail);
    return ok;
}

// --- criterion 2: local => global on randomized morphisms -------------------

ZXMorphism random_raising_perturbation(const ZXComplex& c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> keep(0, 3);
    const IntChainComplex& ch = c.chain;
    std::vector<IntMatrix> h;
    for (int r = ch.bottom_degree(); r <= ch.top_degree(); ++r) {
        IntMatrix m(ch.rank(r + 1), ch.rank(r));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                const Simplex& row_label = c.label_simplex(r + 1, i);
                const Simplex& col_label = c.label_simplex(r, j);
                if (row_label.contains(col_label) && row_label.dim() > col_label.dim() &&
                    keep(rng) == 0)
                    m.at(i, j) = coeff(rng);
            }
        h.push_back(m);
    }
    std::map<int, SparseIntMatrix> mats;
    for (int r = ch.bottom_degree(); r <= ch.top_degree(); ++r) {
        IntMatrix f = IntMatrix::identity(ch.rank(r));
        size_t idx = static_cast<size_t>(r - ch.bottom_degree());
        if (r < ch.top_degree())
            f = f + ch.diff(r + 1).to_dense() * h[idx];
        if (r > ch.bottom_degree())
            f = f + h[idx - 1] * ch.diff(r).to_dense();
        mats[r] = SparseIntMatrix::from_dense(f);
    }
    return ZXMorphism(c, c, std::move(mats));
}

bool criterion_local_global(std::string& detail) {
    bool ok = true;
    std::mt19937_64 rng(0x5eed);
    ZXComplex c = label_simplicial_chains(fixtures::boundary_simplex(3));
    for (int t = 0; t < 100; ++t) {
        ZXMorphism f = random_raising_perturbation(c, rng);
        ok &= check(is_local_equivalence(f).ok,
                    "perturbation " + std::to_string(t) + " not locally acyclic", detail);
        ok &= check(is_contractible(mapping_cone(assemble(f))),
                    "perturbation " + std::to_string(t) + " assembled cone not acyclic", detail);
        if (!ok)
            break;
    }
    // the closed-edge counterexample: global iso, exactly two local defects
    auto base = std::make_shared<SimplicialComplex>("delta_1",
                                                    std::vector<Simplex>{Simplex({0, 1})});
    ZXComplex source, target;
    source.base = base;
    source.chain = IntChainComplex(0, {1}, {});
    source.labels = {{base->index_of(Simplex({0}))}};
    target.base = base;
    target.chain = IntChainComplex(0, {1}, {});
    target.labels = {{base->index_of(Simplex({0, 1}))}};
    SparseIntMatrix one(1, 1);
    one.push_entry(0, 0, 1);
    ZXMorphism counterexample(source, target, {{0, one}});
    ok &= check(is_contractible(mapping_cone(assemble(counterexample))),
                "counterexample should be a global isomorphism", detail);
    auto rep = is_local_equivalence(counterexample);
    ok &= check(!rep.ok, "counterexample wrongly local", detail);
    ok &= check(rep.defects.size() == 2 && rep.defects.count(Simplex({0})) == 1 &&
                    rep.defects.count(Simplex({0, 1})) == 1,
                "counterexample defect set", detail);
    return ok;
}

// --- criterion 3: the chain-duality example ----------------------------------

bool criterion_chain_duality(std::string& detail) {
    bool ok = true;
    for (const auto& x :
         {fixtures::boundary_simplex(3), fixtures::torus7(), fixtures::projective_plane6()}) {
        ZXComplex tc = chain_dual(label_simplicial_chains(x));
        HomologySummary assembled = homology(assemble(tc));
        HomologySummary cochain = homology(dualize(chain_complex_of(x), 0));
        ok &= check(assembled == cochain, x.name() + ": T C(X') vs H^{-*}(X)", detail);
    }
    // the Z/2 of the projective plane must be visible
    HomologySummary rp =
        homology(assemble(chain_dual(label_simplicial_chains(fixtures::projective_plane6()))));
    ok &= check(rp.at(-2) == DegreeHomology{0, {Int(2)}}, "rp2_6 torsion in degree -2", detail);
    return ok;
}

// --- criterion 4: Poincaré duality certificates ------------------------------

bool criterion_duality_certificates(std::string& detail) {
    bool ok = true;
    struct Item {
        SimplicialComplex x;
        int n;
    };
    for (const auto& [x, n] :
         {Item{fixtures::boundary_simplex(3), 2}, Item{fixtures::boundary_simplex(4), 3},
          Item{fixtures::boundary_simplex(5), 4}, Item{fixtures::torus7(), 2}}) {
        for (bool reverse : {false, true}) {
            ObstructionOptions opts;
            opts.reverse_orientation = reverse;
            auto res = obstruction_complex(x, n, opts);
            ok &= check(res.report.globally_acyclic && res.report.locally_acyclic,
                        x.name() + (reverse ? " (reversed)" : "") + ": not acyclic", detail);
        }
    }
    auto susp = obstruction_complex(fixtures::suspended_torus7(), 3);
    ok &= check(!susp.report.globally_acyclic && !susp.report.locally_acyclic,
                "suspended torus wrongly acyclic", detail);
    ok &= check(loci(susp.report) == std::set<Simplex>{Simplex({7}), Simplex({8})},
                "suspended torus local defects not at the suspension points", detail);
    return ok;
}

// --- criterion 5: the signature pipeline -------------------------------------

bool criterion_signature(std::string& detail) {
    bool ok = true;
    SymmetricForm cp = intersection_form(fixtures::complex_projective_plane9(), 4);
    ok &= check(cp.rank() == 1, "cp2_9 middle rank", detail);
    ok &= check(cp.is_unimodular(), "cp2_9 form not unimodular", detail);
    long s = signature(cp);
    ok &= check(s == 1 || s == -1, "cp2_9 signature not ±1", detail);
    SymmetricForm cp_rev = intersection_form(fixtures::complex_projective_plane9(), 4, true);
    long s_rev = signature(cp_rev);
    ok &= check(s_rev == -s, "orientation reversal must negate the signature", detail);
    ok &= check(std::max(s, s_rev) == 1, "+1 must be attained under one orientation", detail);

    SymmetricForm s4 = intersection_form(fixtures::boundary_simplex(5), 4);
    ok &= check(s4.rank() == 0 && signature(s4) == 0, "4-sphere form not empty", detail);

    ok &= check(signature(SymmetricForm{e8_form()}) == 8, "E8 signature", detail);
    ok &= check(quadratic_signature_over_8(SymmetricForm{e8_form()}) == 1, "E8 sig/8", detail);
    return ok;
}

// --- criterion 6: exhaustive Arf agreement -----------------------------------

bool criterion_arf(std::string& detail) {
    bool ok = true;
    int checked = 0;
    // rank 2
    for (int qbits = 0; qbits < 4; ++qbits) {
        QuadraticFormGF2 f({{0, 1}, {1, 0}},
                           {static_cast<uint8_t>(qbits & 1), static_cast<uint8_t>(qbits >> 1)});
        ok &= check(arf_democratic(f) == arf_symplectic(f), "rank-2 disagreement", detail);
        ++checked;
    }
    // rank 4: every nonsingular alternating matrix with every q
    for (int bits = 0; bits < 64; ++bits) {
        std::vector<std::vector<uint8_t>> lam(4, std::vector<uint8_t>(4, 0));
        int b = bits;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                lam[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    lam[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                        static_cast<uint8_t>(b & 1);
                b >>= 1;
            }
        if (!QuadraticFormGF2(lam, {0, 0, 0, 0}).nonsingular())
            continue;
        for (int qbits = 0; qbits < 16; ++qbits) {
            std::vector<uint8_t> q;
            for (int i = 0; i < 4; ++i)
                q.push_back(static_cast<uint8_t>((qbits >> i) & 1));
            QuadraticFormGF2 f(lam, q);
            ok &= check(arf_democratic(f) == arf_symplectic(f), "rank-4 disagreement", detail);
            ++checked;
        }
    }
    ok &= check(checked == 4 + 28 * 16, "enumeration size " + std::to_string(checked), detail);
    return ok;
}

// --- criterion 7: the three L-group tables -----------------------------------

bool criterion_l_tables(std::string& detail) {
    const std::vector<std::string> quadratic = {"0", "0", "Z2", "0", "Z", "0", "Z2",
                                                "0", "Z", "0", "Z2", "0", "Z"};
    const std::vector<std::string> symmetric = {"Z", "Z2", "0", "0", "Z", "Z2", "0",
                                                "0", "Z", "Z2", "0", "0", "Z"};
    const std::vector<std::string> hyperquadratic = {"Z",  "0", "Z2", "Z2", "Z8", "0", "Z2",
                                                     "Z2", "Z8", "0", "Z2", "Z2", "Z8"};
    bool ok = true;
    for (int n = 0; n <= 12; ++n) {
        ok &= check(l_group_table(LFlavor::quadratic, n).group ==
                        quadratic[static_cast<size_t>(n)],
                    "quadratic n=" + std::to_string(n), detail);
        ok &= check(l_group_table(LFlavor::symmetric, n).group ==
                        symmetric[static_cast<size_t>(n)],
                    "symmetric n=" + std::to_string(n), detail);
        ok &= check(l_group_table(LFlavor::hyperquadratic, n).group ==
                        hyperquadratic[static_cast<size_t>(n)],
                    "hyperquadratic n=" + std::to_string(n), detail);
    }
    ok &= check(l_group_table(LFlavor::quadratic, 4).generator_invariant == "signature/8",
                "quadratic generator name", detail);
    ok &= check(l_group_table(LFlavor::quadratic, 6).generator_invariant == "Arf invariant",
                "Arf generator name", detail);
    ok &= check(l_group_table(LFlavor::symmetric, 9).generator_invariant == "deRham invariant",
                "deRham generator name", detail);
    return ok;
}

// --- criterion 8: structure defects ------------------------------------------

bool criterion_structure_defect(std::string& detail) {
    bool ok = true;
    {
        auto k = fixtures::boundary_simplex(3);
        BarycentricSubdivision kp(k);
        BarycentricSubdivision kpp(kp.derived());
        auto rep = structure_defect(last_vertex_map(kpp), kp);
        ok &= check(rep.defect_free, "last-vertex approximation has defects", detail);
        ok &= check(rep.entries.size() == 14, "entry per simplex of K", detail);
    }
    {
        SimplicialComplex k("s0", {Simplex({0}), Simplex({1})});
        BarycentricSubdivision sd(k);
        SimplicialComplex n("s0_domain", {Simplex({0}), Simplex({1})});
        SimplicialMap h(n, sd.derived(), {{0, 0}, {1, 0}});
        auto rep = structure_defect(h, sd);
        ok &= check(!rep.defect_free, "collapse should be defective", detail);
        ok &= check(rep.entries.size() == 2, "collapse table size", detail);
        const auto& p = rep.entries[0];
        const auto& q = rep.entries[1];
        ok &= check(p.defect && p.domain_pair.at(0).betti == 2 && p.cell_pair.at(0).betti == 1,
                    "defect table at the target point", detail);
        ok &= check(q.defect && q.domain_pair.trivial() && q.cell_pair.at(0).betti == 1 &&
                        q.domain_empty,
                    "defect table at the missed point", detail);
    }
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "detector equivalence (links vs local duality certificates)", 10.0,
         criterion_detectors},
        {2, "local chain equivalence assembles globally; edge counterexample", 5.0,
         criterion_local_global},
        {3, "chain dual of C(X') computes H^{-*}(X)", 10.0, criterion_chain_duality},
        {4, "Poincaré duality certificates and suspension defects", 30.0,
         criterion_duality_certificates},
        {5, "signature pipeline: cp2_9, 4-sphere, E8", 60.0, criterion_signature},
        {6, "Arf invariant: democratic vs symplectic, exhaustive rank <= 4", 1.0, criterion_arf},
        {7, "L-group tables of the integers, n = 0..12", 10.0, criterion_l_tables},
        {8, "structure defects: last-vertex approximation and S^0 collapse", 10.0,
         criterion_structure_defect},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        auto t0 = clock_type::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
        if (dt > c.budget_seconds) {
            ok = false;
            if (detail.empty())
                detail = "exceeded time budget of " + std::to_string(c.budget_seconds) + "s";
        }
        std::printf("criterion %d: %-62s %s (%.2fs)\n", c.number, c.label.c_str(),
                    ok ? "PASS" : "FAIL", dt);
        if (!ok) {
            ++failures;
            if (!detail.empty())
                std::printf("  -> %s\n", detail.c_str());
        }
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
