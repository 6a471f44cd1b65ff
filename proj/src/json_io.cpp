#include "surgery/json_io.hpp"

#include <cstdint>
#include <limits>

namespace surgery {

namespace {

int64_t to_int64(const Int& v) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw domain_error("integer too large for JSON serialization");
    return static_cast<int64_t>(v);
}

} // namespace

ordered_json to_json(const Simplex& s) {
    return ordered_json(s.vertices());
}

ordered_json to_json(const HomologySummary& h) {
    auto arr = ordered_json::array();
    for (const auto& [deg, g] : h.groups) {
        ordered_json e;
        e["degree"] = deg;
        e["betti"] = g.betti;
        auto tor = ordered_json::array();
        for (const auto& t : g.torsion)
            tor.push_back(to_int64(t));
        e["torsion"] = tor;
        arr.push_back(std::move(e));
    }
    return arr;
}

ordered_json to_json(const IntMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        auto row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(to_int64(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = rows;
    return j;
}

ordered_json to_json(const SparseIntMatrix& m) {
    return to_json(m.to_dense());
}

ordered_json to_json(const ManifoldCheckResult& r) {
    ordered_json j;
    j["n"] = r.n;
    j["is_homology_manifold"] = r.ok;
    auto defects = ordered_json::array();
    for (const auto& d : r.defects) {
        ordered_json e;
        e["simplex"] = to_json(d.simplex);
        e["link_homology"] = to_json(d.link_homology);
        defects.push_back(std::move(e));
    }
    j["defects"] = defects;
    return j;
}

ordered_json to_json(const ObstructionReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["has_fundamental_cycle"] = r.has_fundamental_cycle;
    j["globally_acyclic"] = r.globally_acyclic;
    j["locally_acyclic"] = r.locally_acyclic;
    j["global_homology"] = to_json(r.global_homology);
    auto defects = ordered_json::array();
    for (const auto& [s, h] : r.local_defects) {
        ordered_json e;
        e["simplex"] = to_json(s);
        e["homology"] = to_json(h);
        defects.push_back(std::move(e));
    }
    j["local_defects"] = defects;
    j["warnings"] = r.warnings;
    return j;
}

ordered_json to_json(const StructureDefectReport& r) {
    ordered_json j;
    j["defect_free"] = r.defect_free;
    j["global_cone_homology"] = to_json(r.global_cone_homology);
    auto entries = ordered_json::array();
    for (const auto& e : r.entries) {
        ordered_json o;
        o["simplex"] = to_json(e.simplex);
        o["domain_pair_homology"] = to_json(e.domain_pair);
        o["cell_pair_homology"] = to_json(e.cell_pair);
        o["local_cone_homology"] = to_json(e.local_cone);
        o["domain_empty"] = e.domain_empty;
        o["defect"] = e.defect;
        entries.push_back(std::move(o));
    }
    j["entries"] = entries;
    return j;
}

ordered_json zx_dump(const ZXComplex& c) {
    ordered_json j;
    j["base"] = c.base ? c.base->name() : "";
    if (c.chain.empty()) {
        j["degrees"] = ordered_json::array();
        return j;
    }
    j["bottom_degree"] = c.chain.bottom_degree();
    j["top_degree"] = c.chain.top_degree();
    auto degrees = ordered_json::array();
    for (int r = c.chain.bottom_degree(); r <= c.chain.top_degree(); ++r) {
        ordered_json e;
        e["degree"] = r;
        e["rank"] = c.chain.rank(r);
        auto labels = ordered_json::array();
        for (int i = 0; i < c.chain.rank(r); ++i)
            labels.push_back(to_json(c.label_simplex(r, i)));
        e["labels"] = labels;
        if (c.chain.has_diff(r))
            e["differential"] = to_json(c.chain.diff(r));
        else
            e["differential"] = nullptr;
        degrees.push_back(std::move(e));
    }
    j["degrees"] = degrees;
    return j;
}

} // namespace surgery
