// Command-line front end: fixture ingestion, pipeline orchestration and
// JSON report emission. Exit codes: 0 success, 2 negative mathematical
// verdict, 1 error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "surgery/fixtures.hpp"
#include "surgery/json_io.hpp"
#include "surgery/l_theory.hpp"
#include "surgery/smith.hpp"

namespace {

using surgery::ordered_json;

struct CliError {
    std::string kind;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CliError{"io", "cannot read input file " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

surgery::SimplicialComplex load_complex(const std::string& path) {
    std::string text = read_file(path);
    try {
        if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
            return surgery::parse_complex_json(text);
        return surgery::parse_complex(text, stem_of(path));
    } catch (const surgery::parse_error& e) {
        throw CliError{"parse", std::string(e.what()) + " in " + path};
    }
}

int infer_dimension(const surgery::SimplicialComplex& x, int dim_flag) {
    if (dim_flag >= 0)
        return dim_flag;
    if (x.empty())
        throw CliError{"domain", "empty complex has no dimension"};
    int n = x.dim();
    if (!x.is_pure(n))
        throw CliError{"domain",
                       "facet dimensions are mixed; pass --dim to choose one explicitly"};
    return n;
}

struct OutputSink {
    std::string path;  // empty = stdout
    bool json = false;

    void emit_json(ordered_json j) const {
        std::string text = j.dump(2) + "\n";
        write(text);
    }
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw CliError{"io", "cannot write output file " + path};
            out << text;
        }
    }
};

ordered_json report_header(const std::string& command, const surgery::SimplicialComplex& x) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    ordered_json c;
    c["name"] = x.name();
    c["dim"] = x.dim();
    c["f_vector"] = x.f_vector();
    j["complex"] = c;
    return j;
}

std::string text_homology(const surgery::HomologySummary& h) {
    return h.to_string();
}

int cmd_homology(const surgery::SimplicialComplex& x, const OutputSink& sink) {
    auto h = surgery::homology(surgery::chain_complex_of(x));
    if (sink.json) {
        ordered_json j = report_header("homology", x);
        j["homology"] = surgery::to_json(h);
        sink.emit_json(j);
    } else {
        std::ostringstream os;
        os << x.name() << ": " << text_homology(h) << "\n";
        sink.write(os.str());
    }
    return 0;
}

int cmd_check_manifold(const surgery::SimplicialComplex& x, int dim_flag, const OutputSink& sink) {
    int n = infer_dimension(x, dim_flag);
    surgery::ManifoldCheckResult r;
    try {
        r = surgery::homology_manifold_check(x, n);
    } catch (const surgery::domain_error& e) {
        throw CliError{"domain", e.what()};
    }
    if (sink.json) {
        ordered_json j = report_header("check-manifold", x);
        j["report"] = surgery::to_json(r);
        sink.emit_json(j);
    } else {
        std::ostringstream os;
        os << x.name() << ": homology manifold of dimension " << n << ": "
           << (r.ok ? "yes" : "no") << "\n";
        for (const auto& d : r.defects)
            os << "  defect at [" << d.simplex.to_string()
               << "], link homology: " << d.link_homology.to_string() << "\n";
        sink.write(os.str());
    }
    return r.ok ? 0 : 2;
}

int cmd_dual_cells(const surgery::SimplicialComplex& x, const OutputSink& sink) {
    surgery::BarycentricSubdivision sd(x);
    auto cells = ordered_json::array();
    std::ostringstream os;
    for (const auto& s : x.simplices()) {
        surgery::DualCell d = surgery::dual_cell(sd, s);
        if (sink.json) {
            ordered_json e;
            e["simplex"] = surgery::to_json(s);
            e["cell_f_vector"] = d.cell.f_vector();
            e["cell_euler"] = d.cell.euler_characteristic();
            e["boundary_f_vector"] = d.boundary.f_vector();
            e["boundary_euler"] = d.boundary.euler_characteristic();
            cells.push_back(std::move(e));
        } else {
            os << "D([" << s.to_string() << "]): f = (";
            auto f = d.cell.f_vector();
            for (size_t i = 0; i < f.size(); ++i)
                os << (i ? "," : "") << f[i];
            os << "), boundary f = (";
            auto bf = d.boundary.f_vector();
            for (size_t i = 0; i < bf.size(); ++i)
                os << (i ? "," : "") << bf[i];
            os << ")\n";
        }
    }
    if (sink.json) {
        ordered_json j = report_header("dual-cells", x);
        j["cells"] = cells;
        sink.emit_json(j);
    } else {
        sink.write(os.str());
    }
    return 0;
}

int cmd_obstruction(const surgery::SimplicialComplex& x, int dim_flag, bool reverse,
                    bool simply_connected, bool dump_chain, const OutputSink& sink) {
    int n = infer_dimension(x, dim_flag);
    surgery::ObstructionOptions opts;
    opts.reverse_orientation = reverse;
    surgery::ObstructionResult res;
    try {
        res = surgery::obstruction_complex(x, n, opts);
    } catch (const surgery::domain_error& e) {
        throw CliError{"domain", e.what()};
    }
    if (!simply_connected)
        res.report.warnings.push_back(
            "complex not flagged simply connected; the global verdict certifies "
            "Z-contractibility only, not the vanishing of the total surgery obstruction");
    bool positive = res.report.globally_acyclic && res.report.locally_acyclic;
    if (sink.json) {
        ordered_json j = report_header("obstruction", x);
        j["report"] = surgery::to_json(res.report);
        if (dump_chain && res.complex)
            j["obstruction_chain"] = surgery::zx_dump(*res.complex);
        sink.emit_json(j);
    } else {
        std::ostringstream os;
        os << x.name() << " (n = " << n << "):\n";
        os << "  fundamental cycle: " << (res.report.has_fundamental_cycle ? "yes" : "no") << "\n";
        os << "  globally acyclic:  " << (res.report.globally_acyclic ? "yes" : "no") << "\n";
        os << "  locally acyclic:   " << (res.report.locally_acyclic ? "yes" : "no") << "\n";
        if (!res.report.global_homology.trivial())
            os << "  cone homology:     " << res.report.global_homology.to_string() << "\n";
        for (const auto& [s, h] : res.report.local_defects)
            os << "  local defect at [" << s.to_string() << "]: " << h.to_string() << "\n";
        for (const auto& w : res.report.warnings)
            os << "  warning: " << w << "\n";
        sink.write(os.str());
    }
    return positive ? 0 : 2;
}

int cmd_signature(const surgery::SimplicialComplex& x, int dim_flag, bool reverse,
                  const OutputSink& sink) {
    int n = infer_dimension(x, dim_flag);
    surgery::SymmetricForm form;
    try {
        form = surgery::intersection_form(x, n, reverse);
    } catch (const surgery::domain_error& e) {
        throw CliError{"domain", e.what()};
    } catch (const surgery::not_orientable_error& e) {
        throw CliError{"not-orientable", e.what()};
    }
    long sig = surgery::signature(form);
    if (sink.json) {
        ordered_json j = report_header("signature", x);
        j["n"] = n;
        j["middle_rank"] = form.rank();
        j["form"] = surgery::to_json(form.matrix);
        j["even"] = form.is_even();
        j["unimodular"] = form.is_unimodular();
        j["signature"] = sig;
        sink.emit_json(j);
    } else {
        std::ostringstream os;
        os << x.name() << ": intersection form rank " << form.rank() << ", signature " << sig
           << "\n";
        sink.write(os.str());
    }
    return 0;
}

std::map<int, int> parse_map_file(const std::string& text, const surgery::SimplicialComplex& k,
                                  const surgery::SimplicialComplex& k_derived) {
    std::map<int, int> img;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw CliError{"parse", "map file line " + std::to_string(lineno) + ": missing '->'"};
        std::istringstream left(line.substr(0, arrow)), right(line.substr(arrow + 2));
        int v;
        if (!(left >> v))
            throw CliError{"parse",
                           "map file line " + std::to_string(lineno) + ": bad source vertex"};
        int extra;
        if (left >> extra)
            throw CliError{"parse", "map file line " + std::to_string(lineno) +
                                        ": more than one source vertex"};
        std::vector<int> verts;
        int w;
        while (right >> w)
            verts.push_back(w);
        if (verts.empty())
            throw CliError{"parse",
                           "map file line " + std::to_string(lineno) + ": empty image simplex"};
        int id;
        try {
            id = k.index_of(surgery::Simplex(verts));
        } catch (const surgery::domain_error& e) {
            throw CliError{"parse", "map file line " + std::to_string(lineno) + ": " + e.what()};
        }
        if (id < 0)
            throw CliError{"domain", "map file line " + std::to_string(lineno) +
                                         ": image simplex is not in the base complex"};
        // derived vertex ids equal base simplex ids
        if (!k_derived.contains(surgery::Simplex({id})))
            throw CliError{"domain", "map file line " + std::to_string(lineno) +
                                         ": image barycenter missing from subdivision"};
        if (img.count(v))
            throw CliError{"parse", "map file line " + std::to_string(lineno) +
                                        ": duplicate assignment for vertex " + std::to_string(v)};
        img[v] = id;
    }
    return img;
}

int cmd_structure_defect(const std::string& input, const std::string& base_path,
                         const std::string& map_path, const OutputSink& sink) {
    surgery::SimplicialComplex n_complex = load_complex(input);
    surgery::SimplicialComplex k = load_complex(base_path);
    surgery::BarycentricSubdivision sd(k);
    std::map<int, int> img = parse_map_file(read_file(map_path), k, sd.derived());
    surgery::StructureDefectReport rep;
    try {
        surgery::SimplicialMap h(n_complex, sd.derived(), std::move(img));
        rep = surgery::structure_defect(h, sd);
    } catch (const surgery::domain_error& e) {
        throw CliError{"domain", e.what()};
    }
    if (sink.json) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "structure-defect";
        j["domain"] = n_complex.name();
        j["base"] = k.name();
        j["report"] = surgery::to_json(rep);
        sink.emit_json(j);
    } else {
        std::ostringstream os;
        os << "structure defect of " << n_complex.name() << " -> " << k.name() << "': "
           << (rep.defect_free ? "defect-free" : "defective") << "\n";
        for (const auto& e : rep.entries) {
            if (!e.defect)
                continue;
            os << "  defect at [" << e.simplex.to_string() << "]: domain "
               << e.domain_pair.to_string() << " vs cell " << e.cell_pair.to_string()
               << ", cone " << e.local_cone.to_string() << (e.domain_empty ? " (empty)" : "")
               << "\n";
        }
        sink.write(os.str());
    }
    return rep.defect_free ? 0 : 2;
}

int cmd_l_table(const std::string& flavor_name, const std::string& range,
                const OutputSink& sink) {
    surgery::LFlavor flavor;
    if (flavor_name == "quadratic")
        flavor = surgery::LFlavor::quadratic;
    else if (flavor_name == "symmetric")
        flavor = surgery::LFlavor::symmetric;
    else if (flavor_name == "hyperquadratic")
        flavor = surgery::LFlavor::hyperquadratic;
    else
        throw CliError{"usage", "unknown flavor '" + flavor_name +
                                    "' (expected quadratic, symmetric or hyperquadratic)"};
    int lo = 0, hi = 0;
    auto dots = range.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(range);
        } else {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CliError{"usage", "bad range '" + range + "' (expected e.g. 0..8)"};
    }
    if (lo < 0 || hi < lo)
        throw CliError{"usage", "bad range '" + range + "'"};

    if (sink.json) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "l-table";
        j["flavor"] = flavor_name;
        auto entries = ordered_json::array();
        for (int n = lo; n <= hi; ++n) {
            auto d = surgery::l_group_table(flavor, n);
            ordered_json e;
            e["n"] = n;
            e["group"] = d.group;
            e["invariant"] = d.generator_invariant;
            entries.push_back(std::move(e));
        }
        j["entries"] = entries;
        sink.emit_json(j);
    } else {
        std::ostringstream os;
        for (int n = lo; n <= hi; ++n) {
            auto d = surgery::l_group_table(flavor, n);
            os << flavor_name << " L_" << n << " = " << d.group;
            if (!d.generator_invariant.empty())
                os << "  (" << d.generator_invariant << ")";
            os << "\n";
        }
        sink.write(os.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic algebraic surgery toolkit"};
    app.require_subcommand(1);

    std::string input, output, base_path, map_path, flavor, range = "0..12", orientation = "auto";
    int dim_flag = -1;
    bool json = false, dump_chain = false, simply_connected = false;

    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("--input", input, "facet-list or JSON complex file")->required();
        cmd->add_option("--output", output, "write the report to a file instead of stdout");
        cmd->add_flag("--json", json, "emit the JSON report");
    };

    auto* homology_cmd = app.add_subcommand("homology", "Betti numbers and torsion");
    add_common(homology_cmd);

    auto* manifold_cmd =
        app.add_subcommand("check-manifold", "homology manifold recognition via links");
    add_common(manifold_cmd);
    manifold_cmd->add_option("--dim", dim_flag, "dimension n (default: facet dimension)");

    auto* cells_cmd = app.add_subcommand("dual-cells", "dual cell f-vectors");
    add_common(cells_cmd);

    auto* obstruction_cmd =
        app.add_subcommand("obstruction", "total-surgery-obstruction vanishing certificate");
    add_common(obstruction_cmd);
    obstruction_cmd->add_option("--dim", dim_flag, "dimension n (default: facet dimension)");
    obstruction_cmd->add_option("--orientation", orientation, "auto|reverse")
        ->check(CLI::IsMember({"auto", "reverse"}));
    obstruction_cmd->add_flag("--assume-simply-connected", simply_connected,
                              "suppress the fundamental-group warning");
    obstruction_cmd->add_flag("--dump-chain", dump_chain,
                              "include the labeled cone in the JSON report");

    auto* signature_cmd =
        app.add_subcommand("signature", "intersection form and signature (n = 4k)");
    add_common(signature_cmd);
    signature_cmd->add_option("--dim", dim_flag, "dimension n (default: facet dimension)");
    signature_cmd->add_option("--orientation", orientation, "auto|reverse")
        ->check(CLI::IsMember({"auto", "reverse"}));

    auto* defect_cmd =
        app.add_subcommand("structure-defect", "point-inverse defect table of a simplicial map");
    add_common(defect_cmd);
    defect_cmd->add_option("--base", base_path, "base complex K (the map lands in K')")
        ->required();
    defect_cmd->add_option("--map", map_path, "vertex assignment file: 'v -> k1 k2 ...'")
        ->required();

    auto* table_cmd = app.add_subcommand("l-table", "homotopy groups of the L-spectra");
    table_cmd->add_option("flavor", flavor, "quadratic|symmetric|hyperquadratic")->required();
    table_cmd->add_option("range", range, "n range, e.g. 0..8");
    table_cmd->add_option("--output", output, "write the report to a file instead of stdout");
    table_cmd->add_flag("--json", json, "emit the JSON report");

    CLI11_PARSE(app, argc, argv);

    OutputSink sink{output, json};
    try {
        try {
            if (homology_cmd->parsed())
                return cmd_homology(load_complex(input), sink);
            if (manifold_cmd->parsed())
                return cmd_check_manifold(load_complex(input), dim_flag, sink);
            if (cells_cmd->parsed())
                return cmd_dual_cells(load_complex(input), sink);
            if (obstruction_cmd->parsed())
                return cmd_obstruction(load_complex(input), dim_flag, orientation == "reverse",
                                       simply_connected, dump_chain, sink);
            if (signature_cmd->parsed())
                return cmd_signature(load_complex(input), dim_flag, orientation == "reverse",
                                     sink);
            if (defect_cmd->parsed())
                return cmd_structure_defect(input, base_path, map_path, sink);
            if (table_cmd->parsed())
                return cmd_l_table(flavor, range, sink);
        } catch (const surgery::parse_error& e) {
            throw CliError{"parse", e.what()};
        } catch (const surgery::domain_error& e) {
            throw CliError{"domain", e.what()};
        } catch (const surgery::not_orientable_error& e) {
            throw CliError{"not-orientable", e.what()};
        } catch (const surgery::structural_error& e) {
            throw CliError{"internal", e.what()};
        }
    } catch (const CliError& err) {
        ordered_json j;
        j["schema"] = 1;
        j["error"]["kind"] = err.kind;
        j["error"]["message"] = err.message;
        std::cout << j.dump(2) << "\n";
        return 1;
    }
    return 0;
}
