// Regenerates the bundled fixture corpus under fixtures/.

#include <fstream>
#include <iostream>

#include "surgery/fixtures.hpp"
#include "surgery/subdivision.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    for (const auto& [stem, complex] : surgery::fixtures::bundled_corpus()) {
        std::ofstream out(dir + "/" + stem + ".facets", std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << dir << "/" << stem << ".facets\n";
            return 1;
        }
        out << surgery::to_facet_list_text(complex);
        std::cout << stem << ": " << complex.simplex_count() << " simplices\n";
    }

    // the structure-defect example inputs over K = boundary_delta_3:
    // N = K'' with the last-vertex assignment into K'
    surgery::SimplicialComplex k = surgery::fixtures::boundary_simplex(3);
    surgery::BarycentricSubdivision kp(k);
    surgery::BarycentricSubdivision kpp(kp.derived());
    {
        std::ofstream out(dir + "/boundary_delta_3_second_subdivision.facets", std::ios::binary);
        out << "# second barycentric subdivision of boundary_delta_3\n";
        for (const auto& f : kpp.derived().facets())
            out << f.to_string() << "\n";
    }
    {
        std::ofstream out(dir + "/boundary_delta_3_last_vertex.map", std::ios::binary);
        out << "# last-vertex approximation K'' -> K' over K = boundary_delta_3\n";
        out << "# each K''-vertex (a simplex of K') is sent to the barycenter of a\n";
        out << "# simplex of K, written as that simplex's vertex list\n";
        surgery::SimplicialMap lv = surgery::last_vertex_map(kpp);
        for (int i = 0; i < kpp.derived().count_of_dim(0); ++i) {
            int v = kpp.derived().simplex_at(0, i).vertex(0);
            int image = lv.image_of_vertex(v);
            out << v << " -> " << kp.base().simplex(image).to_string() << "\n";
        }
    }
    std::cout << "structure-defect example written\n";
    return 0;
}
