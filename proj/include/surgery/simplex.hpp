#pragma once

#include <map>
#include <string>
#include <vector>

#include "surgery/errors.hpp"

namespace surgery {

/// An abstract simplex: a strictly increasing list of non-negative vertex ids.
/// dim() == number of vertices - 1.
class Simplex {
public:
    Simplex() = default;

    /// Vertices may arrive in any order; they are sorted. Repeated or
    /// negative vertices and the empty list are rejected.
    explicit Simplex(std::vector<int> vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& vertices() const { return verts_; }
    int vertex(int i) const { return verts_[static_cast<size_t>(i)]; }
    int max_vertex() const { return verts_.back(); }

    /// The face obtained by deleting the vertex at position i.
    Simplex face_omitting(int i) const;

    bool has_vertex(int v) const;
    /// Face relation: other ⊆ this.
    bool contains(const Simplex& other) const;

    /// All proper nonempty faces.
    std::vector<Simplex> proper_faces() const;

    /// Position of vertex v in the sorted list, -1 if absent.
    int position_of(int v) const;

    /// Incidence sign [this : this minus vertex at position i] = (-1)^i.
    static int incidence_sign(const Simplex& coface, const Simplex& face);

    std::string to_string() const;

    bool operator==(const Simplex& o) const { return verts_ == o.verts_; }
    /// Canonical order: by dimension, then lexicographic on vertices.
    bool operator<(const Simplex& o) const;

private:
    std::vector<int> verts_;
};

/// A finite abstract simplicial complex with face-closed simplex set.
/// Simplices are kept in canonical (dimension, lexicographic) order, which
/// fixes the basis of every chain group.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure is taken; duplicate facets collapse; facets that are
    /// faces of other facets are absorbed.
    SimplicialComplex(std::string name, std::vector<Simplex> facets);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    bool empty() const { return simplices_.empty(); }
    /// -1 for the empty complex.
    int dim() const { return dim_; }

    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }

    int simplex_count() const { return static_cast<int>(simplices_.size()); }
    int count_of_dim(int p) const;
    /// Global index into simplices(), or -1.
    int index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }
    const Simplex& simplex(int global_index) const { return simplices_[static_cast<size_t>(global_index)]; }

    /// Index of s within its dimension block (basis position in C_p), or -1.
    int local_index(const Simplex& s) const;
    const Simplex& simplex_at(int p, int local) const;

    /// Every facet has dimension n.
    bool is_pure(int n) const;

    std::vector<int> f_vector() const;
    long long euler_characteristic() const;

    bool operator==(const SimplicialComplex& o) const { return simplices_ == o.simplices_; }

private:
    std::string name_;
    int dim_ = -1;
    std::vector<Simplex> facets_;
    std::vector<Simplex> simplices_;      // canonical order, contiguous per dimension
    std::vector<int> dim_offset_;         // start index of each dimension block
    std::map<Simplex, int> index_;
};

/// Parse the facet-list text format: one facet per line, vertex ids separated
/// by whitespace, '#' starts a comment. Errors name the offending line.
SimplicialComplex parse_complex(const std::string& text, const std::string& name = "");

/// Parse the JSON alternative {"name": str, "facets": [[int,...],...]}.
SimplicialComplex parse_complex_json(const std::string& json_text);

std::string to_facet_list_text(const SimplicialComplex& x);
std::string to_json_text(const SimplicialComplex& x);

/// link(s) = { t : t ∩ s = ∅, t ∪ s ∈ X }.
SimplicialComplex link(const SimplicialComplex& x, const Simplex& s);

/// Disjoint union; vertex ids of y are shifted past those of x.
SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y);

} // namespace surgery
