#include "surgery/simplex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace surgery {

Simplex::Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty())
        throw domain_error("empty simplex");
    std::sort(verts_.begin(), verts_.end());
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (verts_[i] < 0)
            throw domain_error("negative vertex id " + std::to_string(verts_[i]));
        if (i > 0 && verts_[i] == verts_[i - 1])
            throw domain_error("repeated vertex " + std::to_string(verts_[i]));
    }
}

Simplex Simplex::face_omitting(int i) const {
    std::vector<int> v;
    v.reserve(verts_.size() - 1);
    for (int j = 0; j < static_cast<int>(verts_.size()); ++j)
        if (j != i)
            v.push_back(verts_[static_cast<size_t>(j)]);
    return Simplex(std::move(v));
}

bool Simplex::has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
    return std::includes(verts_.begin(), verts_.end(),
                         other.verts_.begin(), other.verts_.end());
}

std::vector<Simplex> Simplex::proper_faces() const {
    std::vector<Simplex> out;
    const int n = vertex_count();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> v;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j))
                v.push_back(verts_[static_cast<size_t>(j)]);
        out.emplace_back(std::move(v));
    }
    return out;
}

int Simplex::position_of(int v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
        return -1;
    return static_cast<int>(it - verts_.begin());
}

int Simplex::incidence_sign(const Simplex& coface, const Simplex& face) {
    if (coface.dim() != face.dim() + 1 || !coface.contains(face))
        throw domain_error("incidence_sign: not a codimension-1 face");
    for (int i = 0; i < coface.vertex_count(); ++i)
        if (!face.has_vertex(coface.vertex(i)))
            return (i % 2 == 0) ? 1 : -1;
    throw structural_error("incidence_sign: no omitted vertex found");
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (i)
            os << ' ';
        os << verts_[i];
    }
    return os.str();
}

bool Simplex::operator<(const Simplex& o) const {
    if (verts_.size() != o.verts_.size())
        return verts_.size() < o.verts_.size();
    return verts_ < o.verts_;
}

SimplicialComplex::SimplicialComplex(std::string name, std::vector<Simplex> facets)
    : name_(std::move(name)) {
    std::set<Simplex> closed;
    for (const auto& f : facets) {
        closed.insert(f);
        for (auto& face : f.proper_faces())
            closed.insert(face);
    }
    simplices_.assign(closed.begin(), closed.end());  // set order == canonical order
    for (int i = 0; i < static_cast<int>(simplices_.size()); ++i) {
        index_[simplices_[static_cast<size_t>(i)]] = i;
        dim_ = std::max(dim_, simplices_[static_cast<size_t>(i)].dim());
    }
    dim_offset_.assign(static_cast<size_t>(dim_ + 2), 0);
    for (const auto& s : simplices_)
        ++dim_offset_[static_cast<size_t>(s.dim()) + 1];
    for (size_t p = 1; p < dim_offset_.size(); ++p)
        dim_offset_[p] += dim_offset_[p - 1];
    // facets = simplices with no proper coface
    for (const auto& s : simplices_) {
        bool maximal = true;
        for (const auto& t : simplices_) {
            if (t.dim() == s.dim() + 1 && t.contains(s)) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            facets_.push_back(s);
    }
}

int SimplicialComplex::count_of_dim(int p) const {
    if (p < 0 || p > dim_)
        return 0;
    return dim_offset_[static_cast<size_t>(p) + 1] - dim_offset_[static_cast<size_t>(p)];
}

int SimplicialComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

int SimplicialComplex::local_index(const Simplex& s) const {
    int g = index_of(s);
    if (g < 0)
        return -1;
    return g - dim_offset_[static_cast<size_t>(s.dim())];
}

const Simplex& SimplicialComplex::simplex_at(int p, int local) const {
    return simplices_[static_cast<size_t>(dim_offset_[static_cast<size_t>(p)] + local)];
}

bool SimplicialComplex::is_pure(int n) const {
    for (const auto& f : facets_)
        if (f.dim() != n)
            return false;
    return true;
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> f(static_cast<size_t>(dim_ + 1), 0);
    for (int p = 0; p <= dim_; ++p)
        f[static_cast<size_t>(p)] = count_of_dim(p);
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int p = 0; p <= dim_; ++p)
        chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(count_of_dim(p));
    return chi;
}

SimplicialComplex parse_complex(const std::string& text, const std::string& name) {
    std::vector<Simplex> facets;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<int> verts;
        std::string tok;
        while (ls >> tok) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw parse_error("malformed vertex id '" + tok + "'", lineno);
            }
            if (used != tok.size())
                throw parse_error("malformed vertex id '" + tok + "'", lineno);
            if (v < 0)
                throw parse_error("negative vertex id " + tok, lineno);
            verts.push_back(v);
        }
        if (verts.empty())
            continue;  // blank or comment-only line
        std::vector<int> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw parse_error("repeated vertex " + std::to_string(sorted[i]) + " in facet", lineno);
        facets.emplace_back(std::move(sorted));
    }
    return SimplicialComplex(name, std::move(facets));
}

SimplicialComplex parse_complex_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw parse_error("expected object with a \"facets\" array", 0);
    std::string name = j.value("name", std::string());
    std::vector<Simplex> facets;
    int facet_no = 0;
    for (const auto& f : j["facets"]) {
        ++facet_no;
        if (!f.is_array() || f.empty())
            throw parse_error("facet #" + std::to_string(facet_no) + " is not a non-empty array", 0);
        std::vector<int> verts;
        for (const auto& v : f) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw parse_error("facet #" + std::to_string(facet_no) + " has a malformed vertex id", 0);
            verts.push_back(v.get<int>());
        }
        std::vector<int> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw parse_error("facet #" + std::to_string(facet_no) + " repeats vertex " +
                                      std::to_string(sorted[i]),
                                  0);
        facets.emplace_back(std::move(sorted));
    }
    return SimplicialComplex(name, std::move(facets));
}

std::string to_facet_list_text(const SimplicialComplex& x) {
    std::ostringstream os;
    if (!x.name().empty())
        os << "# " << x.name() << "\n";
    for (const auto& f : x.facets())
        os << f.to_string() << "\n";
    return os.str();
}

std::string to_json_text(const SimplicialComplex& x) {
    nlohmann::ordered_json j;
    j["name"] = x.name();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : x.facets())
        arr.push_back(f.vertices());
    j["facets"] = arr;
    return j.dump();
}

SimplicialComplex link(const SimplicialComplex& x, const Simplex& s) {
    if (!x.contains(s))
        throw domain_error("link: simplex " + s.to_string() + " not in complex");
    std::vector<Simplex> members;
    for (const auto& t : x.simplices()) {
        bool disjoint = true;
        for (int v : t.vertices())
            if (s.has_vertex(v)) {
                disjoint = false;
                break;
            }
        if (!disjoint)
            continue;
        std::vector<int> joined = t.vertices();
        joined.insert(joined.end(), s.vertices().begin(), s.vertices().end());
        std::sort(joined.begin(), joined.end());
        if (x.contains(Simplex(joined)))
            members.push_back(t);
    }
    return SimplicialComplex("link(" + s.to_string() + ") in " + x.name(), std::move(members));
}

SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y) {
    int shift = 0;
    for (const auto& s : x.simplices())
        shift = std::max(shift, s.max_vertex() + 1);
    std::vector<Simplex> facets = x.facets();
    for (const auto& f : y.facets()) {
        std::vector<int> v = f.vertices();
        for (int& w : v)
            w += shift;
        facets.emplace_back(std::move(v));
    }
    return SimplicialComplex(x.name() + " + " + y.name(), std::move(facets));
}

} // namespace surgery
