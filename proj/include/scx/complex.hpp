#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scx/error.hpp"

namespace scx {

/// A vertex name: a non-empty token over [A-Za-z0-9_.-].
/// The total order is shortlex (length first, then bytes), so it does not
/// depend on insertion order anywhere in the library.
class VertexLabel {
public:
    explicit VertexLabel(std::string token) : token_(std::move(token)) {
        if (!valid_token(token_)) fail(Errc::BadLabel, "invalid vertex token '" + token_ + "'");
    }

    const std::string& token() const noexcept { return token_; }

    static bool valid_token(std::string_view t) {
        if (t.empty()) return false;
        for (char c : t) {
            bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                      (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
            if (!ok) return false;
        }
        return true;
    }

    friend bool operator==(const VertexLabel& a, const VertexLabel& b) { return a.token_ == b.token_; }

    friend std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
        if (a.token_.size() != b.token_.size())
            return a.token_.size() <=> b.token_.size();
        return a.token_.compare(b.token_) <=> 0;
    }

private:
    std::string token_;
};

/// An immutable finite vertex set. The empty face (dimension -1) is a valid value.
/// Vertices are kept sorted, so the default lexicographic comparison of the
/// underlying vectors is the canonical face order.
class Face {
public:
    Face() = default;

    explicit Face(std::vector<VertexLabel> verts) : verts_(std::move(verts)) {
        std::sort(verts_.begin(), verts_.end());
        verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    }

    static Face of(std::initializer_list<const char*> tokens) {
        std::vector<VertexLabel> vs;
        vs.reserve(tokens.size());
        for (const char* t : tokens) vs.emplace_back(std::string(t));
        return Face(std::move(vs));
    }

    int dim() const noexcept { return static_cast<int>(verts_.size()) - 1; }
    bool empty() const noexcept { return verts_.empty(); }
    std::size_t size() const noexcept { return verts_.size(); }
    const std::vector<VertexLabel>& vertices() const noexcept { return verts_; }

    bool contains(const VertexLabel& v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool subset_of(const Face& other) const {
        return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(), verts_.end());
    }

    Face union_with(const Face& other) const {
        std::vector<VertexLabel> out;
        out.reserve(verts_.size() + other.verts_.size());
        std::set_union(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    Face intersect(const Face& other) const {
        std::vector<VertexLabel> out;
        std::set_intersection(verts_.begin(), verts_.end(), other.verts_.begin(), other.verts_.end(),
                              std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    Face minus(const VertexLabel& v) const {
        std::vector<VertexLabel> out;
        out.reserve(verts_.size());
        for (const auto& u : verts_)
            if (!(u == v)) out.push_back(u);
        return from_sorted(std::move(out));
    }

    Face plus(const VertexLabel& v) const {
        if (contains(v)) return *this;
        std::vector<VertexLabel> out = verts_;
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
        return from_sorted(std::move(out));
    }

    std::string to_string() const {
        if (verts_.empty()) return "{}";
        std::string s;
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i) s += ' ';
            s += verts_[i].token();
        }
        return s;
    }

    friend bool operator==(const Face& a, const Face& b) { return a.verts_ == b.verts_; }
    friend std::strong_ordering operator<=>(const Face& a, const Face& b) { return a.verts_ <=> b.verts_; }

private:
    static Face from_sorted(std::vector<VertexLabel> sorted) {
        Face f;
        f.verts_ = std::move(sorted);
        return f;
    }

    std::vector<VertexLabel> verts_;
};

/// A finite abstract simplicial complex, stored as its facet set (maximal faces).
///
/// Two distinguished small values exist and are not equal:
///   - the void complex: no faces at all (not even the empty face);
///   - the empty complex {∅}: exactly one facet, the empty face (dimension -1).
///
/// Facets are kept in canonical order (lexicographic on sorted vertex lists);
/// equality, hashing keys and printed forms all use it. Values are immutable
/// after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // the void complex

    static SimplicialComplex void_complex() { return SimplicialComplex(); }

    static SimplicialComplex empty_complex() {
        SimplicialComplex c;
        c.facets_.push_back(Face());
        return c;
    }

    /// Builds the complex generated by the given faces: duplicates and faces
    /// contained in other faces are dropped. An empty list yields the void complex.
    static SimplicialComplex from_faces(std::vector<Face> faces) {
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        SimplicialComplex c;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < faces.size(); ++j) {
                if (i != j && faces[i].subset_of(faces[j]) && !(faces[i] == faces[j])) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) c.facets_.push_back(faces[i]);
        }
        return c;
    }

    static SimplicialComplex simplex(const Face& f) { return from_faces({f}); }

    bool is_void() const noexcept { return facets_.empty(); }

    /// Dimension of the complex. The void complex has no dimension (conceptually
    /// -infinity); callers must branch on is_void() before asking.
    int dim() const {
        if (is_void()) fail(Errc::VoidComplex, "the void complex has no dimension");
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, f.dim());
        return d;
    }

    const std::vector<Face>& facets() const& noexcept { return facets_; }
    std::vector<Face> facets() && { return std::move(facets_); }  // no dangling views of temporaries
    std::size_t facet_count() const noexcept { return facets_.size(); }

    /// Sorted distinct vertex labels appearing in some facet.
    std::vector<VertexLabel> vertices() const {
        std::vector<VertexLabel> vs;
        for (const auto& f : facets_)
            vs.insert(vs.end(), f.vertices().begin(), f.vertices().end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    bool has_vertex(const VertexLabel& v) const {
        for (const auto& f : facets_)
            if (f.contains(v)) return true;
        return false;
    }

    /// Face membership: f is a face iff it is a subset of some facet.
    /// The empty face belongs to every non-void complex.
    bool contains_face(const Face& f) const {
        for (const auto& g : facets_)
            if (f.subset_of(g)) return true;
        return false;
    }

    bool is_facet(const Face& f) const {
        return std::binary_search(facets_.begin(), facets_.end(), f);
    }

    /// Canonical one-line key, used for memo tables and hashing.
    std::string canonical_key() const {
        std::string s;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (i) s += '|';
            s += facets_[i].empty() ? std::string("~") : facets_[i].to_string();
        }
        return s;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ == b.facets_;
    }
    friend std::strong_ordering operator<=>(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ <=> b.facets_;
    }

private:
    std::vector<Face> facets_;
};

// ---------------------------------------------------------------------------
// Elementary operations
// ---------------------------------------------------------------------------

/// All faces of the complex, including the empty face for non-void input.
inline std::set<Face> all_faces(const SimplicialComplex& c) {
    std::set<Face> out;
    for (const Face& facet : c.facets()) {
        const auto& vs = facet.vertices();
        const std::size_t n = vs.size();
        // facets at desk scale are small, so subset enumeration is fine
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<VertexLabel> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) sub.push_back(vs[i]);
            out.insert(Face(std::move(sub)));
        }
    }
    return out;
}

/// The i-dimensional faces. For i = -1 returns {∅} iff the complex is non-void.
inline std::set<Face> faces_of_dim(const SimplicialComplex& c, int i) {
    if (i < -1) fail(Errc::BadParameter, "face dimension must be >= -1");
    std::set<Face> out;
    if (i == -1) {
        if (!c.is_void()) out.insert(Face());
        return out;
    }
    const std::size_t k = static_cast<std::size_t>(i) + 1;
    for (const Face& facet : c.facets()) {
        const auto& vs = facet.vertices();
        if (vs.size() < k) continue;
        // enumerate k-subsets of the facet's vertex list
        std::vector<std::size_t> idx(k);
        for (std::size_t j = 0; j < k; ++j) idx[j] = j;
        while (true) {
            std::vector<VertexLabel> sub;
            sub.reserve(k);
            for (std::size_t j : idx) sub.push_back(vs[j]);
            out.insert(Face(std::move(sub)));
            std::size_t j = k;
            while (j > 0 && idx[j - 1] == vs.size() - (k - j) - 1) --j;
            if (j == 0) break;
            ++idx[j - 1];
            for (std::size_t l = j; l < k; ++l) idx[l] = idx[l - 1] + 1;
        }
    }
    return out;
}

inline bool is_pure(const SimplicialComplex& c) {
    if (c.is_void()) fail(Errc::VoidComplex, "purity is undefined for the void complex");
    const int d = c.facets().front().dim();
    for (const auto& f : c.facets())
        if (f.dim() != d) return false;
    return true;
}

inline void require_pure(const SimplicialComplex& c, const char* what) {
    if (!is_pure(c)) fail(Errc::NotPure, std::string(what) + " requires a pure complex");
}

/// Faces of dimension one below the facets. Defined for pure complexes.
inline std::set<Face> ridges(const SimplicialComplex& c) {
    require_pure(c, "ridges");
    const int d = c.dim();
    if (d == -1) return {};  // {∅} has no faces of dimension -2
    return faces_of_dim(c, d - 1);
}

/// The boundary complex: generated by the ridges lying in exactly one facet.
/// Returns the void complex when there is no such ridge (spheres).
inline SimplicialComplex boundary(const SimplicialComplex& c) {
    require_pure(c, "boundary");
    if (c.dim() == -1) return SimplicialComplex::void_complex();
    std::vector<Face> bd;
    for (const Face& r : ridges(c)) {
        int count = 0;
        for (const Face& f : c.facets())
            if (r.subset_of(f)) ++count;
        if (count == 1) bd.push_back(r);
    }
    return SimplicialComplex::from_faces(std::move(bd));
}

/// Cone with a fresh apex: every facet F becomes F ∪ {apex}.
/// The cone over the void complex is the single vertex {apex}.
inline SimplicialComplex cone(const SimplicialComplex& c, const VertexLabel& apex) {
    if (c.has_vertex(apex)) fail(Errc::ApexCollision, "apex '" + apex.token() + "' is already a vertex");
    if (c.is_void()) return SimplicialComplex::from_faces({Face({apex})});
    std::vector<Face> out;
    out.reserve(c.facet_count());
    for (const Face& f : c.facets()) out.push_back(f.plus(apex));
    return SimplicialComplex::from_faces(std::move(out));
}

inline SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> fs = a.facets();
    fs.insert(fs.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::from_faces(std::move(fs));
}

/// Intersection as complexes: the maximal faces common to both.
/// Two non-void complexes always share the empty face, so the intersection of
/// vertex-disjoint non-void complexes is {∅}, not the void complex; this is what
/// makes the decomposition recursions bottom out at dimension -1.
inline SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex();
    std::vector<Face> fs;
    fs.reserve(a.facet_count() * b.facet_count());
    for (const Face& f : a.facets())
        for (const Face& g : b.facets()) fs.push_back(f.intersect(g));
    return SimplicialComplex::from_faces(std::move(fs));
}

/// Complex generated by a subset of the facets, given by indices into facets().
inline SimplicialComplex facet_subcomplex(const SimplicialComplex& c, std::span<const int> indices) {
    std::vector<Face> fs;
    fs.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= c.facet_count())
            fail(Errc::BadParameter, "facet index out of range");
        fs.push_back(c.facets()[static_cast<std::size_t>(i)]);
    }
    return SimplicialComplex::from_faces(std::move(fs));
}

/// Induced subcomplex on a vertex set W: all faces contained in W.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& c,
                                            const std::vector<VertexLabel>& w) {
    if (c.is_void()) return c;
    Face wset{std::vector<VertexLabel>(w)};
    std::vector<Face> fs;
    for (const Face& f : c.facets()) fs.push_back(f.intersect(wset));
    return SimplicialComplex::from_faces(std::move(fs));
}

}  // namespace scx
