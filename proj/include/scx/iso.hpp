#pragma once

#include <map>
#include <optional>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

/// Witness for are_isomorphic: a vertex bijection carrying facets onto facets.
struct IsoWitness {
    std::map<VertexLabel, VertexLabel> mapping;
};

namespace detail {

// Per-vertex signature: how many faces of each dimension contain the vertex.
// Isomorphisms preserve it, so it prunes the target candidates hard.
inline std::map<VertexLabel, std::vector<int>> vertex_profiles(const SimplicialComplex& c) {
    std::map<VertexLabel, std::vector<int>> prof;
    const int d = c.is_void() ? -1 : c.dim();
    for (const auto& v : c.vertices()) prof[v] = std::vector<int>(static_cast<std::size_t>(d + 1), 0);
    for (const Face& f : all_faces(c)) {
        if (f.empty()) continue;
        for (const auto& v : f.vertices()) prof[v][static_cast<std::size_t>(f.dim())] += 1;
    }
    return prof;
}

inline std::vector<int> face_count_vector(const SimplicialComplex& c) {
    std::vector<int> counts;
    if (c.is_void()) return counts;
    counts.assign(static_cast<std::size_t>(c.dim() + 2), 0);
    for (const Face& f : all_faces(c)) counts[static_cast<std::size_t>(f.dim() + 1)] += 1;
    return counts;
}

struct IsoSearch {
    const SimplicialComplex& a;
    const SimplicialComplex& b;
    std::vector<VertexLabel> averts, bverts;
    std::map<VertexLabel, std::vector<int>> aprof, bprof;
    std::map<VertexLabel, VertexLabel> assign;
    std::vector<bool> used;  // over bverts

    bool extend(std::size_t pos) {
        if (pos == averts.size()) return check_full();
        const VertexLabel& v = averts[pos];
        for (std::size_t j = 0; j < bverts.size(); ++j) {
            if (used[j]) continue;
            const VertexLabel& w = bverts[j];
            if (aprof[v] != bprof[w]) continue;
            assign.emplace(v, w);
            used[j] = true;
            if (consistent(pos) && extend(pos + 1)) return true;
            used[j] = false;
            assign.erase(v);
        }
        return false;
    }

    // Partial check: the image of every facet restricted to the mapped vertices
    // must still be a face of b, and fully mapped facets must be facets of b.
    bool consistent(std::size_t pos) const {
        for (const Face& f : a.facets()) {
            std::vector<VertexLabel> img;
            bool full = true;
            for (const auto& u : f.vertices()) {
                auto it = assign.find(u);
                if (it == assign.end()) {
                    full = false;
                } else {
                    img.push_back(it->second);
                }
            }
            Face imgf{std::move(img)};
            if (full) {
                if (!b.is_facet(imgf)) return false;
            } else if (!b.contains_face(imgf)) {
                return false;
            }
        }
        (void)pos;
        return true;
    }

    bool check_full() const {
        for (const Face& f : a.facets()) {
            std::vector<VertexLabel> img;
            img.reserve(f.size());
            for (const auto& u : f.vertices()) img.push_back(assign.at(u));
            if (!b.is_facet(Face(std::move(img)))) return false;
        }
        return true;
    }
};

}  // namespace detail

/// Backtracking isomorphism search with invariant pruning. Intended for desk
/// scale (around 20 vertices); returns the witness bijection when one exists.
inline std::optional<IsoWitness> find_isomorphism(const SimplicialComplex& a,
                                                  const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) {
        if (a.is_void() && b.is_void()) return IsoWitness{};
        return std::nullopt;
    }
    if (a.facet_count() != b.facet_count()) return std::nullopt;
    if (a.dim() != b.dim()) return std::nullopt;
    if (detail::face_count_vector(a) != detail::face_count_vector(b)) return std::nullopt;

    detail::IsoSearch s{a, b, a.vertices(), b.vertices(), detail::vertex_profiles(a),
                        detail::vertex_profiles(b), {}, {}};
    // profile multisets must agree
    {
        std::vector<std::vector<int>> pa, pb;
        for (const auto& [v, p] : s.aprof) pa.push_back(p);
        for (const auto& [v, p] : s.bprof) pb.push_back(p);
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        if (pa != pb) return std::nullopt;
    }
    // most-constrained vertices first: rare profiles have fewer candidates
    std::map<std::vector<int>, int> rarity;
    for (const auto& [v, p] : s.bprof) rarity[p] += 1;
    std::stable_sort(s.averts.begin(), s.averts.end(), [&](const auto& x, const auto& y) {
        return rarity[s.aprof[x]] < rarity[s.aprof[y]];
    });
    s.used.assign(s.bverts.size(), false);
    if (s.extend(0)) return IsoWitness{s.assign};
    return std::nullopt;
}

inline bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    return find_isomorphism(a, b).has_value();
}

}  // namespace scx
