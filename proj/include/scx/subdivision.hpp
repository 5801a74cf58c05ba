#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

/// Deterministic apex label for the subdivision of a face: "p." followed by the
/// face's sorted vertex tokens joined by ".". The same face always yields the
/// same apex, so subdivision results are reproducible and subcomplex
/// restrictions can be matched by name. Input complexes must not use labels
/// starting with "p."; every subdivision step additionally checks freshness.
inline VertexLabel apex_label(const Face& f) {
    if (f.empty()) fail(Errc::EmptyFace, "no apex for the empty face");
    std::string t = "p";
    for (const auto& v : f.vertices()) {
        t += '.';
        t += v.token();
    }
    return VertexLabel(std::move(t));
}

/// Ordered list of faces of the ORIGINAL complex to subdivide at, one by one.
struct SubdivisionSchedule {
    std::vector<Face> faces;
};

enum class ScheduleViolationKind {
    MissingOddFace,
    OrderViolation,
    DuplicateFace,
    FaceAbsent,
    EmptyFace,
};

struct ScheduleViolation {
    ScheduleViolationKind kind;
    Face face;
    std::string message;
};

inline const char* schedule_violation_name(ScheduleViolationKind k) {
    switch (k) {
        case ScheduleViolationKind::MissingOddFace: return "MissingOddFace";
        case ScheduleViolationKind::OrderViolation: return "OrderViolation";
        case ScheduleViolationKind::DuplicateFace: return "DuplicateFace";
        case ScheduleViolationKind::FaceAbsent: return "FaceAbsent";
        case ScheduleViolationKind::EmptyFace: return "EmptyFace";
    }
    return "Unknown";
}

/// Checks the two schedule conditions against the complex: every non-empty face
/// of odd dimension appears, and dimensions never increase along the list
/// (if dim F_i > dim F_j then i < j). Also rejects duplicates, empty faces and
/// faces not in the complex. Returns the first violation found, or nothing.
inline std::optional<ScheduleViolation> validate_schedule(const SimplicialComplex& c,
                                                          const SubdivisionSchedule& s) {
    std::set<Face> seen;
    int prev_dim = -1;
    for (std::size_t i = 0; i < s.faces.size(); ++i) {
        const Face& f = s.faces[i];
        if (f.empty())
            return ScheduleViolation{ScheduleViolationKind::EmptyFace, f,
                                     "schedule entry " + std::to_string(i) + " is the empty face"};
        if (!c.contains_face(f))
            return ScheduleViolation{ScheduleViolationKind::FaceAbsent, f,
                                     "schedule entry '" + f.to_string() + "' is not a face of the complex"};
        if (seen.count(f))
            return ScheduleViolation{ScheduleViolationKind::DuplicateFace, f,
                                     "face '" + f.to_string() + "' appears twice"};
        if (i > 0 && f.dim() > prev_dim)
            return ScheduleViolation{ScheduleViolationKind::OrderViolation, f,
                                     "face '" + f.to_string() + "' of dimension " +
                                         std::to_string(f.dim()) + " listed after dimension " +
                                         std::to_string(prev_dim)};
        seen.insert(f);
        prev_dim = f.dim();
    }
    if (!c.is_void()) {
        for (int i = 1; i <= c.dim(); i += 2) {
            for (const Face& f : faces_of_dim(c, i)) {
                if (!seen.count(f))
                    return ScheduleViolation{ScheduleViolationKind::MissingOddFace, f,
                                             "odd-dimensional face '" + f.to_string() +
                                                 "' is missing from the schedule"};
            }
        }
    }
    return std::nullopt;
}

/// Stellar subdivision at a non-empty face F with the given fresh apex: every
/// facet G containing F is replaced by the facets (G \ {v}) ∪ {apex}, v ∈ F.
/// A subdivision at a vertex leaves the complex unchanged.
inline SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const Face& f,
                                           const VertexLabel& apex) {
    if (f.empty()) fail(Errc::EmptyFace, "cannot subdivide at the empty face");
    if (!c.contains_face(f)) fail(Errc::FaceAbsent, "'" + f.to_string() + "' is not a face");
    if (f.dim() == 0) return c;
    if (c.has_vertex(apex)) fail(Errc::ApexCollision, "apex '" + apex.token() + "' is already a vertex");
    std::vector<Face> out;
    out.reserve(c.facet_count() + f.size());
    for (const Face& g : c.facets()) {
        if (f.subset_of(g)) {
            for (const VertexLabel& v : f.vertices()) out.push_back(g.minus(v).plus(apex));
        } else {
            out.push_back(g);
        }
    }
    return SimplicialComplex::from_faces(std::move(out));
}

inline SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const Face& f) {
    if (f.empty()) fail(Errc::EmptyFace, "cannot subdivide at the empty face");
    if (f.dim() == 0) {
        if (!c.contains_face(f)) fail(Errc::FaceAbsent, "'" + f.to_string() + "' is not a face");
        return c;
    }
    return stellar_subdivide(c, f, apex_label(f));
}

/// Left fold of stellar_subdivide over a validated schedule. Faces listed later
/// never contain faces listed earlier (dimensions do not increase and repeats
/// are rejected), so each F_i is still intact when its turn comes; a missing
/// face mid-fold is a bug, not an input error.
inline SimplicialComplex odd_iterated_subdivide(const SimplicialComplex& c,
                                                const SubdivisionSchedule& s) {
    if (auto v = validate_schedule(c, s))
        fail(Errc::BadParameter, std::string("invalid schedule: ") + v->message);
    for (const VertexLabel& v : c.vertices())
        if (v.token().rfind("p.", 0) == 0)
            fail(Errc::ApexCollision, "input label '" + v.token() + "' uses the reserved apex prefix 'p.'");
    {
        std::set<VertexLabel> apexes;
        for (const Face& f : s.faces)
            if (f.dim() >= 1 && !apexes.insert(apex_label(f)).second)
                fail(Errc::BadLabel, "distinct schedule faces share apex label '" +
                                         apex_label(f).token() + "'; rename vertices to disambiguate");
    }
    SimplicialComplex cur = c;
    for (const Face& f : s.faces) {
        try {
            cur = stellar_subdivide(cur, f);
        } catch (const Error& e) {
            fail(Errc::InvariantBroken,
                 "schedule face '" + f.to_string() + "' failed mid-fold: " + e.what());
        }
    }
    return cur;
}

/// The finest schedule: all faces of dimension >= 1 in non-increasing dimension
/// order (ties in canonical face order). Folding it yields the barycentric
/// subdivision.
inline SubdivisionSchedule barycentric_schedule(const SimplicialComplex& c) {
    require_pure(c, "barycentric_schedule");
    if (c.dim() < 1) fail(Errc::BadParameter, "barycentric schedule needs dimension >= 1");
    SubdivisionSchedule s;
    for (int i = c.dim(); i >= 1; --i)
        for (const Face& f : faces_of_dim(c, i)) s.faces.push_back(f);
    return s;
}

inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
    return odd_iterated_subdivide(c, barycentric_schedule(c));
}

}  // namespace scx
