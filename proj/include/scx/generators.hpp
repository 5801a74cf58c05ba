#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

/// Deterministic 64-bit linear congruential generator, fixed across platforms:
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// Bounded draws use the high 32 bits: below(n) = (next() >> 32) % n.
/// Identical seeds must reproduce identical corpora everywhere, so nothing here
/// may depend on <random> or on the standard library's distributions.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    std::uint32_t below(std::uint32_t n) {
        if (n == 0) fail(Errc::BadParameter, "Lcg::below(0)");
        return static_cast<std::uint32_t>((next() >> 32) % n);
    }

private:
    std::uint64_t state_;
};

/// Description of a corpus complex. All kinds are deterministic given their
/// parameters (including the seed for the stacked families).
struct GeneratorSpec {
    enum class Kind {
        Simplex,
        SimplexBoundary,
        CrossPolytopeBoundary,
        StackedBall,
        StackedSphere,
        Suspension,
        TwoTriangles,
    };

    Kind kind = Kind::Simplex;
    int n = 0;                // vertex count for Simplex / SimplexBoundary
    int dim = 0;              // dimension for CrossPolytopeBoundary / Stacked*
    int steps = 0;            // growth steps for Stacked*
    std::uint64_t seed = 0;   // rng seed for Stacked*
    std::shared_ptr<GeneratorSpec> inner;  // Suspension payload

    static GeneratorSpec simplex(int n) { return {Kind::Simplex, n, 0, 0, 0, nullptr}; }
    static GeneratorSpec simplex_boundary(int n) { return {Kind::SimplexBoundary, n, 0, 0, 0, nullptr}; }
    static GeneratorSpec cross_polytope_boundary(int d) {
        return {Kind::CrossPolytopeBoundary, 0, d, 0, 0, nullptr};
    }
    static GeneratorSpec stacked_ball(int d, int steps, std::uint64_t seed) {
        return {Kind::StackedBall, 0, d, steps, seed, nullptr};
    }
    static GeneratorSpec stacked_sphere(int d, int steps, std::uint64_t seed) {
        return {Kind::StackedSphere, 0, d, steps, seed, nullptr};
    }
    static GeneratorSpec suspension(GeneratorSpec inner) {
        return {Kind::Suspension, 0, 0, 0, 0, std::make_shared<GeneratorSpec>(std::move(inner))};
    }
    static GeneratorSpec two_triangles() {
        return {Kind::TwoTriangles, 0, 0, 0, 0, nullptr};
    }

    std::string describe() const {
        switch (kind) {
            case Kind::Simplex: return "Simplex(" + std::to_string(n) + ")";
            case Kind::SimplexBoundary: return "SimplexBoundary(" + std::to_string(n) + ")";
            case Kind::CrossPolytopeBoundary:
                return "CrossPolytopeBoundary(" + std::to_string(dim) + ")";
            case Kind::StackedBall:
                return "StackedBall(" + std::to_string(dim) + ", " + std::to_string(steps) + ", " +
                       std::to_string(seed) + ")";
            case Kind::StackedSphere:
                return "StackedSphere(" + std::to_string(dim) + ", " + std::to_string(steps) +
                       ", " + std::to_string(seed) + ")";
            case Kind::Suspension: return "Suspension(" + (inner ? inner->describe() : "?") + ")";
            case Kind::TwoTriangles: return "TwoTriangles";
        }
        return "?";
    }
};

namespace detail {

inline std::vector<VertexLabel> letter_labels(int n) {
    if (n < 0 || n > 26) fail(Errc::BadParameter, "letter labels support 0..26 vertices");
    std::vector<VertexLabel> vs;
    vs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vs.emplace_back(std::string(1, static_cast<char>('a' + i)));
    return vs;
}

// Grows a stacked ball by repeatedly coning a random boundary ridge, and keeps a
// shelling order for the boundary sphere in sync. Coning ridge R with a fresh
// vertex u turns the boundary sphere's facet R into the facets (R \ {x}) ∪ {u};
// in the maintained order, R is replaced by those children, first the ones whose
// dropped ridge R \ {x} is already covered by earlier facets, then the rest.
struct StackedBuild {
    SimplicialComplex ball;
    std::vector<Face> ball_order;    // shelling order of the ball (its build order)
    std::vector<Face> sphere_order;  // shelling order of the boundary sphere
};

inline StackedBuild build_stacked(int ball_dim, int steps, std::uint64_t seed) {
    if (ball_dim < 1) fail(Errc::BadParameter, "stacked ball dimension must be >= 1");
    if (steps < 0) fail(Errc::BadParameter, "steps must be >= 0");
    StackedBuild b;
    const Face base{letter_labels(ball_dim + 1)};
    b.ball = SimplicialComplex::simplex(base);
    b.ball_order = {base};
    for (const Face& r : ridges(b.ball)) b.sphere_order.push_back(r);

    Lcg rng(seed);
    for (int step = 1; step <= steps; ++step) {
        const SimplicialComplex bd = boundary(b.ball);
        const auto& bd_facets = bd.facets();  // canonical order
        const Face r = bd_facets[rng.below(static_cast<std::uint32_t>(bd_facets.size()))];
        const VertexLabel u("u" + std::to_string(step));
        const Face new_facet = r.plus(u);

        std::vector<Face> fs = b.ball.facets();
        fs.push_back(new_facet);
        b.ball = SimplicialComplex::from_faces(std::move(fs));
        b.ball_order.push_back(new_facet);

        // replace r in the sphere order by its children
        std::size_t pos = 0;
        while (pos < b.sphere_order.size() && !(b.sphere_order[pos] == r)) ++pos;
        if (pos == b.sphere_order.size())
            fail(Errc::InvariantBroken, "stacked boundary ridge not in the tracked sphere order");
        std::vector<Face> covered, fresh;
        for (const VertexLabel& x : r.vertices()) {
            const Face dropped = r.minus(x);
            bool earlier = false;
            for (std::size_t i = 0; i < pos && !earlier; ++i)
                if (dropped.subset_of(b.sphere_order[i])) earlier = true;
            (earlier ? covered : fresh).push_back(dropped.plus(u));
        }
        std::sort(covered.begin(), covered.end());
        std::sort(fresh.begin(), fresh.end());
        std::vector<Face> next;
        next.reserve(b.sphere_order.size() + r.size() - 1);
        next.insert(next.end(), b.sphere_order.begin(), b.sphere_order.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), covered.begin(), covered.end());
        next.insert(next.end(), fresh.begin(), fresh.end());
        next.insert(next.end(), b.sphere_order.begin() + static_cast<std::ptrdiff_t>(pos) + 1, b.sphere_order.end());
        b.sphere_order = std::move(next);
    }
    return b;
}

inline SimplicialComplex cross_polytope_boundary(int d) {
    if (d < 1 || d > 20) fail(Errc::BadParameter, "cross-polytope dimension must be in 1..20");
    std::vector<Face> fs;
    fs.reserve(1u << d);
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
        std::vector<VertexLabel> vs;
        vs.reserve(static_cast<std::size_t>(d));
        for (int axis = 1; axis <= d; ++axis) {
            const bool minus = (mask >> (d - axis)) & 1ul;
            vs.emplace_back((minus ? "m" : "p") + std::to_string(axis));
        }
        fs.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_faces(std::move(fs));
}

// lex order on sign vectors with plus before minus; see shelling_order_of
inline std::vector<Face> cross_polytope_shelling(int d) {
    std::vector<Face> out;
    out.reserve(1u << d);
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
        std::vector<VertexLabel> vs;
        for (int axis = 1; axis <= d; ++axis) {
            const bool minus = (mask >> (d - axis)) & 1ul;
            vs.emplace_back((minus ? "m" : "p") + std::to_string(axis));
        }
        out.emplace_back(std::move(vs));
    }
    return out;
}

}  // namespace detail

/// Materializes the complex described by a spec. Deterministic for fixed
/// parameters, including the seed.
inline SimplicialComplex generate(const GeneratorSpec& spec) {
    using Kind = GeneratorSpec::Kind;
    switch (spec.kind) {
        case Kind::Simplex: {
            if (spec.n < 0) fail(Errc::BadParameter, "Simplex needs n >= 0");
            return SimplicialComplex::simplex(Face{detail::letter_labels(spec.n)});
        }
        case Kind::SimplexBoundary: {
            if (spec.n < 1) fail(Errc::BadParameter, "SimplexBoundary needs n >= 1");
            return boundary(SimplicialComplex::simplex(Face{detail::letter_labels(spec.n)}));
        }
        case Kind::CrossPolytopeBoundary:
            return detail::cross_polytope_boundary(spec.dim);
        case Kind::StackedBall:
            return detail::build_stacked(spec.dim, spec.steps, spec.seed).ball;
        case Kind::StackedSphere:
            return boundary(detail::build_stacked(spec.dim + 1, spec.steps, spec.seed).ball);
        case Kind::Suspension: {
            if (!spec.inner) fail(Errc::BadParameter, "Suspension needs an inner spec");
            const SimplicialComplex base = generate(*spec.inner);
            if (base.is_void()) fail(Errc::BadParameter, "cannot suspend the void complex");
            const VertexLabel north("sN"), south("sS");
            return union_of(cone(base, north), cone(base, south));
        }
        case Kind::TwoTriangles:
            return SimplicialComplex::from_faces({Face::of({"a", "b", "c"}), Face::of({"b", "c", "d"})});
    }
    fail(Errc::BadParameter, "unknown generator kind");
}

/// A facet order that replays as a shellable certificate chain. Every kind has
/// a constructive one:
///   - simplexes: the single facet;
///   - simplex boundaries: any order, canonical chosen;
///   - cross-polytope boundaries: sign vectors in lex order with + before -;
///     a facet's intersection with its lex predecessors is the union of the
///     ridges obtained by dropping a minus coordinate;
///   - stacked balls: the build order (each cone step adds one facet on a ridge);
///   - stacked spheres: the tracked order maintained across stacking steps;
///   - suspensions: north cone facets in inner order, then south.
inline std::vector<Face> shelling_order_of(const GeneratorSpec& spec) {
    using Kind = GeneratorSpec::Kind;
    switch (spec.kind) {
        case Kind::Simplex:
            return {Face{detail::letter_labels(spec.n)}};
        case Kind::SimplexBoundary: {
            const auto c = generate(spec);
            return c.facets();
        }
        case Kind::CrossPolytopeBoundary:
            return detail::cross_polytope_shelling(spec.dim);
        case Kind::StackedBall:
            return detail::build_stacked(spec.dim, spec.steps, spec.seed).ball_order;
        case Kind::StackedSphere:
            return detail::build_stacked(spec.dim + 1, spec.steps, spec.seed).sphere_order;
        case Kind::Suspension: {
            if (!spec.inner) fail(Errc::BadParameter, "Suspension needs an inner spec");
            const auto inner_order = shelling_order_of(*spec.inner);
            const VertexLabel north("sN"), south("sS");
            std::vector<Face> out;
            out.reserve(inner_order.size() * 2);
            for (const Face& f : inner_order) out.push_back(f.plus(north));
            for (const Face& f : inner_order) out.push_back(f.plus(south));
            return out;
        }
        case Kind::TwoTriangles:
            return {Face::of({"a", "b", "c"}), Face::of({"b", "c", "d"})};
    }
    fail(Errc::BadParameter, "unknown generator kind");
}

}  // namespace scx
