#pragma once

#include <set>
#include <string>
#include <vector>

#include "scx/complex.hpp"
#include "scx/dyadic.hpp"

namespace scx {

/// Face numbers f_{-1} .. f_{d-1}; f_{-1} = 1 for every non-void complex.
struct FVector {
    std::vector<BigInt> entries;

    int dim() const noexcept { return static_cast<int>(entries.size()) - 2; }

    const BigInt& at_dim(int i) const { return entries[static_cast<std::size_t>(i + 1)]; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ", ";
            s += entries[i].str();
        }
        return s + ")";
    }

    friend bool operator==(const FVector& a, const FVector& b) = default;
};

/// h_0 .. h_d, the standard invertible linear transform of the f-vector.
struct HVector {
    std::vector<BigInt> entries;

    int d() const noexcept { return static_cast<int>(entries.size()) - 1; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ", ";
            s += entries[i].str();
        }
        return s + ")";
    }

    friend bool operator==(const HVector& a, const HVector& b) = default;
};

/// Binomial coefficient with exact integers. C(n, k) = 0 outside 0 <= k <= n.
inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: r is C(n, i+1) * (i+1)! / ... running product stays integral
    }
    return r;
}

inline FVector f_vector(const SimplicialComplex& c) {
    if (c.is_void()) fail(Errc::VoidComplex, "f-vector is undefined for the void complex");
    const int d = c.dim();
    FVector f;
    f.entries.assign(static_cast<std::size_t>(d + 2), 0);
    for (const Face& face : all_faces(c)) f.entries[static_cast<std::size_t>(face.dim() + 1)] += 1;
    return f;
}

/// h_i = sum_{k=0..i} (-1)^{i-k} C(d-k, d-i) f_{k-1}, for 0 <= i <= d, d = dim+1.
inline HVector h_vector(const SimplicialComplex& c) {
    require_pure(c, "h-vector");
    const FVector f = f_vector(c);
    const int d = f.dim() + 1;
    HVector h;
    h.entries.assign(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i) {
        BigInt acc = 0;
        for (int k = 0; k <= i; ++k) {
            BigInt term = binomial(d - k, d - i) * f.entries[static_cast<std::size_t>(k)];
            if ((i - k) % 2 != 0) term = -term;
            acc += term;
        }
        h.entries[static_cast<std::size_t>(i)] = acc;
    }
    return h;
}

/// Inverse transform: f_{i-1} = sum_{k=0..i} C(d-k, d-i) h_k. Used as the
/// round-trip check against h_vector.
inline FVector f_from_h(const HVector& h) {
    const int d = h.d();
    FVector f;
    f.entries.assign(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i) {
        BigInt acc = 0;
        for (int k = 0; k <= i; ++k)
            acc += binomial(d - k, d - i) * h.entries[static_cast<std::size_t>(k)];
        f.entries[static_cast<std::size_t>(i)] = acc;
    }
    return f;
}

/// Dehn-Sommerville palindrome check: h_i = h_{d-i} for 0 <= i < d/2.
inline bool dehn_sommerville_holds(const SimplicialComplex& c) {
    const HVector h = h_vector(c);
    const int d = h.d();
    for (int i = 0; 2 * i < d; ++i)
        if (h.entries[static_cast<std::size_t>(i)] != h.entries[static_cast<std::size_t>(d - i)])
            return false;
    return true;
}

/// The Charney-Davis quantity κ(Δ) = sum_i (-1/2)^i f_{i-1}(Δ), the alternating
/// dyadic sum over all face dimensions present. Exact; never floating point.
inline Dyadic kappa(const SimplicialComplex& c) {
    const FVector f = f_vector(c);
    Dyadic acc;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        // term i is (-1/2)^i * f_{i-1}
        Dyadic term(i % 2 == 0 ? f.entries[i] : -f.entries[i], static_cast<unsigned>(i));
        acc = acc + term;
    }
    return acc;
}

/// κ of a complex that may be void (∂Δ of a sphere). The void complex counts
/// as 0; used by the boundary-halving identity 2κ(Δ) = κ(∂Δ).
inline Dyadic kappa_or_zero(const SimplicialComplex& c) {
    return c.is_void() ? Dyadic::zero() : kappa(c);
}

/// Exact check of sum_{i=0..d} (-1)^i h_i = 2^d * sum_{i=0..d} (-1/2)^i f_{i-1}.
inline bool h_alternating_identity_check(const SimplicialComplex& c) {
    const HVector h = h_vector(c);
    const int d = h.d();
    BigInt lhs = 0;
    for (int i = 0; i <= d; ++i) {
        if (i % 2 == 0)
            lhs += h.entries[static_cast<std::size_t>(i)];
        else
            lhs -= h.entries[static_cast<std::size_t>(i)];
    }
    const Dyadic rhs = kappa(c).times_pow2(static_cast<unsigned>(d));
    return Dyadic(lhs, 0) == rhs;
}

/// Minimal non-faces: inclusion-minimal vertex sets that are not faces while all
/// their proper subsets are. Enumerated level by level from the faces one
/// dimension below; capped by vertex count to keep the search at desk scale.
inline std::set<Face> minimal_non_faces(const SimplicialComplex& c, std::size_t vertex_cap = 25) {
    if (c.is_void()) fail(Errc::VoidComplex, "minimal non-faces are undefined for the void complex");
    const auto verts = c.vertices();
    if (verts.size() > vertex_cap)
        fail(Errc::Overflow, "complex has " + std::to_string(verts.size()) +
                                 " vertices; minimal-non-face cap is " + std::to_string(vertex_cap));
    const std::set<Face> faces = all_faces(c);
    const int d = c.dim();
    std::set<Face> out;
    // A minimal non-face of size k has all its (k-1)-subsets as faces, so k <= dim+2.
    for (int k = 2; k <= d + 2; ++k) {
        for (const Face& f : faces) {
            if (f.dim() != k - 2) continue;
            for (const VertexLabel& v : verts) {
                if (f.contains(v)) continue;
                if (!f.vertices().empty() && !(f.vertices().back() < v)) continue;  // generate once
                Face cand = f.plus(v);
                if (faces.count(cand)) continue;
                bool all_subfaces = true;
                for (const VertexLabel& u : cand.vertices()) {
                    if (!faces.count(cand.minus(u))) {
                        all_subfaces = false;
                        break;
                    }
                }
                if (all_subfaces) out.insert(std::move(cand));
            }
        }
    }
    return out;
}

/// Flag complex test: every minimal non-face has exactly two vertices.
inline bool is_flag(const SimplicialComplex& c, std::size_t vertex_cap = 25) {
    for (const Face& f : minimal_non_faces(c, vertex_cap))
        if (f.size() != 2) return false;
    return true;
}

/// Sign rule of the Charney-Davis conjecture for a complex of odd dimension
/// 2d-1: κ >= 0 when d is even, κ <= 0 when d is odd. Zero passes both.
inline bool charney_davis_sign_ok(const SimplicialComplex& c) {
    if (c.is_void()) fail(Errc::VoidComplex, "sign rule is undefined for the void complex");
    const int dim = c.dim();
    if (dim % 2 == 0) fail(Errc::EvenDimension, "sign rule applies to odd-dimensional complexes");
    const int d = (dim + 1) / 2;
    const int s = kappa(c).sign();
    return d % 2 == 0 ? s >= 0 : s <= 0;
}

}  // namespace scx
