#pragma once

#include <cctype>
#include <istream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

enum class CertKind { Shellable, Constructible, Sesquiconstructible };

inline const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::Shellable: return "shellable";
        case CertKind::Constructible: return "constructible";
        case CertKind::Sesquiconstructible: return "sesquiconstructible";
    }
    return "?";
}

inline std::optional<CertKind> cert_kind_from_name(const std::string& s) {
    if (s == "shellable") return CertKind::Shellable;
    if (s == "constructible") return CertKind::Constructible;
    if (s == "sesquiconstructible") return CertKind::Sesquiconstructible;
    return std::nullopt;
}

/// A recursive decomposition witness. A node is either a simplex leaf or a
/// split of the node's complex into U and V along complementary facet index
/// sets (indices into the canonical facet order of the complex at that node).
/// Child certificates cover U, V, U∩V and optionally ∂(U∩V); which children
/// are required depends on the property being certified.
struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

struct Certificate {
    bool simplex = false;
    std::vector<int> u_facets;
    std::vector<int> v_facets;
    CertPtr u_cert;
    CertPtr v_cert;
    CertPtr intersection_cert;
    CertPtr boundary_cert;  // null unless ∂(U∩V) is non-void and certified

    static CertPtr make_simplex() {
        auto c = std::make_shared<Certificate>();
        c->simplex = true;
        return c;
    }

    static CertPtr make_split(std::vector<int> u, std::vector<int> v, CertPtr uc, CertPtr vc,
                              CertPtr ic, CertPtr bc = nullptr) {
        auto c = std::make_shared<Certificate>();
        c->u_facets = std::move(u);
        c->v_facets = std::move(v);
        c->u_cert = std::move(uc);
        c->v_cert = std::move(vc);
        c->intersection_cert = std::move(ic);
        c->boundary_cert = std::move(bc);
        return c;
    }
};

struct CertViolation {
    std::string path;     // e.g. "root.u.i": which node failed
    std::string clause;   // e.g. "PartitionBroken", "IntersectionDim"
    std::string message;
};

namespace detail {

// Clause-by-clause replay of the decomposition definitions. Deliberately naive:
// it recomputes U, V, U∩V and ∂(U∩V) from scratch at every node and shares no
// code with the searchers, so a certificate that passes is standalone evidence.
inline std::optional<CertViolation> verify_node(const SimplicialComplex& c, CertKind kind,
                                                const CertPtr& cert, const std::string& path) {
    auto violation = [&](const char* clause, std::string msg) {
        return CertViolation{path, clause, std::move(msg)};
    };
    if (!cert) return violation("MissingNode", "no certificate at this node");
    if (c.is_void()) return violation("VoidComplex", "the void complex has no decomposition");
    if (!is_pure(c)) return violation("NotPure", "complex at this node is not pure");

    if (cert->simplex) {
        if (c.facet_count() != 1)
            return violation("NotSimplex", "simplex leaf on a complex with " +
                                               std::to_string(c.facet_count()) + " facets");
        return std::nullopt;
    }

    const int n = static_cast<int>(c.facet_count());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i : cert->u_facets) {
        if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
            return violation("PartitionBroken", "bad or repeated facet index in U");
        seen[static_cast<std::size_t>(i)] = 1;
    }
    for (int i : cert->v_facets) {
        if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
            return violation("PartitionBroken", "bad or repeated facet index in V");
        seen[static_cast<std::size_t>(i)] = 1;
    }
    if (cert->u_facets.empty() || cert->v_facets.empty())
        return violation("PartitionBroken", "U and V must both be non-empty");
    for (char s : seen)
        if (!s) return violation("PartitionBroken", "U and V do not cover the facet set");

    if (kind == CertKind::Shellable && cert->v_facets.size() != 1)
        return violation("VNotSimplex", "shellable split needs |V| = 1, got " +
                                            std::to_string(cert->v_facets.size()));

    const int d = c.dim() + 1;
    const SimplicialComplex u = facet_subcomplex(c, cert->u_facets);
    const SimplicialComplex v = facet_subcomplex(c, cert->v_facets);
    // U and V are facet subcomplexes of a pure complex, so dim d-1 holds by
    // construction; the recursion re-checks purity on entry.
    const SimplicialComplex w = intersection_of(u, v);
    if (w.is_void() || w.dim() != d - 2)
        return violation("IntersectionDim",
                         "U∩V must have dimension " + std::to_string(d - 2) + ", got " +
                             (w.is_void() ? std::string("void") : std::to_string(w.dim())));
    if (!is_pure(w)) return violation("IntersectionNotPure", "U∩V is not pure");

    if (auto sub = verify_node(u, kind, cert->u_cert, path + ".u")) return sub;
    if (auto sub = verify_node(v, kind, cert->v_cert, path + ".v")) return sub;
    if (auto sub = verify_node(w, kind, cert->intersection_cert, path + ".i")) return sub;

    if (kind == CertKind::Sesquiconstructible) {
        const SimplicialComplex b = boundary(w);
        if (b.is_void()) {
            if (cert->boundary_cert)
                return violation("BoundaryCert", "∂(U∩V) is void but a boundary certificate is present");
        } else {
            if (!cert->boundary_cert)
                return violation("BoundaryCert", "∂(U∩V) is non-void but no boundary certificate is present");
            if (b.dim() != d - 3)
                return violation("BoundaryDim", "∂(U∩V) must have dimension " + std::to_string(d - 3) +
                                                    ", got " + std::to_string(b.dim()));
            if (auto sub = verify_node(b, kind, cert->boundary_cert, path + ".b")) return sub;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Replays a certificate against the definition of the given structure kind.
/// Returns the first violated clause, or nothing when the certificate holds.
inline std::optional<CertViolation> verify_certificate(const SimplicialComplex& c, CertKind kind,
                                                       const CertPtr& cert) {
    return detail::verify_node(c, kind, cert, "root");
}

// ---------------------------------------------------------------------------
// Topology classification via the ridge condition
// ---------------------------------------------------------------------------

enum class Topology { Ball, Sphere, NotCandidate, Unknown };

inline const char* topology_name(Topology t) {
    switch (t) {
        case Topology::Ball: return "Ball";
        case Topology::Sphere: return "Sphere";
        case Topology::NotCandidate: return "NotCandidate";
        case Topology::Unknown: return "Unknown";
    }
    return "?";
}

struct TopologyVerdict {
    Topology kind;
    std::string reason;
};

/// Classifies a certified constructible complex: if every ridge lies in at most
/// two facets the complex is a ball or a sphere: a sphere when the boundary is
/// void, a ball otherwise. A ridge in three or more facets means NotCandidate.
/// Requires a certificate that verifies for the constructible clauses
/// (certificates for the stronger kinds pass too).
inline TopologyVerdict classify_topology(const SimplicialComplex& c, const CertPtr& cert) {
    if (auto v = verify_certificate(c, CertKind::Constructible, cert))
        fail(Errc::InvalidCertificate, v->path + " " + v->clause + ": " + v->message);
    for (const Face& r : ridges(c)) {
        int count = 0;
        for (const Face& f : c.facets())
            if (r.subset_of(f)) ++count;
        if (count > 2)
            return {Topology::NotCandidate,
                    "ridge '" + r.to_string() + "' lies in " + std::to_string(count) + " facets"};
    }
    if (boundary(c).is_void()) return {Topology::Sphere, "constructible, ridges in <= 2 facets, void boundary"};
    return {Topology::Ball, "constructible, ridges in <= 2 facets, non-void boundary"};
}

struct UcapvResult {
    bool ok;
    std::string detail;
};

/// Decomposition-intersection check: for a certified constructible ball or
/// sphere with at least two facets, U∩V at the root split must itself be a
/// ball or a sphere (classified via its own sub-certificate). Dimension <= 0
/// is trivially fine.
inline UcapvResult ucapv_check(const SimplicialComplex& c, const CertPtr& cert) {
    if (!cert) fail(Errc::InvalidCertificate, "missing certificate");
    auto verdict = classify_topology(c, cert);
    if (verdict.kind != Topology::Ball && verdict.kind != Topology::Sphere)
        fail(Errc::InvalidCertificate, "complex is not a certified ball or sphere: " + verdict.reason);
    if (c.dim() <= 0) return {true, "dimension <= 0: trivially ok"};
    if (cert->simplex) fail(Errc::InvalidCertificate, "need at least two facets (split root)");
    const SimplicialComplex u = facet_subcomplex(c, cert->u_facets);
    const SimplicialComplex v = facet_subcomplex(c, cert->v_facets);
    const SimplicialComplex w = intersection_of(u, v);
    auto wv = classify_topology(w, cert->intersection_cert);
    if (wv.kind == Topology::Ball || wv.kind == Topology::Sphere)
        return {true, std::string("U∩V is a ") + topology_name(wv.kind)};
    return {false, "U∩V is not a ball or sphere: " + wv.reason};
}

/// Same check applied at every split node of the certificate whose node complex
/// is a certified ball or sphere. Used by property tests.
inline UcapvResult ucapv_check_deep(const SimplicialComplex& c, const CertPtr& cert) {
    if (!cert) fail(Errc::InvalidCertificate, "missing certificate");
    if (cert->simplex || c.dim() <= 0) return {true, "leaf"};
    auto verdict = classify_topology(c, cert);
    if (verdict.kind == Topology::Ball || verdict.kind == Topology::Sphere) {
        auto root = ucapv_check(c, cert);
        if (!root.ok) return root;
    }
    const SimplicialComplex u = facet_subcomplex(c, cert->u_facets);
    const SimplicialComplex v = facet_subcomplex(c, cert->v_facets);
    const SimplicialComplex w = intersection_of(u, v);
    if (auto r = ucapv_check_deep(u, cert->u_cert); !r.ok) return r;
    if (auto r = ucapv_check_deep(v, cert->v_cert); !r.ok) return r;
    if (auto r = ucapv_check_deep(w, cert->intersection_cert); !r.ok) return r;
    if (cert->boundary_cert) {
        if (auto r = ucapv_check_deep(boundary(w), cert->boundary_cert); !r.ok) return r;
    }
    return {true, "all split nodes ok"};
}

// ---------------------------------------------------------------------------
// Certificate file format (".cert")
// ---------------------------------------------------------------------------

namespace detail {

inline void print_cert_node(const CertPtr& cert, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (!cert) fail(Errc::InvalidCertificate, "cannot print a missing certificate node");
    if (cert->simplex) {
        out += pad + "simplex\n";
        return;
    }
    out += pad + "split {\n";
    auto list = [&](const char* key, const std::vector<int>& xs) {
        out += pad + "  " + key + ":";
        for (int x : xs) out += " " + std::to_string(x);
        out += "\n";
    };
    list("u", cert->u_facets);
    list("v", cert->v_facets);
    out += pad + "  u_cert:\n";
    print_cert_node(cert->u_cert, out, indent + 2);
    out += pad + "  v_cert:\n";
    print_cert_node(cert->v_cert, out, indent + 2);
    out += pad + "  intersection_cert:\n";
    print_cert_node(cert->intersection_cert, out, indent + 2);
    if (cert->boundary_cert) {
        out += pad + "  boundary_cert:\n";
        print_cert_node(cert->boundary_cert, out, indent + 2);
    }
    out += pad + "}\n";
}

struct CertTokens {
    std::vector<std::string> toks;
    std::size_t pos = 0;

    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const {
        if (done()) fail(Errc::ParseError, "unexpected end of certificate");
        return toks[pos];
    }
    std::string next() {
        auto t = peek();
        ++pos;
        return t;
    }
    void expect(const std::string& t) {
        if (next() != t) fail(Errc::ParseError, "expected '" + t + "' in certificate");
    }
};

inline CertPtr parse_cert_node(CertTokens& in) {
    const std::string head = in.next();
    if (head == "simplex") return Certificate::make_simplex();
    if (head != "split") fail(Errc::ParseError, "expected 'simplex' or 'split', got '" + head + "'");
    in.expect("{");
    std::vector<int> u, v;
    CertPtr uc, vc, ic, bc;
    auto read_ints = [&](std::vector<int>& out) {
        while (!in.done() && !in.peek().empty() &&
               (std::isdigit(static_cast<unsigned char>(in.peek()[0])) || in.peek()[0] == '-'))
            out.push_back(std::stoi(in.next()));
    };
    while (true) {
        const std::string key = in.next();
        if (key == "}") break;
        if (key == "u:") read_ints(u);
        else if (key == "v:") read_ints(v);
        else if (key == "u_cert:") uc = parse_cert_node(in);
        else if (key == "v_cert:") vc = parse_cert_node(in);
        else if (key == "intersection_cert:") ic = parse_cert_node(in);
        else if (key == "boundary_cert:") bc = parse_cert_node(in);
        else fail(Errc::ParseError, "unexpected token '" + key + "' in certificate");
    }
    if (!uc || !vc || !ic) fail(Errc::ParseError, "split node is missing child certificates");
    return Certificate::make_split(std::move(u), std::move(v), std::move(uc), std::move(vc),
                                   std::move(ic), std::move(bc));
}

}  // namespace detail

inline std::string print_certificate(const CertPtr& cert) {
    std::string out;
    detail::print_cert_node(cert, out, 0);
    return out;
}

inline CertPtr parse_certificate(std::istream& is) {
    detail::CertTokens tokens;
    std::string line;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string t;
        while (ss >> t) tokens.toks.push_back(t);
    }
    if (tokens.done()) fail(Errc::ParseError, "empty certificate");
    auto cert = detail::parse_cert_node(tokens);
    if (!tokens.done()) fail(Errc::ParseError, "trailing tokens after certificate");
    return cert;
}

inline CertPtr parse_certificate_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_certificate(ss);
}

}  // namespace scx
