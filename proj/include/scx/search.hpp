#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "scx/certificate.hpp"
#include "scx/complex.hpp"

namespace scx {

/// Facet-count caps for the exponential searches. Exceeding a cap is a distinct
/// outcome, never a negative answer.
struct SearchCaps {
    int shellable_facets = 20;
    int constructible_facets = 14;
};

enum class SearchStatus { Found, NotFound, CapExceeded };

inline const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::NotFound: return "NotFound";
        case SearchStatus::CapExceeded: return "CapExceeded";
    }
    return "?";
}

struct SearchResult {
    SearchStatus status;
    CertPtr cert;  // set iff status == Found
};

namespace detail {

// A pure complex whose facets are codimension-1 faces of a single simplex
// (which is what U∩V looks like when V is one facet) is shellable in every
// facet order: any two such faces meet in codimension 1, and the same holds
// recursively for the intersections. This builds the chain directly, no search.
inline CertPtr chain_cert_codim1(const SimplicialComplex& c) {
    const int n = static_cast<int>(c.facet_count());
    if (n == 1) return Certificate::make_simplex();
    std::vector<int> u_idx(static_cast<std::size_t>(n - 1));
    std::iota(u_idx.begin(), u_idx.end(), 0);
    const std::vector<int> v_idx{n - 1};
    const SimplicialComplex u = facet_subcomplex(c, u_idx);
    const SimplicialComplex v = facet_subcomplex(c, v_idx);
    const SimplicialComplex w = intersection_of(u, v);
    return Certificate::make_split(std::move(u_idx), v_idx, chain_cert_codim1(u),
                                   Certificate::make_simplex(), chain_cert_codim1(w));
}

inline bool facets_connected(const SimplicialComplex& c) {
    const auto& fs = c.facets();
    if (fs.size() <= 1) return true;
    std::vector<std::size_t> comp(fs.size());
    std::iota(comp.begin(), comp.end(), std::size_t{0});
    auto find = [&comp](std::size_t x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (!fs[i].intersect(fs[j]).empty()) comp[find(i)] = find(j);
    const std::size_t root = find(0);
    for (std::size_t i = 1; i < fs.size(); ++i)
        if (find(i) != root) return false;
    return true;
}

}  // namespace detail

/// Decides shellability, constructibility and sesquiconstructibility on
/// desk-scale complexes, producing decomposition certificates. Subproblems are
/// memoized on the canonical facet-list form, so the caps stay honest: the
/// searches are complete within them, and a negative answer is an exhaustion
/// claim. Searches enumerate candidates in canonical order, so the certificate
/// returned for a given input and cap configuration is always the same.
class StructureSearch {
public:
    explicit StructureSearch(SearchCaps caps = {}) : caps_(caps) {}

    const SearchCaps& caps() const noexcept { return caps_; }

    /// Backtracking over shelling orders (last facet first). The intersection
    /// with a single facet only needs a purity/dimension check: when it is a
    /// pure codimension-1 subcomplex of the facet's boundary, every facet order
    /// shells it, and the chain certificate is built constructively.
    SearchResult check_shellable(const SimplicialComplex& c) {
        require_pure(c, "check_shellable");
        if (static_cast<int>(c.facet_count()) > caps_.shellable_facets)
            return {SearchStatus::CapExceeded, nullptr};
        return shell_rec(c);
    }

    /// Facet-bipartition search for the constructible decomposition, recursing
    /// on U, V and U∩V. Candidates whose intersection is connected are tried
    /// first; the fallback enumeration keeps the search complete within caps.
    SearchResult check_constructible(const SimplicialComplex& c) {
        require_pure(c, "check_constructible");
        return decomp_rec(c, /*sesqui=*/false);
    }

    /// Constructibility search with the extra boundary clause: at every split,
    /// ∂(U∩V) must be void or itself sesquiconstructible of dimension d-3.
    SearchResult check_sesquiconstructible(const SimplicialComplex& c) {
        require_pure(c, "check_sesquiconstructible");
        return decomp_rec(c, /*sesqui=*/true);
    }

    /// Completes a shellable certificate into a sesquiconstructible one by
    /// attaching certificates for the non-void boundaries ∂(U∩V) at every split
    /// (they are always found: the boundary of a pure codimension-1 subcomplex
    /// of a simplex boundary is a small shellable ball or sphere).
    SearchResult augment_to_sesquiconstructible(const SimplicialComplex& c, const CertPtr& cert) {
        if (!cert) fail(Errc::InvalidCertificate, "missing certificate");
        if (cert->simplex) return {SearchStatus::Found, cert};
        const SimplicialComplex u = facet_subcomplex(c, cert->u_facets);
        const SimplicialComplex v = facet_subcomplex(c, cert->v_facets);
        const SimplicialComplex w = intersection_of(u, v);
        auto au = augment_to_sesquiconstructible(u, cert->u_cert);
        if (au.status != SearchStatus::Found) return au;
        auto av = augment_to_sesquiconstructible(v, cert->v_cert);
        if (av.status != SearchStatus::Found) return av;
        auto ai = augment_to_sesquiconstructible(w, cert->intersection_cert);
        if (ai.status != SearchStatus::Found) return ai;
        CertPtr bc;
        if (cert->boundary_cert) {
            auto ab = augment_to_sesquiconstructible(boundary(w), cert->boundary_cert);
            if (ab.status != SearchStatus::Found) return ab;
            bc = ab.cert;
        } else {
            const SimplicialComplex b = boundary(w);
            if (!b.is_void()) {
                auto rb = check_sesquiconstructible(b);
                if (rb.status != SearchStatus::Found) return {rb.status, nullptr};
                bc = rb.cert;
            }
        }
        return {SearchStatus::Found,
                Certificate::make_split(cert->u_facets, cert->v_facets, au.cert, av.cert, ai.cert,
                                        std::move(bc))};
    }

private:
    SearchResult shell_rec(const SimplicialComplex& c) {
        const std::string key = c.canonical_key();
        if (auto it = shell_memo_.find(key); it != shell_memo_.end()) return it->second;

        SearchResult result{SearchStatus::NotFound, nullptr};
        const int n = static_cast<int>(c.facet_count());
        if (n == 1) {
            result = {SearchStatus::Found, Certificate::make_simplex()};
        } else {
            const int d = c.dim() + 1;
            for (int last = 0; last < n && result.status != SearchStatus::Found; ++last) {
                std::vector<int> u_idx;
                u_idx.reserve(static_cast<std::size_t>(n - 1));
                for (int i = 0; i < n; ++i)
                    if (i != last) u_idx.push_back(i);
                const SimplicialComplex u = facet_subcomplex(c, u_idx);
                const SimplicialComplex v = facet_subcomplex(c, {&last, 1});
                const SimplicialComplex w = intersection_of(u, v);
                if (w.is_void() || w.dim() != d - 2 || !is_pure(w)) continue;
                auto ru = shell_rec(u);
                if (ru.status != SearchStatus::Found) continue;  // sub-searches never exceed caps
                result = {SearchStatus::Found,
                          Certificate::make_split(std::move(u_idx), {last}, ru.cert,
                                                  Certificate::make_simplex(),
                                                  detail::chain_cert_codim1(w))};
            }
        }
        shell_memo_.emplace(key, result);
        return result;
    }

    SearchResult decomp_rec(const SimplicialComplex& c, bool sesqui) {
        auto& memo = sesqui ? sesqui_memo_ : constr_memo_;
        const std::string key = c.canonical_key();
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        SearchResult result{SearchStatus::NotFound, nullptr};
        const int n = static_cast<int>(c.facet_count());
        if (n > caps_.constructible_facets) {
            result = {SearchStatus::CapExceeded, nullptr};
            memo.emplace(key, result);
            return result;
        }
        if (n == 1) {
            result = {SearchStatus::Found, Certificate::make_simplex()};
            memo.emplace(key, result);
            return result;
        }

        const int d = c.dim() + 1;
        bool cap_hit = false;
        // facet 0 stays in U, so each unordered bipartition is tried once
        const unsigned long top = 1ul << (n - 1);
        for (int pass = 0; pass < 2 && result.status != SearchStatus::Found; ++pass) {
            for (unsigned long mask = 1; mask < top && result.status != SearchStatus::Found;
                 ++mask) {
                std::vector<int> u_idx{0}, v_idx;
                for (int i = 1; i < n; ++i) {
                    if (mask & (1ul << (i - 1)))
                        v_idx.push_back(i);
                    else
                        u_idx.push_back(i);
                }
                const SimplicialComplex u = facet_subcomplex(c, u_idx);
                const SimplicialComplex v = facet_subcomplex(c, v_idx);
                const SimplicialComplex w = intersection_of(u, v);
                if (w.is_void() || w.dim() != d - 2 || !is_pure(w)) continue;
                if (detail::facets_connected(w) != (pass == 0)) continue;

                SimplicialComplex b;  // void unless needed
                if (sesqui) {
                    b = boundary(w);
                    if (!b.is_void() && b.dim() != d - 3) continue;
                }
                auto ru = decomp_rec(u, sesqui);
                if (ru.status == SearchStatus::CapExceeded) cap_hit = true;
                if (ru.status != SearchStatus::Found) continue;
                auto rv = decomp_rec(v, sesqui);
                if (rv.status == SearchStatus::CapExceeded) cap_hit = true;
                if (rv.status != SearchStatus::Found) continue;
                auto rw = decomp_rec(w, sesqui);
                if (rw.status == SearchStatus::CapExceeded) cap_hit = true;
                if (rw.status != SearchStatus::Found) continue;
                CertPtr bc;
                if (sesqui && !b.is_void()) {
                    auto rb = decomp_rec(b, sesqui);
                    if (rb.status == SearchStatus::CapExceeded) cap_hit = true;
                    if (rb.status != SearchStatus::Found) continue;
                    bc = rb.cert;
                }
                result = {SearchStatus::Found,
                          Certificate::make_split(std::move(u_idx), std::move(v_idx), ru.cert,
                                                  rv.cert, rw.cert, std::move(bc))};
            }
        }
        if (result.status != SearchStatus::Found && cap_hit)
            result.status = SearchStatus::CapExceeded;
        memo.emplace(key, result);
        return result;
    }

    SearchCaps caps_;
    std::map<std::string, SearchResult> shell_memo_;
    std::map<std::string, SearchResult> constr_memo_;
    std::map<std::string, SearchResult> sesqui_memo_;
};

/// Builds the shellable chain certificate corresponding to an explicit shelling
/// order (the facets, each exactly once, in the order they are added). The
/// chain is not validated here; replay it with verify_certificate.
inline CertPtr cert_from_shelling_order(const SimplicialComplex& c, const std::vector<Face>& order) {
    if (order.size() != c.facet_count())
        fail(Errc::BadParameter, "shelling order must list every facet exactly once");
    std::vector<Face> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facets())
        fail(Errc::BadParameter, "shelling order is not a permutation of the facet set");
    if (order.size() == 1) return Certificate::make_simplex();

    const Face& last = order.back();
    std::vector<int> u_idx, v_idx;
    for (int i = 0; i < static_cast<int>(c.facet_count()); ++i) {
        if (c.facets()[static_cast<std::size_t>(i)] == last)
            v_idx.push_back(i);
        else
            u_idx.push_back(i);
    }
    std::vector<Face> prefix(order.begin(), order.end() - 1);
    const SimplicialComplex u = facet_subcomplex(c, u_idx);
    const SimplicialComplex v = facet_subcomplex(c, v_idx);
    const SimplicialComplex w = intersection_of(u, v);
    return Certificate::make_split(std::move(u_idx), std::move(v_idx),
                                   cert_from_shelling_order(u, prefix),
                                   Certificate::make_simplex(), detail::chain_cert_codim1(w));
}

}  // namespace scx
