#include <doctest.h>

#include <set>
#include <string>
#include <atomic>
#include <thread>
#include <utility>
#include <vector>

#include "scx/complex.hpp"
#include "scx/generators.hpp"
#include "scx/invariants.hpp"
#include "scx/io.hpp"
#include "scx/search.hpp"
#include "scx/subdivision.hpp"

using namespace scx;

namespace {

SimplicialComplex cx(const std::string& text) { return parse_scx_string(text); }

// Brute-force face-count oracle, independent of the library's enumeration: walk
// every subset of the raw token sets and count the distinct ones of size k+1.
long long oracle_face_count(const std::vector<std::set<std::string>>& facets, int k) {
    std::set<std::set<std::string>> seen;
    for (const auto& f : facets) {
        std::vector<std::string> vs(f.begin(), f.end());
        const std::size_t n = vs.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::set<std::string> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) sub.insert(vs[i]);
            if (static_cast<int>(sub.size()) == k + 1) seen.insert(sub);
        }
    }
    return static_cast<long long>(seen.size());
}

std::vector<BigInt> big(std::initializer_list<long long> xs) {
    std::vector<BigInt> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("dyadic arithmetic is exact and normalized") {
    Dyadic half(1, 1), quarter(1, 2);
    CHECK((half + quarter).to_fraction_string() == "3/2^2");
    CHECK((half - half).is_zero());
    CHECK((half - half).exponent() == 0);
    CHECK(Dyadic(4, 2) == Dyadic(1));       // 4/4 normalizes to 1
    CHECK(Dyadic(6, 1) == Dyadic(3));       // even numerator, integer value
    CHECK(Dyadic(-1, 3) < Dyadic::zero());
    CHECK(Dyadic(-1, 3).sign() == -1);
    CHECK(Dyadic(1, 3).times_pow2(3) == Dyadic(1));
    CHECK(Dyadic(1, 1).half() == quarter);
    CHECK(Dyadic(5, 0).to_decimal_string() == "5");
    CHECK(Dyadic(1, 3).to_decimal_string() == "0.125");
    CHECK(Dyadic(-1, 1).to_decimal_string() == "-0.5");
    CHECK(Dyadic(9, 3).to_decimal_string() == "1.125");
    CHECK(Dyadic(-3, 4).to_fraction_string() == "-3/2^4");
    CHECK(Dyadic(-3, 4).to_decimal_string() == "-0.1875");
}

TEST_CASE("dyadic arithmetic agrees with a scaled-integer reference") {
    // random a/2^e with small magnitudes; compare against exact arithmetic on a
    // common denominator 2^12
    Lcg rng(808);
    auto draw = [&rng]() {
        const long long num = static_cast<long long>(rng.below(4001)) - 2000;
        const unsigned expo = rng.below(7);
        return std::pair<Dyadic, long long>{Dyadic(num, expo),
                                            num << (12 - expo)};  // value * 2^12
    };
    for (int i = 0; i < 500; ++i) {
        auto [x, xref] = draw();
        auto [y, yref] = draw();
        CHECK(Dyadic(xref + yref, 12) == x + y);
        CHECK(Dyadic(xref - yref, 12) == x - y);
        CHECK(Dyadic(-xref, 12) == -x);
        CHECK(Dyadic(xref, 13) == x.half());
        CHECK((x < y) == (xref < yref));
        CHECK((x == y) == (xref == yref));
        CHECK(x.sign() == (xref > 0 ? 1 : xref < 0 ? -1 : 0));
    }
}

TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("f-vector") {
    CHECK(f_vector(cx("a b c\na b d\na c d\nb c d\n")).entries == big({1, 4, 6, 4}));
    CHECK(f_vector(SimplicialComplex::empty_complex()).entries == big({1}));

    // two triangles sharing an edge, frozen from the subset-enumeration oracle
    const std::vector<std::set<std::string>> raw = {{"a", "b", "c"}, {"b", "c", "d"}};
    CHECK(oracle_face_count(raw, 0) == 4);
    CHECK(oracle_face_count(raw, 1) == 5);
    CHECK(oracle_face_count(raw, 2) == 2);
    CHECK(f_vector(cx("a b c\nb c d\n")).entries == big({1, 4, 5, 2}));

    CHECK_THROWS_AS(f_vector(SimplicialComplex::void_complex()), Error);
}

TEST_CASE("h-vector") {
    CHECK(h_vector(cx("a b c\n")).entries == big({1, 0, 0, 0}));
    CHECK(h_vector(cx("a b c\na b d\na c d\nb c d\n")).entries == big({1, 1, 1, 1}));
    CHECK(h_vector(cx("a b\nb c\nc d\na d\n")).entries == big({1, 2, 1}));
    CHECK_THROWS_AS(h_vector(cx("a b\nc\n")), Error);
}

TEST_CASE("f and h round-trip exactly") {
    for (const auto& text : {"a b c\n", "a b c\na b d\na c d\nb c d\n", "a b\nb c\nc d\na d\n",
                             "a b c\nb c d\n", "a\nb\nc\n"}) {
        auto c = cx(text);
        CHECK(f_from_h(h_vector(c)) == f_vector(c));
    }
    // and on generated complexes
    for (int d = 1; d <= 3; ++d) {
        auto sphere = generate(GeneratorSpec::stacked_sphere(d, 4, 7));
        CHECK(f_from_h(h_vector(sphere)) == f_vector(sphere));
    }
}

TEST_CASE("h-vector sums to the facet count") {
    for (const auto& text : {"a b c\nb c d\n", "a b\nb c\nc d\na d\n", "a b c\na b d\na c d\nb c d\n"}) {
        auto c = cx(text);
        BigInt sum = 0;
        for (const auto& h : h_vector(c).entries) sum += h;
        CHECK(sum == f_vector(c).entries.back());
        CHECK(h_vector(c).entries.front() == 1);
    }
}

TEST_CASE("dehn-sommerville") {
    CHECK(dehn_sommerville_holds(cx("a b c\na b d\na c d\nb c d\n")));
    CHECK_FALSE(dehn_sommerville_holds(cx("a b c\n")));  // a ball: h = (1,0,0,0)
    auto octahedron = generate(GeneratorSpec::cross_polytope_boundary(3));
    CHECK(dehn_sommerville_holds(octahedron));
}

TEST_CASE("kappa") {
    CHECK(kappa(SimplicialComplex::empty_complex()) == Dyadic(1));
    CHECK(kappa(cx("a b c\n")) == Dyadic(1, 3));          // 1 - 3/2 + 3/4 - 1/8
    CHECK(kappa(cx("a b\na c\nb c\n")) == Dyadic(1, 2));  // 1 - 3/2 + 3/4
    CHECK(kappa(cx("a b\nb c\nc d\na d\n")).is_zero());   // 1 - 2 + 1
    // 6-cycle: 1 - 3 + 3/2
    CHECK(kappa(cx("a b\nb c\nc d\nd e\ne f\na f\n")) == Dyadic(-1, 1));
    // even-dimensional spheres have kappa 0
    CHECK(kappa(generate(GeneratorSpec::cross_polytope_boundary(3))).is_zero());
    CHECK(kappa(generate(GeneratorSpec::simplex_boundary(4))).is_zero());
    CHECK_THROWS_AS(kappa(SimplicialComplex::void_complex()), Error);
}

TEST_CASE("alternating h identity") {
    CHECK(h_alternating_identity_check(cx("a b c\na b d\na c d\nb c d\n")));
    CHECK(h_alternating_identity_check(cx("a b c\n")));
    for (std::uint64_t seed : {1, 2, 3}) {
        CHECK(h_alternating_identity_check(generate(GeneratorSpec::stacked_sphere(2, 5, seed))));
        CHECK(h_alternating_identity_check(generate(GeneratorSpec::stacked_ball(3, 4, seed))));
    }
}

TEST_CASE("minimal non-faces and flagness") {
    auto cycle3 = cx("a b\na c\nb c\n");
    CHECK(minimal_non_faces(cycle3) == std::set<Face>{Face::of({"a", "b", "c"})});
    CHECK_FALSE(is_flag(cycle3));

    auto cycle4 = cx("a b\nb c\nc d\na d\n");
    CHECK(minimal_non_faces(cycle4) ==
          std::set<Face>{Face::of({"a", "c"}), Face::of({"b", "d"})});
    CHECK(is_flag(cycle4));

    CHECK(minimal_non_faces(cx("a b c\n")).empty());
    CHECK(is_flag(cx("a b c\n")));
    CHECK_THROWS_AS(minimal_non_faces(SimplicialComplex::void_complex()), Error);

    // cap triggers a structured overflow
    auto big_sphere = generate(GeneratorSpec::stacked_sphere(2, 30, 5));
    CHECK_THROWS_AS(minimal_non_faces(big_sphere, 10), Error);
}

TEST_CASE("barycentric subdivisions are flag") {
    for (const auto& spec :
         {GeneratorSpec::simplex(3), GeneratorSpec::simplex_boundary(4),
          GeneratorSpec::two_triangles(), GeneratorSpec::stacked_sphere(1, 3, 11)}) {
        auto sub = barycentric_subdivision(generate(spec));
        CHECK(is_flag(sub, 512));
    }
}

TEST_CASE("charney-davis sign rule") {
    CHECK(charney_davis_sign_ok(cx("a b\nb c\nc d\na d\n")));              // kappa = 0
    CHECK(charney_davis_sign_ok(cx("a b\nb c\nc d\nd e\ne f\na f\n")));    // kappa = -1/2
    CHECK_FALSE(charney_davis_sign_ok(cx("a b\na c\nb c\n")));  // 3-cycle is not flag; kappa = 1/4
    CHECK(charney_davis_sign_ok(SimplicialComplex::empty_complex()));      // dim -1, d = 0, kappa = 1
    CHECK_THROWS_AS(charney_davis_sign_ok(cx("a b c\nb c d\n")), Error);   // even dimension
}

TEST_CASE("kappa_or_zero treats the void complex as zero") {
    CHECK(kappa_or_zero(SimplicialComplex::void_complex()).is_zero());
    CHECK(kappa_or_zero(cx("a b c\n")) == Dyadic(1, 3));
}

TEST_CASE("kappa of an n-cycle is (4 - n)/4") {
    for (int n = 3; n <= 10; ++n) {
        std::vector<Face> edges;
        for (int i = 0; i < n; ++i) {
            std::string u = "v" + std::to_string(i);
            std::string w = "v" + std::to_string((i + 1) % n);
            edges.push_back(Face({VertexLabel(u), VertexLabel(w)}));
        }
        auto cycle = SimplicialComplex::from_faces(edges);
        CHECK(kappa(cycle) == Dyadic(4 - n, 2));
    }
}

TEST_CASE("pure operations are safe to call concurrently on shared values") {
    const auto c = generate(GeneratorSpec::stacked_sphere(2, 4, 99));
    const auto expect_f = f_vector(c);
    const auto expect_k = kappa(c);
    const auto expect_sub = barycentric_subdivision(c);
    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&] {
            for (int i = 0; i < 5; ++i) {
                if (!(f_vector(c) == expect_f)) ++mismatches;
                if (!(kappa(c) == expect_k)) ++mismatches;
                if (!(barycentric_subdivision(c) == expect_sub)) ++mismatches;
                StructureSearch local_search;  // one memo per thread
                if (local_search.check_shellable(c).status != SearchStatus::Found) ++mismatches;
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches.load() == 0);
}
