#include <doctest.h>

#include <string>

#include "scx/complex.hpp"
#include "scx/generators.hpp"
#include "scx/io.hpp"
#include "scx/pipeline.hpp"

using namespace scx;

namespace {

SimplicialComplex cx(const std::string& text) { return parse_scx_string(text); }

}  // namespace

TEST_CASE("pipeline confirms the sign rule on a 3-sphere with the barycentric schedule") {
    PipelineOptions opt;
    opt.use_barycentric = true;
    auto rep = run_theorem_pipeline(generate(GeneratorSpec::simplex_boundary(5)), opt);
    CHECK(rep.outcome == PipelineReport::Outcome::Confirmed);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.kappa_fraction[0] != '-');  // d = 2 even: kappa >= 0
    CHECK(rep.topology.find("Sphere") == 0);
}

TEST_CASE("pipeline on a single 3-simplex gives kappa 0") {
    PipelineOptions opt;
    opt.use_barycentric = true;
    auto rep = run_theorem_pipeline(generate(GeneratorSpec::simplex(4)), opt);
    CHECK(rep.outcome == PipelineReport::Outcome::Confirmed);
    CHECK(rep.kappa_fraction == "0");
    CHECK(rep.topology.find("Ball") == 0);
}

TEST_CASE("pipeline on a 1-dimensional cycle") {
    PipelineOptions opt;
    opt.use_barycentric = true;
    auto cycle = generate(GeneratorSpec::stacked_sphere(1, 2, 5));
    auto rep = run_theorem_pipeline(cycle, opt);
    CHECK(rep.outcome == PipelineReport::Outcome::Confirmed);
    // d = 1 odd: kappa <= 0 (an n-cycle subdivision has kappa = 1 - n'/4 <= 0 once n' >= 4)
    CHECK(rep.theorem.find("holds") != std::string::npos);
}

TEST_CASE("pipeline hypothesis failures are named") {
    PipelineOptions opt;
    opt.use_barycentric = true;

    auto rep_void = run_theorem_pipeline(SimplicialComplex::void_complex(), opt);
    CHECK(rep_void.outcome == PipelineReport::Outcome::HypothesisFailed);
    CHECK(rep_void.exit_code() == 1);

    auto rep_even = run_theorem_pipeline(cx("a b c\nb c d\n"), opt);
    CHECK(rep_even.outcome == PipelineReport::Outcome::HypothesisFailed);
    CHECK(rep_even.failed_stage.find("odd") != std::string::npos);

    auto rep_nonpure = run_theorem_pipeline(cx("a b\nc\n"), opt);
    CHECK(rep_nonpure.outcome == PipelineReport::Outcome::HypothesisFailed);

    // two disjoint edges: pure, odd-dimensional, but not sesquiconstructible
    auto rep_not_sc = run_theorem_pipeline(cx("a b\nc d\n"), opt);
    CHECK(rep_not_sc.outcome == PipelineReport::Outcome::HypothesisFailed);
    CHECK(rep_not_sc.failed_stage.find("sesquiconstructible") != std::string::npos);

    // cycle with a chord: certificate exists but a ridge lies in 3 facets -> not a ball/sphere
    auto rep_chord = run_theorem_pipeline(cx("a b\nb c\na c\nc d\nb d\n"), opt);
    CHECK(rep_chord.outcome == PipelineReport::Outcome::HypothesisFailed);
}

TEST_CASE("pipeline reports cap exhaustion as its own outcome") {
    PipelineOptions opt;
    opt.use_barycentric = true;
    opt.caps.constructible_facets = 3;
    auto rep = run_theorem_pipeline(generate(GeneratorSpec::simplex_boundary(5)), opt);
    CHECK(rep.outcome == PipelineReport::Outcome::CapExceeded);
    CHECK(rep.exit_code() == 2);
}

TEST_CASE("pipeline accepts explicit schedules and rejects invalid ones") {
    auto two = cx("a b\n");

    PipelineOptions opt;
    opt.schedule = SubdivisionSchedule{{Face::of({"a", "b"})}};
    auto rep = run_theorem_pipeline(two, opt);
    CHECK(rep.outcome == PipelineReport::Outcome::Confirmed);

    PipelineOptions bad;
    bad.schedule = SubdivisionSchedule{{}};
    auto rep_bad = run_theorem_pipeline(two, bad);
    CHECK(rep_bad.outcome == PipelineReport::Outcome::HypothesisFailed);
    CHECK(rep_bad.schedule.find("MissingOddFace") != std::string::npos);

    PipelineOptions none;
    auto rep_none = run_theorem_pipeline(two, none);
    CHECK(rep_none.outcome == PipelineReport::Outcome::HypothesisFailed);
}

TEST_CASE("the empty complex confirms trivially") {
    PipelineOptions opt;
    opt.use_barycentric = true;
    auto rep = run_theorem_pipeline(SimplicialComplex::empty_complex(), opt);
    CHECK(rep.outcome == PipelineReport::Outcome::Confirmed);
    CHECK(rep.kappa_fraction == "1");  // kappa({∅}) = 1 and d = 0 is even
}

TEST_CASE("reports are deterministic and json mirrors text") {
    PipelineOptions opt;
    opt.use_barycentric = true;
    auto c = generate(GeneratorSpec::stacked_sphere(1, 3, 77));
    auto r1 = run_theorem_pipeline(c, opt);
    auto r2 = run_theorem_pipeline(c, opt);
    CHECK(r1.to_text() == r2.to_text());
    CHECK(r1.to_json().dump() == r2.to_json().dump());
    CHECK(r1.to_json()["outcome"] == "confirmed");
    CHECK_FALSE(r1.to_text().empty());
}
