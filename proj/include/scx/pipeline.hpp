#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "scx/certificate.hpp"
#include "scx/complex.hpp"
#include "scx/invariants.hpp"
#include "scx/search.hpp"
#include "scx/subdivision.hpp"

namespace scx {

struct PipelineOptions {
    SearchCaps caps{};
    bool use_barycentric = false;
    std::optional<SubdivisionSchedule> schedule;  // ignored when use_barycentric is set
    std::size_t flag_vertex_cap = 4096;           // flagness is an annotation, keep it permissive
};

/// End-to-end record of one theorem-check run: establish the hypotheses
/// (sesquiconstructible ball or sphere of odd dimension, valid schedule),
/// subdivide, and test the sign rule on κ of the subdivision. Rendering is
/// deterministic: identical inputs and flags give byte-identical reports.
struct PipelineReport {
    enum class Outcome { Confirmed, HypothesisFailed, CapExceeded };

    std::string input_summary;
    std::string certificate;  // kind + verification status
    std::string topology;
    std::string schedule;
    std::string subdivision;  // f-vector summary once computed
    std::string kappa_fraction;
    std::string kappa_decimal;
    std::string flagness;
    std::string theorem;  // sign rule statement and whether it holds
    Outcome outcome = Outcome::HypothesisFailed;
    std::string failed_stage;  // named hypothesis (or "conclusion") when not confirmed

    int exit_code() const {
        switch (outcome) {
            case Outcome::Confirmed: return 0;
            case Outcome::HypothesisFailed: return 1;
            case Outcome::CapExceeded: return 2;
        }
        return 1;
    }

    static const char* outcome_name(Outcome o) {
        switch (o) {
            case Outcome::Confirmed: return "confirmed";
            case Outcome::HypothesisFailed: return "hypothesis-failed";
            case Outcome::CapExceeded: return "cap-exceeded";
        }
        return "?";
    }

    std::string to_text() const {
        std::string s;
        auto line = [&s](const char* key, const std::string& val) {
            if (!val.empty()) s += std::string(key) + ": " + val + "\n";
        };
        line("input", input_summary);
        line("certificate", certificate);
        line("topology", topology);
        line("schedule", schedule);
        line("subdivision", subdivision);
        if (!kappa_fraction.empty()) line("kappa", kappa_fraction + " = " + kappa_decimal);
        line("flag", flagness);
        line("theorem", theorem);
        line("outcome", std::string(outcome_name(outcome)) +
                            (failed_stage.empty() ? "" : " (" + failed_stage + ")"));
        return s;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["input"] = input_summary;
        j["certificate"] = certificate;
        j["topology"] = topology;
        j["schedule"] = schedule;
        j["subdivision"] = subdivision;
        j["kappa"] = {{"fraction", kappa_fraction}, {"decimal", kappa_decimal}};
        j["flag"] = flagness;
        j["theorem"] = theorem;
        j["outcome"] = outcome_name(outcome);
        j["failed_stage"] = failed_stage;
        return j;
    }
};

/// Runs the full pipeline: sesquiconstructibility search -> certificate
/// verification -> ball/sphere classification -> schedule validation ->
/// odd iterated subdivision -> exact κ -> sign rule. A failed stage names the
/// hypothesis that could not be established; search-cap exhaustion is reported
/// as its own outcome, never as a negative structure result.
inline PipelineReport run_theorem_pipeline(const SimplicialComplex& input,
                                           const PipelineOptions& opt) {
    PipelineReport rep;

    if (input.is_void()) {
        rep.input_summary = "void complex";
        rep.failed_stage = "input must be a non-void complex";
        return rep;
    }
    rep.input_summary = "dim=" + std::to_string(input.dim()) +
                        " f=" + f_vector(input).to_string() +
                        " facets=" + std::to_string(input.facet_count());
    if (!is_pure(input)) {
        rep.failed_stage = "input must be pure";
        return rep;
    }
    const int dim = input.dim();
    if (dim % 2 == 0) {
        rep.failed_stage = "input dimension must be odd (2d-1)";
        return rep;
    }
    const int d = (dim + 1) / 2;

    StructureSearch search(opt.caps);
    auto found = search.check_sesquiconstructible(input);
    if (found.status == SearchStatus::CapExceeded) {
        rep.certificate = "sesquiconstructible: search cap exceeded (cap-facets=" +
                          std::to_string(opt.caps.constructible_facets) + ")";
        rep.outcome = PipelineReport::Outcome::CapExceeded;
        rep.failed_stage = "sesquiconstructibility not established within caps";
        return rep;
    }
    if (found.status == SearchStatus::NotFound) {
        rep.certificate = "sesquiconstructible: no (exhaustive within caps)";
        rep.failed_stage = "input is not sesquiconstructible";
        return rep;
    }
    if (auto v = verify_certificate(input, CertKind::Sesquiconstructible, found.cert))
        fail(Errc::InvariantBroken, "search produced a certificate the verifier rejects at " +
                                        v->path + " (" + v->clause + ": " + v->message + ")");
    rep.certificate = "sesquiconstructible: certificate found and verified";

    const TopologyVerdict verdict = classify_topology(input, found.cert);
    rep.topology = std::string(topology_name(verdict.kind)) + " (" + verdict.reason + ")";
    if (verdict.kind != Topology::Ball && verdict.kind != Topology::Sphere) {
        rep.failed_stage = "input is not a certified ball or sphere";
        return rep;
    }

    SubdivisionSchedule sched;
    if (opt.use_barycentric) {
        if (dim >= 1) sched = barycentric_schedule(input);
        rep.schedule = "barycentric, " + std::to_string(sched.faces.size()) + " faces";
    } else {
        if (!opt.schedule) {
            rep.failed_stage = "no schedule provided";
            return rep;
        }
        sched = *opt.schedule;
        rep.schedule = "explicit, " + std::to_string(sched.faces.size()) + " faces";
    }
    if (auto viol = validate_schedule(input, sched)) {
        rep.schedule += std::string("; invalid: ") + schedule_violation_name(viol->kind) + ": " +
                        viol->message;
        rep.failed_stage = "schedule does not satisfy the odd-iterated conditions";
        return rep;
    }
    rep.schedule += ", valid";

    const SimplicialComplex subdiv = odd_iterated_subdivide(input, sched);
    rep.subdivision = "f=" + f_vector(subdiv).to_string() +
                      " facets=" + std::to_string(subdiv.facet_count());

    const Dyadic k = kappa(subdiv);
    rep.kappa_fraction = k.to_fraction_string();
    rep.kappa_decimal = k.to_decimal_string();
    try {
        rep.flagness = is_flag(subdiv, opt.flag_vertex_cap) ? "yes" : "no";
    } catch (const Error& e) {
        if (e.code() != Errc::Overflow) throw;
        rep.flagness = "not computed (vertex cap)";
    }

    const bool even_d = d % 2 == 0;
    const bool holds = even_d ? k.sign() >= 0 : k.sign() <= 0;
    rep.theorem = std::string("d=") + std::to_string(d) + (even_d ? " even, needs kappa >= 0: " : " odd, needs kappa <= 0: ") +
                  (holds ? "holds" : "VIOLATED");
    if (holds) {
        rep.outcome = PipelineReport::Outcome::Confirmed;
    } else {
        rep.outcome = PipelineReport::Outcome::HypothesisFailed;
        rep.failed_stage = "conclusion: sign rule violated";
    }
    return rep;
}

}  // namespace scx
