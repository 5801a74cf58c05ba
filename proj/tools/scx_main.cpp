// scx: command-line front end for the simplicial complex library:
// generation, subdivision, invariants, structure certificates and the
// end-to-end theorem check. See README.md for the file formats.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scx/certificate.hpp"
#include "scx/complex.hpp"
#include "scx/generators.hpp"
#include "scx/invariants.hpp"
#include "scx/io.hpp"
#include "scx/iso.hpp"
#include "scx/pipeline.hpp"
#include "scx/search.hpp"
#include "scx/subdivision.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitCapExceeded = 2;
constexpr int kExitInputError = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) scx::fail(scx::Errc::ParseError, "cannot write '" + out_path + "'");
        out << text;
    }
}

scx::CertPtr read_cert_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) scx::fail(scx::Errc::ParseError, "cannot open '" + path + "'");
    return scx::parse_certificate(in);
}

std::string join_csv(const std::vector<scx::BigInt>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += xs[i].str();
    }
    return s;
}

scx::GeneratorSpec spec_from_flags(const std::string& kind, int n, int dim, int steps,
                                   std::uint64_t seed, int suspend) {
    scx::GeneratorSpec spec;
    if (kind == "simplex") spec = scx::GeneratorSpec::simplex(n);
    else if (kind == "simplex-boundary") spec = scx::GeneratorSpec::simplex_boundary(n);
    else if (kind == "cross-polytope-boundary") spec = scx::GeneratorSpec::cross_polytope_boundary(dim);
    else if (kind == "stacked-ball") spec = scx::GeneratorSpec::stacked_ball(dim, steps, seed);
    else if (kind == "stacked-sphere") spec = scx::GeneratorSpec::stacked_sphere(dim, steps, seed);
    else if (kind == "two-triangles") spec = scx::GeneratorSpec::two_triangles();
    else scx::fail(scx::Errc::BadParameter, "unknown generator kind '" + kind + "'");
    for (int i = 0; i < suspend; ++i) spec = scx::GeneratorSpec::suspension(spec);
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scx: finite simplicial complexes: subdivisions, exact invariants, "
                 "structure certificates"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a corpus complex");
    std::string gen_kind = "simplex";
    int gen_n = 3, gen_dim = 2, gen_steps = 0, gen_suspend = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out, gen_cert_out;
    gen->add_option("--kind", gen_kind,
                    "simplex | simplex-boundary | cross-polytope-boundary | stacked-ball | "
                    "stacked-sphere | two-triangles");
    gen->add_option("--n", gen_n, "vertex count (simplex kinds)");
    gen->add_option("--dim", gen_dim, "dimension (cross-polytope / stacked kinds)");
    gen->add_option("--steps", gen_steps, "growth steps (stacked kinds)");
    gen->add_option("--seed", gen_seed, "rng seed (stacked kinds)");
    gen->add_option("--suspend", gen_suspend, "wrap in this many suspensions");
    gen->add_option("--out", gen_out, "output .scx path (default stdout)");
    gen->add_option("--cert-out", gen_cert_out, "also write the shelling certificate here");

    // ---- single-complex commands ----
    std::string in_path, out_path, sched_path, sched_out_path;
    int faces_dim = 1;

    auto* faces = app.add_subcommand("faces", "list the faces of one dimension");
    faces->add_option("file", in_path)->required();
    faces->add_option("--dim", faces_dim, "face dimension (>= -1)")->required();

    auto* bd = app.add_subcommand("boundary", "boundary complex of a pure complex");
    bd->add_option("file", in_path)->required();
    bd->add_option("--out", out_path);

    auto* subdiv = app.add_subcommand("subdivide", "odd iterated stellar subdivision");
    subdiv->add_option("file", in_path)->required();
    subdiv->add_option("--schedule", sched_path, ".sched file")->required();
    subdiv->add_option("--out", out_path);

    auto* bary = app.add_subcommand("barycentric", "barycentric subdivision");
    bary->add_option("file", in_path)->required();
    bary->add_option("--out", out_path);
    bary->add_option("--schedule-out", sched_out_path, "write the barycentric schedule here");

    auto* fvec = app.add_subcommand("fvec", "f-vector");
    fvec->add_option("file", in_path)->required();

    auto* hvec = app.add_subcommand("hvec", "h-vector");
    hvec->add_option("file", in_path)->required();

    auto* kap = app.add_subcommand("kappa", "Charney-Davis quantity, exact and decimal");
    kap->add_option("file", in_path)->required();

    std::size_t vertex_cap = 25;
    auto* flag = app.add_subcommand("flag", "flagness and minimal non-faces");
    flag->add_option("file", in_path)->required();
    flag->add_option("--vertex-cap", vertex_cap, "minimal-non-face vertex cap (default 25)");

    // ---- structure commands ----
    std::string kind_name = "shellable";
    int cap_facets = -1;
    std::string cert_path, cert_out;

    auto* check = app.add_subcommand("check", "decide a structure property, emit a certificate");
    check->add_option("file", in_path)->required();
    check->add_option("--kind", kind_name, "shellable | constructible | sesquiconstructible")
        ->required();
    check->add_option("--cap-facets", cap_facets, "search cap override");
    check->add_option("--cert-out", cert_out, "write the certificate here");

    auto* verify = app.add_subcommand("verify", "replay a certificate against a complex");
    verify->add_option("file", in_path)->required();
    verify->add_option("cert", cert_path)->required();
    verify->add_option("--kind", kind_name)->required();

    auto* classify = app.add_subcommand("classify", "ball/sphere verdict from a certificate");
    classify->add_option("file", in_path)->required();
    classify->add_option("cert", cert_path)->required();

    std::string iso_b_path;
    auto* iso = app.add_subcommand("iso", "isomorphism test with witness");
    iso->add_option("file1", in_path)->required();
    iso->add_option("file2", iso_b_path)->required();

    // ---- theorem-check ----
    auto* thm = app.add_subcommand("theorem-check",
                                   "full pipeline: certificate, topology, schedule, κ sign rule");
    bool use_barycentric = false;
    std::string format = "text";
    std::size_t flag_cap = 4096;
    thm->add_option("file", in_path)->required();
    thm->add_option("--schedule", sched_path, ".sched file");
    thm->add_flag("--barycentric", use_barycentric, "use the barycentric schedule");
    thm->add_option("--cap-facets", cap_facets, "search cap override");
    thm->add_option("--format", format, "text | json");
    thm->add_option("--flag-vertex-cap", flag_cap, "vertex cap for the flagness annotation");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const auto spec = spec_from_flags(gen_kind, gen_n, gen_dim, gen_steps, gen_seed,
                                              gen_suspend);
            const auto c = scx::generate(spec);
            emit(scx::print_scx(c), gen_out);
            if (!gen_cert_out.empty()) {
                const auto order = scx::shelling_order_of(spec);
                emit(scx::print_certificate(scx::cert_from_shelling_order(c, order)), gen_cert_out);
            }
            return kExitOk;
        }
        if (faces->parsed()) {
            const auto c = scx::read_scx_file(in_path);
            for (const auto& f : scx::faces_of_dim(c, faces_dim))
                std::cout << (f.empty() ? std::string("EMPTYFACE") : f.to_string()) << "\n";
            return kExitOk;
        }
        if (bd->parsed()) {
            emit(scx::print_scx(scx::boundary(scx::read_scx_file(in_path))), out_path);
            return kExitOk;
        }
        if (subdiv->parsed()) {
            const auto c = scx::read_scx_file(in_path);
            scx::SubdivisionSchedule s{scx::read_schedule_file(sched_path)};
            if (auto v = scx::validate_schedule(c, s)) {
                std::cerr << "invalid schedule: " << scx::schedule_violation_name(v->kind) << ": "
                          << v->message << "\n";
                return kExitNegative;
            }
            emit(scx::print_scx(scx::odd_iterated_subdivide(c, s)), out_path);
            return kExitOk;
        }
        if (bary->parsed()) {
            const auto c = scx::read_scx_file(in_path);
            const auto s = scx::barycentric_schedule(c);
            if (!sched_out_path.empty()) scx::write_schedule_file(sched_out_path, s.faces);
            emit(scx::print_scx(scx::odd_iterated_subdivide(c, s)), out_path);
            return kExitOk;
        }
        if (fvec->parsed()) {
            std::cout << join_csv(scx::f_vector(scx::read_scx_file(in_path)).entries) << "\n";
            return kExitOk;
        }
        if (hvec->parsed()) {
            std::cout << join_csv(scx::h_vector(scx::read_scx_file(in_path)).entries) << "\n";
            return kExitOk;
        }
        if (kap->parsed()) {
            const auto k = scx::kappa(scx::read_scx_file(in_path));
            std::cout << k.to_fraction_string() << " = " << k.to_decimal_string() << "\n";
            return kExitOk;
        }
        if (flag->parsed()) {
            const auto c = scx::read_scx_file(in_path);
            const auto mnf = scx::minimal_non_faces(c, vertex_cap);
            bool all2 = true;
            for (const auto& f : mnf) {
                if (f.size() != 2) all2 = false;
                std::cout << "minimal-non-face: " << f.to_string() << "\n";
            }
            std::cout << "flag: " << (all2 ? "yes" : "no") << "\n";
            return all2 ? kExitOk : kExitNegative;
        }
        if (check->parsed()) {
            const auto c = scx::read_scx_file(in_path);
            auto kind = scx::cert_kind_from_name(kind_name);
            if (!kind) scx::fail(scx::Errc::BadParameter, "unknown kind '" + kind_name + "'");
            scx::SearchCaps caps;
            if (cap_facets > 0) {
                caps.shellable_facets = cap_facets;
                caps.constructible_facets = cap_facets;
            }
            scx::StructureSearch search(caps);
            scx::SearchResult r{scx::SearchStatus::NotFound, nullptr};
            switch (*kind) {
                case scx::CertKind::Shellable: r = search.check_shellable(c); break;
                case scx::CertKind::Constructible: r = search.check_constructible(c); break;
                case scx::CertKind::Sesquiconstructible:
                    r = search.check_sesquiconstructible(c);
                    break;
            }
            if (r.status == scx::SearchStatus::CapExceeded) {
                std::cout << kind_name << ": cap exceeded (not decided)\n";
                return kExitCapExceeded;
            }
            if (r.status == scx::SearchStatus::NotFound) {
                std::cout << kind_name << ": no (exhaustive within caps)\n";
                return kExitNegative;
            }
            std::cout << kind_name << ": yes\n";
            if (!cert_out.empty()) emit(scx::print_certificate(r.cert), cert_out);
            return kExitOk;
        }
        if (verify->parsed()) {
            const auto c = scx::read_scx_file(in_path);
            auto kind = scx::cert_kind_from_name(kind_name);
            if (!kind) scx::fail(scx::Errc::BadParameter, "unknown kind '" + kind_name + "'");
            const auto cert = read_cert_file(cert_path);
            if (auto v = scx::verify_certificate(c, *kind, cert)) {
                std::cout << "violation at " << v->path << " [" << v->clause << "]: " << v->message
                          << "\n";
                return kExitNegative;
            }
            std::cout << "ok\n";
            return kExitOk;
        }
        if (classify->parsed()) {
            const auto c = scx::read_scx_file(in_path);
            const auto cert = read_cert_file(cert_path);
            const auto verdict = scx::classify_topology(c, cert);
            std::cout << scx::topology_name(verdict.kind) << " (" << verdict.reason << ")\n";
            return (verdict.kind == scx::Topology::Ball || verdict.kind == scx::Topology::Sphere)
                       ? kExitOk
                       : kExitNegative;
        }
        if (iso->parsed()) {
            const auto a = scx::read_scx_file(in_path);
            const auto b = scx::read_scx_file(iso_b_path);
            if (auto w = scx::find_isomorphism(a, b)) {
                std::cout << "isomorphic: yes\n";
                for (const auto& [from, to] : w->mapping)
                    std::cout << from.token() << " -> " << to.token() << "\n";
                return kExitOk;
            }
            std::cout << "isomorphic: no\n";
            return kExitNegative;
        }
        if (thm->parsed()) {
            const auto c = scx::read_scx_file(in_path);
            scx::PipelineOptions opt;
            if (cap_facets > 0) {
                opt.caps.shellable_facets = cap_facets;
                opt.caps.constructible_facets = cap_facets;
            }
            opt.flag_vertex_cap = flag_cap;
            opt.use_barycentric = use_barycentric;
            if (!use_barycentric) {
                if (sched_path.empty())
                    scx::fail(scx::Errc::BadParameter, "need --schedule FILE or --barycentric");
                opt.schedule = scx::SubdivisionSchedule{scx::read_schedule_file(sched_path)};
            }
            const auto rep = scx::run_theorem_pipeline(c, opt);
            if (format == "json")
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.to_text();
            return rep.exit_code();
        }
    } catch (const scx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
