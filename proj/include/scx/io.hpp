#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

inline bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

}  // namespace detail

/// Facet-list text format (".scx"):
///   - one facet per non-empty, non-comment line, as whitespace-separated vertex tokens;
///   - lines starting with '#' are comments;
///   - the literal line "EMPTYFACE" denotes the empty-face facet, so {∅} is representable;
///   - a file with zero facet lines is the void complex.
/// Lines generate the complex; non-maximal lines are absorbed.
inline SimplicialComplex parse_scx(std::istream& in) {
    std::vector<Face> faces;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_blank_or_comment(line)) continue;
        auto toks = detail::split_tokens(line);
        if (toks.size() == 1 && toks[0] == "EMPTYFACE") {
            faces.emplace_back();
            continue;
        }
        std::vector<VertexLabel> vs;
        vs.reserve(toks.size());
        for (const auto& t : toks) {
            if (!VertexLabel::valid_token(t))
                fail(Errc::ParseError, "line " + std::to_string(lineno) + ": bad vertex token '" + t + "'");
            vs.emplace_back(t);
        }
        faces.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_faces(std::move(faces));
}

inline SimplicialComplex parse_scx_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_scx(ss);
}

/// Canonical printer; parse ∘ print is the identity on canonical form.
inline std::string print_scx(const SimplicialComplex& c) {
    std::string out;
    for (const Face& f : c.facets()) {
        out += f.empty() ? std::string("EMPTYFACE") : f.to_string();
        out += '\n';
    }
    return out;
}

inline SimplicialComplex read_scx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
    return parse_scx(in);
}

inline void write_scx_file(const std::string& path, const SimplicialComplex& c) {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
    out << print_scx(c);
}

/// Schedule file format (".sched"): one non-empty face per line, order significant.
/// Comments and blank lines as in ".scx". Faces must be validated against the
/// complex they will subdivide before use.
inline std::vector<Face> parse_schedule_faces(std::istream& in) {
    std::vector<Face> faces;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_blank_or_comment(line)) continue;
        auto toks = detail::split_tokens(line);
        if (toks.size() == 1 && toks[0] == "EMPTYFACE")
            fail(Errc::ParseError, "line " + std::to_string(lineno) + ": schedules list non-empty faces only");
        std::vector<VertexLabel> vs;
        vs.reserve(toks.size());
        for (const auto& t : toks) {
            if (!VertexLabel::valid_token(t))
                fail(Errc::ParseError, "line " + std::to_string(lineno) + ": bad vertex token '" + t + "'");
            vs.emplace_back(t);
        }
        faces.emplace_back(std::move(vs));
    }
    return faces;
}

inline std::vector<Face> parse_schedule_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_schedule_faces(ss);
}

inline std::string print_schedule(const std::vector<Face>& faces) {
    std::string out;
    for (const Face& f : faces) {
        out += f.to_string();
        out += '\n';
    }
    return out;
}

inline std::vector<Face> read_schedule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
    return parse_schedule_faces(in);
}

inline void write_schedule_file(const std::string& path, const std::vector<Face>& faces) {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
    out << print_schedule(faces);
}

}  // namespace scx
