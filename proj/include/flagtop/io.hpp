#pragma once

#include "flagtop/complex.hpp"

#include "json.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace flagtop {

/// Malformed facet input. `line()` is 1-based, or 0 when no line applies (JSON input).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Facet text format:
//   # optional comment lines
//   n d
//   v0 v1 ... (one facet per line, strictly ascending ids)
// Blank lines are ignored. {∅} is written as "0 -1" with no facet lines.

inline SimplicialComplex read_facets(std::istream& in)
{
    std::string raw;
    std::size_t lineno = 0;
    bool have_header = false;
    long long n = 0;
    long long d = 0;
    std::size_t header_line = 0;
    std::vector<Face> facets;
    std::vector<std::size_t> facet_lines;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#')
            continue;
        std::istringstream ls(raw);
        if (!have_header) {
            if (!(ls >> n >> d))
                throw ParseError(lineno, "expected header \"n d\"");
            std::string extra;
            if (ls >> extra)
                throw ParseError(lineno, "unexpected token '" + extra + "' after header");
            if (n < 0 || n > static_cast<long long>(kMaxVertices))
                throw ParseError(lineno, "vertex count must lie in 0..64");
            if (d < -1)
                throw ParseError(lineno, "dimension must be >= -1");
            have_header = true;
            header_line = lineno;
            continue;
        }
        std::vector<Vertex> vs;
        std::string tok;
        while (ls >> tok) {
            long long v = 0;
            std::size_t used = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw ParseError(lineno, "'" + tok + "' is not a vertex id");
            if (v < 0 || v >= n)
                throw ParseError(lineno, "vertex " + tok + " outside 0.." + std::to_string(n - 1));
            if (!vs.empty() && static_cast<Vertex>(v) <= vs.back())
                throw ParseError(lineno, "vertex ids must be strictly ascending");
            vs.push_back(static_cast<Vertex>(v));
        }
        facets.push_back(Face::from_vertices(vs));
        facet_lines.push_back(lineno);
    }
    if (!have_header)
        throw ParseError(lineno + 1, "missing header \"n d\"");
    if (facets.empty()) {
        if (n != 0 || d != -1)
            throw ParseError(lineno + 1, "no facets given");
        return SimplicialComplex::empty_face();
    }
    int max_dim = -1;
    for (Face f : facets)
        max_dim = std::max(max_dim, f.dim());
    if (max_dim != d)
        throw ParseError(header_line, "declared dimension " + std::to_string(d) +
                                          " but the facets have dimension " + std::to_string(max_dim));
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (i != j && facets[i].size() <= facets[j].size() && facets[i].is_subset_of(facets[j]))
                throw ParseError(facet_lines[i], "facet " + facets[i].to_string() +
                                                     " is contained in facet on line " +
                                                     std::to_string(facet_lines[j]) + " (not an antichain)");
    try {
        return {static_cast<std::size_t>(n), std::move(facets)};
    } catch (const Error& e) {
        throw ParseError(header_line, e.what());
    }
}

inline SimplicialComplex parse_facets(const std::string& text)
{
    std::istringstream in(text);
    return read_facets(in);
}

inline std::string format_facets(const SimplicialComplex& K)
{
    std::string out = std::to_string(K.n()) + " " + std::to_string(K.dim()) + "\n";
    if (K.dim() < 0)
        return out;
    for (Face f : K.facets()) {
        bool first = true;
        f.for_each_vertex([&](Vertex v) {
            if (!first)
                out += ' ';
            out += std::to_string(v);
            first = false;
        });
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json to_json(Face f)
{
    auto arr = nlohmann::ordered_json::array();
    f.for_each_vertex([&](Vertex v) { arr.push_back(v); });
    return arr;
}

inline nlohmann::ordered_json to_json(const SimplicialComplex& K)
{
    nlohmann::ordered_json j;
    j["n"] = K.n();
    auto facets = nlohmann::ordered_json::array();
    for (Face f : K.facets())
        facets.push_back(to_json(f));
    j["facets"] = std::move(facets);
    return j;
}

inline nlohmann::ordered_json to_json(const FVector& f) { return f.counts(); }

/// {"n": ..., "facets": [[...], ...]}
inline SimplicialComplex complex_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
        throw ParseError(0, "expected an object with keys \"n\" and \"facets\"");
    if (!j["n"].is_number_integer())
        throw ParseError(0, "\"n\" must be an integer");
    const auto n = j["n"].get<long long>();
    if (n < 0 || n > static_cast<long long>(kMaxVertices))
        throw ParseError(0, "vertex count must lie in 0..64");
    if (!j["facets"].is_array())
        throw ParseError(0, "\"facets\" must be an array");
    std::vector<Face> facets;
    std::size_t idx = 0;
    for (const auto& jf : j["facets"]) {
        if (!jf.is_array())
            throw ParseError(0, "facet " + std::to_string(idx) + " is not an array");
        std::vector<Vertex> vs;
        for (const auto& jv : jf) {
            if (!jv.is_number_integer() || jv.get<long long>() < 0 || jv.get<long long>() >= n)
                throw ParseError(0, "facet " + std::to_string(idx) + " has an invalid vertex id");
            const auto v = jv.get<Vertex>();
            if (!vs.empty() && v <= vs.back())
                throw ParseError(0, "facet " + std::to_string(idx) + " is not strictly ascending");
            vs.push_back(v);
        }
        facets.push_back(Face::from_vertices(vs));
        ++idx;
    }
    for (std::size_t a = 0; a < facets.size(); ++a)
        for (std::size_t b = 0; b < facets.size(); ++b)
            if (a != b && facets[a].size() <= facets[b].size() && facets[a].is_subset_of(facets[b]))
                throw ParseError(0, "facet " + std::to_string(a) + " is contained in facet " +
                                        std::to_string(b) + " (not an antichain)");
    try {
        return {static_cast<std::size_t>(n), std::move(facets)};
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

inline SimplicialComplex parse_complex_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return complex_from_json(j);
}

/// Accepts either format; JSON is recognised by a leading '{'.
inline SimplicialComplex parse_complex(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_complex_json(text);
    return parse_facets(text);
}

} // namespace flagtop
