#pragma once

#include "flagtop/bounds.hpp"
#include "flagtop/canonical.hpp"
#include "flagtop/complex.hpp"
#include "flagtop/constructions.hpp"
#include "flagtop/validators.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace flagtop {

enum class ComplexClass { flag_normal_3pm, flag_eulerian_3, flag_3_manifold };

inline std::string_view to_string(ComplexClass c)
{
    switch (c) {
    case ComplexClass::flag_normal_3pm:
        return "flag_normal_3pm";
    case ComplexClass::flag_eulerian_3:
        return "flag_eulerian_3";
    case ComplexClass::flag_3_manifold:
        return "flag_3_manifold";
    }
    return "?";
}

inline ComplexClass parse_complex_class(std::string_view s)
{
    for (auto c : {ComplexClass::flag_normal_3pm, ComplexClass::flag_eulerian_3, ComplexClass::flag_3_manifold})
        if (to_string(c) == s)
            return c;
    throw Error("unknown class '" + std::string(s) + "'");
}

/// Does the (3-dimensional, flag) clique complex K belong to the class?
/// Checks run cheapest first and stop at the first failure.
inline bool in_class(const SimplicialComplex& K, ComplexClass c)
{
    if (K.dim() != 3 || !K.is_pure())
        return false;
    if (!is_weak_pseudomanifold(K))
        return false;
    switch (c) {
    case ComplexClass::flag_normal_3pm:
        return is_normal_pseudomanifold(K).holds;
    case ComplexClass::flag_eulerian_3:
        return is_eulerian(K).holds;
    case ComplexClass::flag_3_manifold:
        return is_flag_3_manifold(K).holds;
    }
    return false;
}

/// Worker count: explicit value, else FLAGTOP_THREADS, else the hardware concurrency.
inline unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("FLAGTOP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace detail {

/// Runs fn(i, out_i) for i in [0, count) on `threads` workers; returns the per-item outputs in order.
template <class Out, class Fn>
std::vector<Out> parallel_map(std::size_t count, unsigned threads, Fn fn)
{
    std::vector<Out> out(count);
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads)
                out[i] = fn(i);
        });
    for (auto& th : pool)
        th.join();
    return out;
}

} // namespace detail

/// All graphs on n vertices with maximum degree <= max_degree, one per isomorphism class, in
/// canonical-key order. Grown one edge at a time; duplicates are rejected by canonical form.
inline std::vector<CanonicalGraph> bounded_degree_graphs(std::size_t n, int max_degree, unsigned threads = 0)
{
    threads = resolve_threads(threads);
    std::vector<CanonicalGraph> all;
    std::vector<CanonicalGraph> level{canonical_form(Graph(n))};
    while (!level.empty()) {
        all.insert(all.end(), level.begin(), level.end());
        auto grown = detail::parallel_map<std::vector<CanonicalGraph>>(
            level.size(), threads, [&](std::size_t i) {
                const Graph g = level[i].graph();
                std::vector<CanonicalGraph> next;
                for (Vertex u = 0; u < n; ++u) {
                    if (g.degree(u) >= max_degree)
                        continue;
                    for (Vertex v = u + 1; v < n; ++v) {
                        if (g.has_edge(u, v) || g.degree(v) >= max_degree)
                            continue;
                        Graph h = g;
                        h.add_edge(u, v);
                        next.push_back(canonical_form(h));
                    }
                }
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                return next;
            });
        level.clear();
        for (auto& part : grown)
            level.insert(level.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

struct EnumerationOptions {
    /// Keep only complexes with this many edges.
    std::optional<std::int64_t> f1;
    unsigned threads = 0;
};

struct EnumerationResult {
    int n = 0;
    ComplexClass cls = ComplexClass::flag_normal_3pm;
    /// One clique complex per isomorphism class, ordered by the canonical form of the complement graph.
    std::vector<SimplicialComplex> representatives;
    std::vector<FVector> f_vectors;
    std::size_t candidates = 0;
    double seconds = 0.0;

    std::size_t count() const noexcept { return representatives.size(); }
};

/// Every flag complex on n vertices (8 <= n <= 11) in the class, up to isomorphism.
///
/// Vertex links in all three classes are flag 2-dimensional Eulerian complexes. Such a link is a
/// weak 2-pseudomanifold whose vertex links are unions of circles of length >= 4, and a vertex u
/// of it, a 4+ cycle around u, and one more vertex beyond an edge of that cycle give >= 6
/// vertices. So every vertex has degree >= 6 and the complement graph has maximum degree <= n - 7.
inline EnumerationResult enumerate_class(int n, ComplexClass cls, const EnumerationOptions& opts = {})
{
    if (n < 8 || n > 11)
        throw Error("enumerate_class supports 8 <= n <= 11, got " + std::to_string(n));
    const auto start = std::chrono::steady_clock::now();
    const unsigned threads = resolve_threads(opts.threads);
    const auto complements = bounded_degree_graphs(static_cast<std::size_t>(n), n - 7, threads);
    auto hits = detail::parallel_map<std::optional<SimplicialComplex>>(
        complements.size(), threads, [&](std::size_t i) -> std::optional<SimplicialComplex> {
            const Graph g = complements[i].graph().complement();
            if (opts.f1 && static_cast<std::int64_t>(g.edge_count()) != *opts.f1)
                return std::nullopt;
            SimplicialComplex K = clique_complex(g);
            if (!in_class(K, cls))
                return std::nullopt;
            return K;
        });
    EnumerationResult r;
    r.n = n;
    r.cls = cls;
    r.candidates = complements.size();
    for (auto& h : hits)
        if (h) {
            r.f_vectors.push_back(f_vector(*h));
            r.representatives.push_back(std::move(*h));
        }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct MaximizerResult {
    EnumerationResult result;
    std::vector<GJSpec> specs;
    /// The maximizers coincide with {gj(spec)} up to isomorphism.
    bool matches_gj = false;
};

/// Members of the class with f_1 = f_1(J_2(n)), compared against GJ(n).
inline MaximizerResult maximizers(int n, ComplexClass cls, unsigned threads = 0)
{
    MaximizerResult m;
    m.result = enumerate_class(n, cls, {f1_J(2, n), threads});
    m.specs = gj_enumerate_specs(n);
    std::vector<CanonicalGraph> found;
    for (const auto& K : m.result.representatives)
        found.push_back(canonical_form(one_skeleton(K)));
    std::vector<CanonicalGraph> expected;
    for (const auto& s : m.specs)
        expected.push_back(canonical_form(one_skeleton(gj(s))));
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    m.matches_gj = found == expected;
    return m;
}

inline constexpr std::string_view kEnumerationSchema = "flagtop.enumeration/1";

/// Summary without wall time, so that repeated runs serialise identically.
inline nlohmann::ordered_json to_json(const EnumerationResult& r)
{
    nlohmann::ordered_json j;
    j["schema"] = kEnumerationSchema;
    j["n"] = r.n;
    j["class"] = to_string(r.cls);
    j["candidates"] = r.candidates;
    j["count"] = r.count();
    auto reps = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.count(); ++i) {
        nlohmann::ordered_json e;
        e["f_vector"] = to_json(r.f_vectors[i]);
        e["complex"] = to_json(r.representatives[i]);
        reps.push_back(std::move(e));
    }
    j["representatives"] = std::move(reps);
    return j;
}

} // namespace flagtop
