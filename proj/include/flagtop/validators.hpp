#pragma once

#include "flagtop/complex.hpp"
#include "flagtop/io.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flagtop {

/// Evidence that a complex fails a class test.
struct Witness {
    std::vector<Face> faces;
    std::int64_t value = 0;
    std::string detail;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept { return holds; }

    static Verdict yes() { return {}; }
    static Verdict no(Witness w) { return {false, std::move(w)}; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Inclusion-minimal vertex sets that are not faces, by cardinality then lexicographically.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& K)
{
    const auto& all = K.all_faces();
    auto in_K = [&](Face s) {
        return std::binary_search(all.begin(), all.end(), s,
                                  [](Face a, Face b) { return a.mask() < b.mask(); });
    };
    std::vector<Face> out;
    // A minimal non-face M is σ ∪ {v} with σ = M minus its largest vertex, σ ∈ K.
    for (Face sigma : all) {
        const Vertex start = sigma.empty() ? 0 : sigma.back() + 1;
        for (Vertex v = start; v < K.n(); ++v) {
            const Face M = sigma.with(v);
            if (in_K(M))
                continue;
            bool minimal = true;
            M.for_each_vertex([&](Vertex u) { minimal = minimal && in_K(M.without(u)); });
            if (minimal)
                out.push_back(M);
        }
    }
    std::sort(out.begin(), out.end(), BySizeThenLex{});
    return out;
}

/// Flag iff every minimal non-face has two vertices; the witness is the first larger one.
inline Verdict is_flag(const SimplicialComplex& K)
{
    if (clique_complex(one_skeleton(K)) == K)
        return Verdict::yes();
    for (Face m : minimal_nonfaces(K))
        if (m.size() >= 3)
            return Verdict::no({{m}, m.size(), "minimal non-face of cardinality " + std::to_string(m.size())});
    return Verdict::no({{}, 0, "clique complex differs"}); // unreachable for valid complexes
}

inline Verdict is_pure(const SimplicialComplex& K)
{
    if (K.is_pure())
        return Verdict::yes();
    for (Face f : K.facets())
        if (f.dim() != K.dim())
            return Verdict::no({{f}, f.dim(), "facet of dimension " + std::to_string(f.dim())});
    return Verdict::yes();
}

inline Verdict is_connected_verdict(const SimplicialComplex& K)
{
    if (K.n() == 0)
        return Verdict::no({{Face{}}, 0, "no vertices"});
    const Graph g = one_skeleton(K);
    const int c = g.component_count();
    if (c == 1)
        return Verdict::yes();
    const Face first = g.component_of(0, g.all_vertices());
    return Verdict::no({{first}, c, std::to_string(c) + " connected components"});
}

/// Pure, and every ridge lies in exactly two facets.
inline Verdict is_weak_pseudomanifold(const SimplicialComplex& K)
{
    if (K.dim() < 0)
        return Verdict::no({{Face{}}, -1, "the complex {∅} has no ridges"});
    if (Verdict p = is_pure(K); !p)
        return p;
    std::vector<Face> ridges;
    ridges.reserve(K.facets().size() * static_cast<std::size_t>(K.dim() + 1));
    for (Face f : K.facets())
        f.for_each_vertex([&](Vertex v) { ridges.push_back(f.without(v)); });
    std::sort(ridges.begin(), ridges.end());
    for (std::size_t i = 0; i < ridges.size();) {
        std::size_t j = i;
        while (j < ridges.size() && ridges[j] == ridges[i])
            ++j;
        const auto count = static_cast<std::int64_t>(j - i);
        if (count != 2)
            return Verdict::no({{ridges[i]}, count,
                                "ridge lies in " + std::to_string(count) + " facet(s)"});
        i = j;
    }
    return Verdict::yes();
}

namespace detail {

/// Connectivity of lk σ, read off the facets that contain σ.
inline bool link_connected(const SimplicialComplex& K, Face sigma)
{
    std::vector<std::uint64_t> parts;
    for (Face f : K.facets())
        if (sigma.is_subset_of(f))
            parts.push_back((f - sigma).mask());
    if (parts.empty())
        return false;
    std::uint64_t comp = parts.front();
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto p : parts)
            if ((p & comp) && (p & ~comp)) {
                comp |= p;
                grew = true;
            }
    }
    return std::all_of(parts.begin(), parts.end(), [&](std::uint64_t p) { return (p & ~comp) == 0; }) &&
           comp != 0;
}

/// All faces in cardinality-then-lex order.
inline std::vector<Face> faces_by_size(const SimplicialComplex& K)
{
    std::vector<Face> out = K.all_faces();
    std::sort(out.begin(), out.end(), BySizeThenLex{});
    return out;
}

} // namespace detail

/// Connected weak pseudomanifold whose faces of codimension >= 2 (as faces) have connected links.
inline Verdict is_normal_pseudomanifold(const SimplicialComplex& K)
{
    if (Verdict w = is_weak_pseudomanifold(K); !w)
        return w;
    if (Verdict c = is_connected_verdict(K); !c) {
        c.witness->faces = {Face{}};
        c.witness->detail = "the complex itself (link of ∅) is disconnected";
        return c;
    }
    for (Face sigma : detail::faces_by_size(K)) {
        if (sigma.empty() || sigma.dim() > K.dim() - 2)
            continue;
        if (!detail::link_connected(K, sigma))
            return Verdict::no({{sigma}, sigma.dim(), "link of " + sigma.to_string() + " is disconnected"});
    }
    return Verdict::yes();
}

/// χ̃(lk σ) for every face σ, aligned with K.all_faces().
/// Uses χ̃(lk σ) = Σ_{τ ⊇ σ} (-1)^{|τ|-|σ|-1} over faces τ of K.
inline std::vector<std::int64_t> link_euler_chars(const SimplicialComplex& K)
{
    const auto& all = K.all_faces();
    std::vector<std::int64_t> chi(all.size(), 0);
    for (Face tau : all) {
        const int ts = tau.size();
        tau.for_each_subset([&](Face s) {
            const auto it = std::lower_bound(all.begin(), all.end(), s,
                                             [](Face a, Face b) { return a.mask() < b.mask(); });
            chi[static_cast<std::size_t>(it - all.begin())] += ((ts - s.size()) % 2 == 1) ? 1 : -1;
        });
    }
    return chi;
}

/// χ̃(lk σ) for one face, from the f-vector of the link.
inline std::int64_t link_euler_char(const SimplicialComplex& K, Face sigma)
{
    return reduced_euler_char(link(K, sigma).complex);
}

/// Pure and χ̃(lk σ) = (-1)^{dim lk σ} for every face σ, ∅ included.
inline Verdict is_eulerian(const SimplicialComplex& K)
{
    if (Verdict p = is_pure(K); !p)
        return p;
    const auto& all = K.all_faces();
    const auto chi = link_euler_chars(K);
    std::optional<Face> worst;
    std::int64_t worst_chi = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int link_dim = K.dim() - all[i].size();
        const std::int64_t want = (link_dim % 2 == 0) ? 1 : -1;
        if (chi[i] != want && (!worst || BySizeThenLex{}(all[i], *worst))) {
            worst = all[i];
            worst_chi = chi[i];
        }
    }
    if (!worst)
        return Verdict::yes();
    return Verdict::no({{*worst}, worst_chi,
                        "reduced Euler characteristic of the link of " + worst->to_string() + " is " +
                            std::to_string(worst_chi)});
}

namespace detail {
inline void require_dim(const SimplicialComplex& K, int d, const char* what)
{
    if (K.dim() != d)
        throw Error(std::string(what) + " requires a " + std::to_string(d) +
                    "-dimensional complex, got dimension " + std::to_string(K.dim()));
}

/// A 1-dimensional complex that is a single cycle.
inline bool is_single_cycle(const SimplicialComplex& C)
{
    if (C.dim() != 1 || !C.is_pure())
        return false;
    const Graph g = one_skeleton(C);
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2)
            return false;
    return g.component_count() == 1;
}
} // namespace detail

/// Connected 2-complex, every edge in two triangles, every vertex link a single cycle.
inline Verdict is_closed_surface(const SimplicialComplex& K)
{
    detail::require_dim(K, 2, "surface recognition");
    if (Verdict w = is_weak_pseudomanifold(K); !w)
        return w;
    if (Verdict c = is_connected_verdict(K); !c)
        return c;
    for (Vertex v = 0; v < K.n(); ++v) {
        const Subcomplex lk = link(K, Face{v});
        if (!detail::is_single_cycle(lk.complex))
            return Verdict::no({{Face{v}}, static_cast<std::int64_t>(lk.complex.n()),
                                "link of vertex " + std::to_string(v) + " is not a single cycle"});
    }
    return Verdict::yes();
}

inline Verdict is_two_sphere(const SimplicialComplex& K)
{
    if (Verdict s = is_closed_surface(K); !s)
        return s;
    const std::int64_t chi = reduced_euler_char(K);
    if (chi != 1)
        return Verdict::no({{Face{}}, chi, "closed surface with reduced Euler characteristic " +
                                               std::to_string(chi)});
    return Verdict::yes();
}

/// Flag, weak pseudomanifold, connected, and every vertex link a 2-sphere.
inline Verdict is_flag_3_manifold(const SimplicialComplex& K)
{
    detail::require_dim(K, 3, "3-manifold recognition");
    if (Verdict f = is_flag(K); !f)
        return f;
    if (Verdict w = is_weak_pseudomanifold(K); !w)
        return w;
    if (Verdict c = is_connected_verdict(K); !c)
        return c;
    for (Vertex v = 0; v < K.n(); ++v) {
        const Subcomplex lk = link(K, Face{v});
        const Verdict s = is_two_sphere(lk.complex);
        if (!s)
            return Verdict::no({{Face{v}}, s.witness ? s.witness->value : 0,
                                "link of vertex " + std::to_string(v) + " is not a 2-sphere" +
                                    (s.witness ? " (" + s.witness->detail + ")" : "")});
    }
    return Verdict::yes();
}

/// Boundary of a cross-polytope: every vertex misses exactly one other vertex, and flag.
/// On success the witness-free verdict's cross-polytope dimension is n/2.
inline Verdict is_octahedral_sphere(const SimplicialComplex& K)
{
    if (K.n() < 2 || K.n() % 2 != 0)
        return Verdict::no({{}, static_cast<std::int64_t>(K.n()), "odd or too small vertex count"});
    const Graph g = one_skeleton(K);
    for (Vertex v = 0; v < K.n(); ++v) {
        const int missing = static_cast<int>(K.n()) - 1 - g.degree(v);
        if (missing != 1)
            return Verdict::no({{Face{v}}, missing,
                                "vertex " + std::to_string(v) + " has " + std::to_string(missing) +
                                    " non-neighbours"});
    }
    return is_flag(K);
}

/// Verdicts for every class, in a fixed order.
class ClassificationReport {
public:
    static constexpr std::array<std::string_view, 10> kNames = {
        "flag",     "pure",           "weak_pm",    "normal_pm",       "eulerian",
        "connected", "closed_surface", "two_sphere", "flag_3_manifold", "octahedral_sphere"};

    const Verdict& operator[](std::string_view name) const { return verdicts_.at(index(name)); }
    Verdict& operator[](std::string_view name) { return verdicts_.at(index(name)); }

    bool holds(std::string_view name) const { return (*this)[name].holds; }

    std::size_t n = 0;
    int dim = -1;
    FVector f;

    static std::size_t index(std::string_view name)
    {
        for (std::size_t i = 0; i < kNames.size(); ++i)
            if (kNames[i] == name)
                return i;
        throw Error("unknown class '" + std::string(name) + "'");
    }

private:
    std::array<Verdict, kNames.size()> verdicts_{};
};

inline ClassificationReport classify(const SimplicialComplex& K)
{
    ClassificationReport r;
    r.n = K.n();
    r.dim = K.dim();
    r.f = f_vector(K);
    r["flag"] = is_flag(K);
    r["pure"] = is_pure(K);
    r["weak_pm"] = is_weak_pseudomanifold(K);
    r["normal_pm"] = is_normal_pseudomanifold(K);
    r["eulerian"] = is_eulerian(K);
    r["connected"] = is_connected_verdict(K);
    const auto wrong_dim = [&](int want) {
        return Verdict::no({{}, K.dim(), "dimension " + std::to_string(K.dim()) + ", not " + std::to_string(want)});
    };
    r["closed_surface"] = K.dim() == 2 ? is_closed_surface(K) : wrong_dim(2);
    r["two_sphere"] = K.dim() == 2 ? is_two_sphere(K) : wrong_dim(2);
    r["flag_3_manifold"] = K.dim() == 3 ? is_flag_3_manifold(K) : wrong_dim(3);
    r["octahedral_sphere"] = is_octahedral_sphere(K);
    return r;
}

inline nlohmann::ordered_json to_json(const Witness& w)
{
    nlohmann::ordered_json j;
    auto faces = nlohmann::ordered_json::array();
    for (Face f : w.faces)
        faces.push_back(to_json(f));
    j["faces"] = std::move(faces);
    j["value"] = w.value;
    j["detail"] = w.detail;
    return j;
}

inline constexpr std::string_view kClassificationSchema = "flagtop.classification/1";

inline nlohmann::ordered_json to_json(const ClassificationReport& r)
{
    nlohmann::ordered_json j;
    j["schema"] = kClassificationSchema;
    j["n"] = r.n;
    j["dim"] = r.dim;
    j["f_vector"] = to_json(r.f);
    nlohmann::ordered_json verdicts;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    for (auto name : ClassificationReport::kNames) {
        const Verdict& v = r[name];
        verdicts[std::string(name)] = v.holds;
        if (!v.holds && v.witness)
            witnesses[std::string(name)] = to_json(*v.witness);
    }
    j["verdicts"] = std::move(verdicts);
    j["witnesses"] = std::move(witnesses);
    return j;
}

} // namespace flagtop
