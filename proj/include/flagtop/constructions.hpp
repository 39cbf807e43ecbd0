#pragma once

#include "flagtop/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace flagtop {

// Vertex numbering: factors are laid out consecutively in the order they are listed, so the
// first circle uses 0..k1-1, the second k1..k1+k2-1, and so on.

/// The cycle 0-1-...-(k-1)-0. Lengths below 4 are not flag circles and are rejected.
inline SimplicialComplex cycle(int k)
{
    if (k < 4)
        throw Error("non-flag cycle: length " + std::to_string(k) + " < 4");
    if (k > static_cast<int>(kMaxVertices))
        throw Error("cycle length exceeds the 64-vertex limit");
    std::vector<Face> edges;
    for (int i = 0; i < k; ++i)
        edges.push_back(Face{static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k)});
    return {static_cast<std::size_t>(k), std::move(edges)};
}

/// Join of circles of the given lengths.
inline SimplicialComplex join_of_cycles(const std::vector<int>& lengths)
{
    if (lengths.empty())
        return SimplicialComplex::empty_face();
    SimplicialComplex K = cycle(lengths.front());
    for (std::size_t i = 1; i < lengths.size(); ++i)
        K = join(K, cycle(lengths[i]));
    return K;
}

/// m cycle lengths summing to n, each ⌊n/m⌋ or ⌈n/m⌉; the (n mod m) longer ones first.
inline std::vector<int> balanced_lengths(int m, int n)
{
    if (m < 1)
        throw Error("need at least one circle factor");
    if (n < 4 * m)
        throw Error("J_m(n) needs n >= 4m (m = " + std::to_string(m) + ", n = " + std::to_string(n) + ")");
    std::vector<int> lengths(static_cast<std::size_t>(m), n / m);
    for (int i = 0; i < n % m; ++i)
        ++lengths[static_cast<std::size_t>(i)];
    return lengths;
}

/// J_m(n): the join of m balanced circles on n vertices, a flag (2m-1)-sphere.
inline SimplicialComplex balanced_join(int m, int n) { return join_of_cycles(balanced_lengths(m, n)); }

/// J*_m(n) = S^0 * J_m(n-2). The suspension apexes are vertices 0 and 1.
inline SimplicialComplex suspended_join(int m, int n)
{
    if (n < 4 * m + 2)
        throw Error("J*_m(n) needs n >= 4m+2 (m = " + std::to_string(m) + ", n = " + std::to_string(n) + ")");
    return suspension(balanced_join(m, n - 2));
}

/// C*_d, the boundary of the d-dimensional cross-polytope; antipodes are 2i and 2i+1.
inline SimplicialComplex cross_polytope_boundary(int d)
{
    if (d < 1)
        throw Error("cross-polytope dimension must be >= 1");
    if (2 * d > static_cast<int>(kMaxVertices))
        throw Error("cross-polytope exceeds the 64-vertex limit");
    SimplicialComplex K = zero_sphere();
    for (int i = 1; i < d; ++i)
        K = join(K, zero_sphere());
    return K;
}

/// Parameters of one member of GJ(n): circle lengths a (summing to ⌊n/2⌋) and b (to ⌈n/2⌉).
struct GJSpec {
    std::vector<int> a;
    std::vector<int> b;

    int n() const
    {
        return std::accumulate(a.begin(), a.end(), 0) + std::accumulate(b.begin(), b.end(), 0);
    }

    friend bool operator==(const GJSpec&, const GJSpec&) = default;
};

inline std::string to_string(const GJSpec& s)
{
    auto list = [](const std::vector<int>& v) {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? "," : "") + std::to_string(v[i]);
        return out + ")";
    };
    return "a=" + list(s.a) + " b=" + list(s.b);
}

struct GJOptions {
    /// Skip the ⌊n/2⌋ / ⌈n/2⌉ sum check; parts must still be >= 4.
    bool allow_any_sums = false;
};

inline void validate(const GJSpec& spec, const GJOptions& opts = {})
{
    if (spec.a.empty() || spec.b.empty())
        throw Error("invalid partition: both sides need at least one circle");
    for (int part : spec.a)
        if (part < 4)
            throw Error("invalid partition: part " + std::to_string(part) + " < 4 in a");
    for (int part : spec.b)
        if (part < 4)
            throw Error("invalid partition: part " + std::to_string(part) + " < 4 in b");
    if (opts.allow_any_sums)
        return;
    const int n = spec.n();
    const int sum_a = std::accumulate(spec.a.begin(), spec.a.end(), 0);
    if (sum_a != n / 2)
        throw Error("invalid partition: a sums to " + std::to_string(sum_a) + ", expected floor(n/2) = " +
                    std::to_string(n / 2));
}

/// The union of C_{a_i} * C_{b_j} over all i, j: the a-circles first, then the b-circles.
inline SimplicialComplex gj(const GJSpec& spec, const GJOptions& opts = {})
{
    validate(spec, opts);
    const int n = spec.n();
    if (n > static_cast<int>(kMaxVertices))
        throw Error("GJ complex exceeds the 64-vertex limit");
    auto circle_edges = [](const std::vector<int>& lengths, int offset) {
        std::vector<Face> edges;
        for (int len : lengths) {
            for (int i = 0; i < len; ++i)
                edges.push_back(Face{static_cast<Vertex>(offset + i), static_cast<Vertex>(offset + (i + 1) % len)});
            offset += len;
        }
        return edges;
    };
    const int half = std::accumulate(spec.a.begin(), spec.a.end(), 0);
    const std::vector<Face> ea = circle_edges(spec.a, 0);
    const std::vector<Face> eb = circle_edges(spec.b, half);
    std::vector<Face> facets;
    facets.reserve(ea.size() * eb.size());
    for (Face x : ea)
        for (Face y : eb)
            facets.push_back(x | y);
    return {static_cast<std::size_t>(n), std::move(facets)};
}

/// Partitions of `total` into parts >= `min_part`, each listed in non-increasing order.
inline std::vector<std::vector<int>> partitions_with_min_part(int total, int min_part)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= min_part; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    if (total >= min_part)
        rec(rec, total, total);
    return out;
}

/// Every member of GJ(n) once: swapping a and b is identified when ⌊n/2⌋ = ⌈n/2⌉.
inline std::vector<GJSpec> gj_enumerate_specs(int n)
{
    if (n < 8)
        throw Error("GJ(n) needs n >= 8");
    const auto pa = partitions_with_min_part(n / 2, 4);
    const auto pb = partitions_with_min_part(n - n / 2, 4);
    std::vector<GJSpec> out;
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = (n % 2 == 0 ? i : 0); j < pb.size(); ++j)
            out.push_back({pa[i], pb[j]});
    return out;
}

/// (L1*L3) ∪ (L2*L3) ∪ (L1*L4) on disjoint circles laid out L1, L2, L3, L4.
/// A flag weak 3-pseudomanifold that is not normal.
inline SimplicialComplex remark_complex(int l1, int l2, int l3, int l4)
{
    for (int l : {l1, l2, l3, l4})
        if (l < 4)
            throw Error("circle length " + std::to_string(l) + " < 4");
    if (l1 + l2 + l3 + l4 > static_cast<int>(kMaxVertices))
        throw Error("complex exceeds the 64-vertex limit");
    auto edges_of = [](int len, int offset) {
        std::vector<Face> e;
        for (int i = 0; i < len; ++i)
            e.push_back(Face{static_cast<Vertex>(offset + i), static_cast<Vertex>(offset + (i + 1) % len)});
        return e;
    };
    const auto L1 = edges_of(l1, 0);
    const auto L2 = edges_of(l2, l1);
    const auto L3 = edges_of(l3, l1 + l2);
    const auto L4 = edges_of(l4, l1 + l2 + l3);
    std::vector<Face> facets;
    auto add = [&](const std::vector<Face>& X, const std::vector<Face>& Y) {
        for (Face x : X)
            for (Face y : Y)
                facets.push_back(x | y);
    };
    add(L1, L3);
    add(L2, L3);
    add(L1, L4);
    return {static_cast<std::size_t>(l1 + l2 + l3 + l4), std::move(facets)};
}

/// k x l grid torus with one diagonal per square; flag for k, l >= 4.
/// Vertex (i, j) has id i*l + j.
inline SimplicialComplex grid_torus(int k, int l)
{
    if (k < 3 || l < 3)
        throw Error("torus grid needs both sides >= 3");
    if (k * l > static_cast<int>(kMaxVertices))
        throw Error("torus exceeds the 64-vertex limit");
    auto id = [&](int i, int j) { return static_cast<Vertex>(((i % k + k) % k) * l + (j % l + l) % l); };
    std::vector<Face> tris;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
            tris.push_back(Face{id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            tris.push_back(Face{id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    return {static_cast<std::size_t>(k * l), std::move(tris)};
}

/// Order complex of the face poset of K (minus ∅): its barycentric subdivision.
/// Vertices are the non-empty faces of K in cardinality-then-lex order.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& K)
{
    std::vector<Face> nodes;
    for (Face f : K.all_faces())
        if (!f.empty())
            nodes.push_back(f);
    std::sort(nodes.begin(), nodes.end(), BySizeThenLex{});
    if (nodes.size() > kMaxVertices)
        throw Error("subdivision exceeds the 64-vertex limit");
    std::vector<Face> chains;
    std::vector<Vertex> chain;
    // Maximal chains: a facet, then repeatedly drop one vertex down to a single vertex.
    auto index_of = [&](Face f) {
        return static_cast<Vertex>(std::lower_bound(nodes.begin(), nodes.end(), f, BySizeThenLex{}) - nodes.begin());
    };
    auto rec = [&](auto&& self, Face current) -> void {
        chain.push_back(index_of(current));
        if (current.size() == 1) {
            chains.push_back(Face::from_vertices(chain));
        } else {
            current.for_each_vertex([&](Vertex v) { self(self, current.without(v)); });
        }
        chain.pop_back();
    };
    for (Face f : K.facets())
        if (!f.empty())
            rec(rec, f);
    if (chains.empty())
        return SimplicialComplex::empty_face();
    return {nodes.size(), std::move(chains)};
}

} // namespace flagtop
