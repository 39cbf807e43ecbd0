#pragma once

#include "flagtop/face.hpp"
#include "flagtop/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace flagtop {

/// Face counts (f_{-1}, f_0, ..., f_{d-1}) of a complex.
class FVector {
public:
    FVector() : counts_{1} {}
    explicit FVector(std::vector<std::int64_t> counts) : counts_(std::move(counts))
    {
        if (counts_.empty() || counts_.front() != 1)
            throw Error("an f-vector starts with f_{-1} = 1");
    }

    /// Dimension of the complex the vector belongs to; -1 for {∅}.
    int dim() const noexcept { return static_cast<int>(counts_.size()) - 2; }

    /// f_i for i >= -1; zero above the dimension.
    std::int64_t operator[](int i) const
    {
        const auto idx = static_cast<std::size_t>(i + 1);
        return idx < counts_.size() ? counts_[idx] : 0;
    }

    /// Index 0 holds f_{-1}.
    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

    /// -1 + f_0 - f_1 + f_2 - ...
    std::int64_t reduced_euler_char() const noexcept
    {
        std::int64_t chi = 0;
        for (std::size_t k = 0; k < counts_.size(); ++k)
            chi += (k % 2 == 0 ? -1 : 1) * counts_[k];
        return chi;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t k = 0; k < counts_.size(); ++k) {
            if (k)
                s += ',';
            s += std::to_string(counts_[k]);
        }
        return s + ")";
    }

    friend bool operator==(const FVector&, const FVector&) = default;

private:
    std::vector<std::int64_t> counts_;
};

namespace detail {
struct FaceCache {
    std::once_flag once;
    std::vector<Face> by_mask;
};
} // namespace detail

/// A finite simplicial complex on vertices 0..n-1, stored by its facets.
///
/// Facets form an antichain, every vertex appears in some facet, and the facet list is kept
/// in lexicographic order. The void complex is not representable; {∅} is (n = 0).
/// Values are immutable and may be shared between threads.
class SimplicialComplex {
public:
    SimplicialComplex(std::size_t n, std::vector<Face> facets) : n_(n), facets_(std::move(facets))
    {
        if (n_ > kMaxVertices)
            throw Error("complexes are limited to 64 vertices, got " + std::to_string(n_));
        if (facets_.empty())
            throw Error("the void complex (no faces at all) is not supported");
        std::sort(facets_.begin(), facets_.end());
        const std::uint64_t all = Face::prefix(n_).mask();
        std::uint64_t seen = 0;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (facets_[i].mask() & ~all)
                throw Error("facet " + facets_[i].to_string() + " uses a vertex id >= n = " +
                            std::to_string(n_));
            if (i > 0 && facets_[i] == facets_[i - 1])
                throw Error("duplicate facet " + facets_[i].to_string());
            seen |= facets_[i].mask();
        }
        if (seen != all)
            throw Error("vertex " + std::to_string(std::countr_zero(all & ~seen)) +
                        " does not lie in any facet");
        dim_ = -1;
        for (Face f : facets_)
            dim_ = std::max(dim_, f.dim());
        pure_ = std::all_of(facets_.begin(), facets_.end(), [this](Face f) { return f.dim() == dim_; });
        // Distinct sets of equal size never contain one another.
        if (!pure_)
            for (Face small : facets_)
                for (Face big : facets_)
                    if (small.size() < big.size() && small.is_subset_of(big))
                        throw Error("facets are not an antichain: " + small.to_string() +
                                    " is contained in " + big.to_string());
    }

    /// Complex generated by arbitrary faces; non-maximal generators are dropped.
    static SimplicialComplex generated_by(std::size_t n, std::vector<Face> generators)
    {
        std::sort(generators.begin(), generators.end(),
                  [](Face a, Face b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        std::vector<Face> maximal;
        for (Face g : generators) {
            const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                             [g](Face m) { return g.is_subset_of(m); });
            if (!covered)
                maximal.push_back(g);
        }
        return {n, std::move(maximal)};
    }

    /// The complex {∅}.
    static SimplicialComplex empty_face() { return {0, {Face{}}}; }

    std::size_t n() const noexcept { return n_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    int dim() const noexcept { return dim_; }
    bool is_pure() const noexcept { return pure_; }
    Face vertex_set() const noexcept { return Face::prefix(n_); }

    bool contains(Face sigma) const noexcept
    {
        return std::any_of(facets_.begin(), facets_.end(),
                           [sigma](Face f) { return sigma.is_subset_of(f); });
    }
    bool is_facet(Face sigma) const noexcept
    {
        return std::binary_search(facets_.begin(), facets_.end(), sigma);
    }

    /// Every face including ∅, ordered by raw mask. Computed once, then shared by copies.
    const std::vector<Face>& all_faces() const
    {
        std::call_once(cache_->once, [this] {
            std::vector<Face> out;
            for (Face f : facets_)
                f.for_each_subset([&](Face s) { out.push_back(s); });
            std::sort(out.begin(), out.end(),
                      [](Face a, Face b) { return a.mask() < b.mask(); });
            out.erase(std::unique(out.begin(), out.end()), out.end());
            cache_->by_mask = std::move(out);
        });
        return cache_->by_mask;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) noexcept
    {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Face> facets_;
    int dim_ = -1;
    bool pure_ = true;
    std::shared_ptr<detail::FaceCache> cache_ = std::make_shared<detail::FaceCache>();
};

/// A complex on compacted ids together with the map back to the ids of its parent.
struct Subcomplex {
    SimplicialComplex complex;
    std::vector<Vertex> to_parent;

    Face parent_face(Face local) const
    {
        std::uint64_t m = 0;
        local.for_each_vertex([&](Vertex v) { m |= std::uint64_t{1} << to_parent.at(v); });
        return Face::from_mask(m);
    }
    Face parent_vertices() const
    {
        return parent_face(Face::prefix(to_parent.size()));
    }
};

namespace detail {

/// Re-index `generators` (parent ids) onto the compacted vertex set they span.
inline Subcomplex compact(const std::vector<Face>& generators)
{
    std::uint64_t used = 0;
    for (Face f : generators)
        used |= f.mask();
    std::vector<Vertex> to_parent = Face::from_mask(used).vertices();
    std::vector<int> to_local(kMaxVertices, -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        to_local[to_parent[i]] = static_cast<int>(i);
    std::vector<Face> local;
    local.reserve(generators.size());
    for (Face f : generators) {
        std::uint64_t m = 0;
        f.for_each_vertex([&](Vertex v) { m |= std::uint64_t{1} << to_local[v]; });
        local.push_back(Face::from_mask(m));
    }
    return {SimplicialComplex::generated_by(to_parent.size(), std::move(local)), std::move(to_parent)};
}

template <class Fn>
void for_each_k_subset(Face facet, int k, Fn&& fn)
{
    const std::vector<Vertex> vs = facet.vertices();
    const int size = static_cast<int>(vs.size());
    if (k < 0 || k > size)
        return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t m = 0;
        for (int i : idx)
            m |= std::uint64_t{1} << vs[static_cast<std::size_t>(i)];
        fn(Face::from_mask(m));
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == size - k + pos)
            --pos;
        if (pos < 0)
            return;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace detail

/// All i-dimensional faces in lexicographic order; empty when i is out of range.
inline std::vector<Face> faces(const SimplicialComplex& K, int i)
{
    std::vector<Face> out;
    if (i < -1 || i > K.dim())
        return out;
    for (Face f : K.facets())
        detail::for_each_k_subset(f, i + 1, [&](Face s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline FVector f_vector(const SimplicialComplex& K)
{
    std::vector<std::int64_t> counts(static_cast<std::size_t>(K.dim() + 2), 0);
    for (Face f : K.all_faces())
        ++counts[static_cast<std::size_t>(f.size())];
    return FVector(std::move(counts));
}

inline std::int64_t reduced_euler_char(const SimplicialComplex& K)
{
    return f_vector(K).reduced_euler_char();
}

/// lk σ = {τ - σ : σ ⊆ τ ∈ K}, on compacted ids.
inline Subcomplex link(const SimplicialComplex& K, Face sigma)
{
    std::vector<Face> gens;
    for (Face f : K.facets())
        if (sigma.is_subset_of(f))
            gens.push_back(f - sigma);
    if (gens.empty())
        throw Error("not a face: " + sigma.to_string());
    return detail::compact(gens);
}

/// Vertex set V(lk σ) in the ids of K, without building the link.
inline Face link_vertices(const SimplicialComplex& K, Face sigma)
{
    std::uint64_t m = 0;
    bool found = false;
    for (Face f : K.facets())
        if (sigma.is_subset_of(f)) {
            m |= f.mask();
            found = true;
        }
    if (!found)
        throw Error("not a face: " + sigma.to_string());
    return Face::from_mask(m) - sigma;
}

/// K[W] = {σ ∈ K : σ ⊆ W}, on compacted ids (W in ascending order).
inline Subcomplex restriction(const SimplicialComplex& K, Face W)
{
    if (!W.is_subset_of(K.vertex_set()))
        throw Error("restriction set " + W.to_string() + " is not a subset of the vertex set");
    std::vector<Face> gens;
    gens.reserve(K.facets().size());
    for (Face f : K.facets())
        gens.push_back(f & W);
    return detail::compact(gens);
}

/// K \ W = {σ ∈ K : σ ∩ W = ∅}.
inline Subcomplex deletion(const SimplicialComplex& K, Face W)
{
    if (!W.is_subset_of(K.vertex_set()))
        throw Error("deletion set " + W.to_string() + " is not a subset of the vertex set");
    return restriction(K, K.vertex_set() - W);
}

/// K * L, with the vertices of L shifted by n(K).
inline SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L)
{
    if (K.n() + L.n() > kMaxVertices)
        throw Error("join would exceed the 64-vertex limit");
    const auto shift = static_cast<unsigned>(K.n());
    std::vector<Face> facets;
    facets.reserve(K.facets().size() * L.facets().size());
    for (Face a : K.facets())
        for (Face b : L.facets())
            facets.push_back(a | Face::from_mask(shift == 64 ? 0 : b.mask() << shift));
    return {K.n() + L.n(), std::move(facets)};
}

/// The two-point complex S^0.
inline SimplicialComplex zero_sphere() { return {2, {Face{0}, Face{1}}}; }

/// S^0 * K: the two apexes are vertices 0 and 1.
inline SimplicialComplex suspension(const SimplicialComplex& K) { return join(zero_sphere(), K); }

/// K ⊔ L, with the vertices of L shifted by n(K).
inline SimplicialComplex disjoint_union(const SimplicialComplex& K, const SimplicialComplex& L)
{
    if (K.n() + L.n() > kMaxVertices)
        throw Error("union would exceed the 64-vertex limit");
    if (L.n() == 0)
        return K;
    if (K.n() == 0)
        return L;
    std::vector<Face> facets = K.facets();
    for (Face b : L.facets())
        facets.push_back(Face::from_mask(b.mask() << K.n()));
    return {K.n() + L.n(), std::move(facets)};
}

/// The complex obtained by renaming vertex v to perm[v].
inline SimplicialComplex relabeled(const SimplicialComplex& K, const std::vector<Vertex>& perm)
{
    if (perm.size() != K.n())
        throw Error("relabelling has the wrong length");
    std::vector<Face> facets;
    facets.reserve(K.facets().size());
    for (Face f : K.facets()) {
        std::uint64_t m = 0;
        f.for_each_vertex([&](Vertex v) { m |= std::uint64_t{1} << perm[v]; });
        facets.push_back(Face::from_mask(m));
    }
    return {K.n(), std::move(facets)};
}

inline Graph one_skeleton(const SimplicialComplex& K)
{
    Graph g(K.n());
    for (Face f : K.facets())
        f.for_each_vertex([&](Vertex u) {
            (f.without(u)).for_each_vertex([&](Vertex v) {
                if (u < v)
                    g.add_edge(u, v);
            });
        });
    return g;
}

namespace detail {
inline void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          std::vector<Face>& out)
{
    if (p == 0 && x == 0) {
        out.push_back(Face::from_mask(r));
        return;
    }
    // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
    int best = -1;
    Vertex pivot = 0;
    for (std::uint64_t m = p | x; m != 0; m &= m - 1) {
        const auto u = static_cast<Vertex>(std::countr_zero(m));
        const int c = std::popcount(p & g.row(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (std::uint64_t cand = p & ~g.row(pivot); cand != 0; cand &= cand - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(cand));
        const std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(g, r | bit, p & g.row(v), x & g.row(v), out);
        p &= ~bit;
        x |= bit;
    }
}
} // namespace detail

/// Flag complex whose faces are the cliques of G; facets are the maximal cliques.
inline SimplicialComplex clique_complex(const Graph& G)
{
    std::vector<Face> cliques;
    detail::bron_kerbosch(G, 0, G.all_vertices().mask(), 0, cliques);
    return {G.n(), std::move(cliques)};
}

inline bool is_connected(const SimplicialComplex& K)
{
    if (K.n() == 0)
        return false;
    return one_skeleton(K).component_count() == 1;
}

} // namespace flagtop
