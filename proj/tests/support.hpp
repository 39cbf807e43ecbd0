#pragma once

// Test-only oracles and generators. The oracles work on plain std::set<std::vector<int>> face
// sets and share no code path with the bitset implementation they check.

#include "flagtop/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using VFace = std::vector<int>;
using FaceSet = std::set<VFace>;

inline std::vector<VFace> facets_of(const flagtop::SimplicialComplex& K)
{
    std::vector<VFace> out;
    for (auto f : K.facets()) {
        VFace v;
        for (auto x : f.vertices())
            v.push_back(static_cast<int>(x));
        out.push_back(v);
    }
    return out;
}

/// All subsets of all facets, generated by counting through index masks.
inline FaceSet all_faces(const std::vector<VFace>& facets)
{
    FaceSet out;
    for (const auto& f : facets) {
        const std::size_t k = f.size();
        for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
            VFace s;
            for (std::size_t i = 0; i < k; ++i)
                if (bits & (std::size_t{1} << i))
                    s.push_back(f[i]);
            out.insert(s);
        }
    }
    return out;
}

inline FaceSet all_faces(const flagtop::SimplicialComplex& K) { return all_faces(facets_of(K)); }

inline std::vector<VFace> faces_of_dim(const FaceSet& all, int i)
{
    std::vector<VFace> out;
    for (const auto& s : all)
        if (static_cast<int>(s.size()) == i + 1)
            out.push_back(s);
    return out;  // std::set order is lexicographic
}

/// (f_{-1}, f_0, ...) by counting.
inline std::vector<long long> f_vector(const FaceSet& all)
{
    std::size_t top = 0;
    for (const auto& s : all)
        top = std::max(top, s.size());
    std::vector<long long> f(top + 1, 0);
    for (const auto& s : all)
        ++f[s.size()];
    return f;
}

inline long long reduced_euler(const std::vector<long long>& f)
{
    long long chi = 0;
    for (std::size_t k = 0; k < f.size(); ++k)
        chi += (k % 2 == 0 ? -1 : 1) * f[k];
    return chi;
}

inline bool includes(const VFace& big, const VFace& small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// lk σ in the original vertex ids.
inline FaceSet link(const FaceSet& all, const VFace& sigma)
{
    FaceSet out;
    for (const auto& t : all)
        if (includes(t, sigma)) {
            VFace rest;
            std::set_difference(t.begin(), t.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
            out.insert(rest);
        }
    return out;
}

/// Faces of K contained in W (original ids).
inline FaceSet restriction(const FaceSet& all, const std::set<int>& W)
{
    FaceSet out;
    for (const auto& t : all)
        if (std::all_of(t.begin(), t.end(), [&](int v) { return W.count(v) > 0; }))
            out.insert(t);
    return out;
}

/// Face set of a complex reported on compacted ids, mapped back to parent ids.
inline FaceSet lift(const flagtop::Subcomplex& s)
{
    FaceSet out;
    for (const auto& f : all_faces(s.complex)) {
        VFace g;
        for (int v : f)
            g.push_back(static_cast<int>(s.to_parent.at(static_cast<std::size_t>(v))));
        std::sort(g.begin(), g.end());
        out.insert(g);
    }
    return out;
}

/// Number of vertices in the link: degree in the 1-skeleton.
inline std::map<int, int> degrees(const FaceSet& all)
{
    std::map<int, int> d;
    for (const auto& s : all)
        if (s.size() == 2) {
            ++d[s[0]];
            ++d[s[1]];
        }
    return d;
}

} // namespace oracle

namespace gen {

/// Random complex on 1..max_n vertices with facets of size 1..max_facet.
inline flagtop::SimplicialComplex random_complex(std::mt19937& rng, int max_n, int max_facet = 4)
{
    std::uniform_int_distribution<int> nd(1, max_n);
    const int n = nd(rng);
    std::uniform_int_distribution<int> kd(1, 2 * n);
    std::uniform_int_distribution<int> sd(1, std::min(n, max_facet));
    const int k = kd(rng);
    std::vector<flagtop::Face> gens;
    std::uint64_t covered = 0;
    std::vector<flagtop::Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0U);
    for (int i = 0; i < k; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const int s = sd(rng);
        std::uint64_t m = 0;
        for (int j = 0; j < s; ++j)
            m |= std::uint64_t{1} << perm[static_cast<std::size_t>(j)];
        gens.push_back(flagtop::Face::from_mask(m));
        covered |= m;
    }
    for (int v = 0; v < n; ++v)
        if (!((covered >> v) & 1U))
            gens.push_back(flagtop::Face{static_cast<flagtop::Vertex>(v)});
    return flagtop::SimplicialComplex::generated_by(static_cast<std::size_t>(n), gens);
}

inline flagtop::Graph random_graph(std::mt19937& rng, std::size_t n, double p)
{
    flagtop::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (flagtop::Vertex u = 0; u < n; ++u)
        for (flagtop::Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline std::vector<flagtop::Vertex> random_permutation(std::mt19937& rng, std::size_t n)
{
    std::vector<flagtop::Vertex> p(n);
    std::iota(p.begin(), p.end(), 0U);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace gen
