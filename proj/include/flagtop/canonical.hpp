#pragma once

#include "flagtop/complex.hpp"
#include "flagtop/graph.hpp"
#include "flagtop/validators.hpp"

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

namespace flagtop {

inline constexpr std::size_t kMaxCanonicalVertices = 16;

/// Canonical form of a graph on at most 16 vertices: isomorphic graphs get identical forms.
///
/// `key` packs the upper triangle of the canonically relabelled adjacency matrix, pair (i, j)
/// with i < j at bit index j*(j-1)/2 + i.
struct CanonicalGraph {
    std::size_t n = 0;
    std::array<std::uint64_t, 2> key{};
    /// labeling[v] is the canonical position of vertex v.
    std::vector<Vertex> labeling;

    Graph graph() const
    {
        Graph g(n);
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                const std::size_t bit = j * (j - 1) / 2 + i;
                if ((key[bit / 64] >> (bit % 64)) & 1U)
                    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        return g;
    }

    friend bool operator==(const CanonicalGraph& a, const CanonicalGraph& b) noexcept
    {
        return a.n == b.n && a.key == b.key;
    }
    friend std::strong_ordering operator<=>(const CanonicalGraph& a, const CanonicalGraph& b) noexcept
    {
        if (auto c = a.n <=> b.n; c != 0)
            return c;
        return a.key <=> b.key;
    }
};

namespace detail {

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.n())
    {
        for (Vertex v = 0; v < n_; ++v)
            adj_[v] = static_cast<std::uint32_t>(g.row(v));
    }

    CanonicalGraph run()
    {
        Cells cells;
        if (n_ > 0)
            cells.push_back(static_cast<std::uint32_t>(Face::prefix(n_).mask()));
        search(cells, 0);
        CanonicalGraph out;
        out.n = n_;
        out.key = best_key_;
        out.labeling.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            out.labeling[best_lab_[i]] = static_cast<Vertex>(i);
        return out;
    }

private:
    using Cells = std::vector<std::uint32_t>;
    using Perm = std::array<std::uint8_t, kMaxCanonicalVertices>;

    // Split cells by neighbour counts into earlier cells until the partition is equitable.
    void refine(Cells& cells) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                const std::uint32_t splitter = cells[s];
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    const std::uint32_t cell = cells[c];
                    if (std::popcount(cell) == 1)
                        continue;
                    std::array<std::uint32_t, kMaxCanonicalVertices + 1> by_count{};
                    int lo = 99;
                    int hi = -1;
                    for (std::uint32_t m = cell; m != 0; m &= m - 1) {
                        const int v = std::countr_zero(m);
                        const int k = std::popcount(adj_[static_cast<std::size_t>(v)] & splitter);
                        by_count[static_cast<std::size_t>(k)] |= std::uint32_t{1} << v;
                        lo = std::min(lo, k);
                        hi = std::max(hi, k);
                    }
                    if (lo == hi)
                        continue;
                    Cells parts;
                    for (int k = lo; k <= hi; ++k)
                        if (by_count[static_cast<std::size_t>(k)])
                            parts.push_back(by_count[static_cast<std::size_t>(k)]);
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    std::array<std::uint64_t, 2> key_of(const Perm& lab) const
    {
        std::array<std::uint64_t, 2> key{};
        for (std::size_t j = 1; j < n_; ++j) {
            const std::uint32_t row = adj_[lab[j]];
            for (std::size_t i = 0; i < j; ++i)
                if ((row >> lab[i]) & 1U) {
                    const std::size_t bit = j * (j - 1) / 2 + i;
                    key[bit / 64] |= std::uint64_t{1} << (bit % 64);
                }
        }
        return key;
    }

    void leaf(const Cells& cells)
    {
        Perm lab{};
        for (std::size_t i = 0; i < cells.size(); ++i)
            lab[i] = static_cast<std::uint8_t>(std::countr_zero(cells[i]));
        const auto key = key_of(lab);
        if (!have_best_ || key > best_key_) {
            have_best_ = true;
            best_key_ = key;
            best_lab_ = lab;
        } else if (key == best_key_) {
            // best_lab_[i] -> lab[i] is an automorphism.
            Perm gamma{};
            for (std::size_t i = 0; i < n_; ++i)
                gamma[best_lab_[i]] = lab[i];
            autos_.push_back(gamma);
        }
    }

    std::uint8_t find(std::array<std::uint8_t, kMaxCanonicalVertices>& parent, std::uint8_t x) const
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    void search(Cells cells, std::uint32_t fixed)
    {
        refine(cells);
        std::size_t target = cells.size();
        int target_size = 99;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const int sz = std::popcount(cells[i]);
            if (sz > 1 && sz < target_size) {
                target = i;
                target_size = sz;
            }
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        const std::uint32_t cell = cells[target];
        std::uint32_t explored = 0;
        for (std::uint32_t m = cell; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            // Skip v if an automorphism fixing the individualised vertices maps an explored child to it.
            if (explored != 0) {
                std::array<std::uint8_t, kMaxCanonicalVertices> parent{};
                std::iota(parent.begin(), parent.end(), std::uint8_t{0});
                for (const Perm& g : autos_) {
                    bool fixes = true;
                    for (std::uint32_t f = fixed; f != 0 && fixes; f &= f - 1) {
                        const int p = std::countr_zero(f);
                        fixes = g[static_cast<std::size_t>(p)] == p;
                    }
                    if (!fixes)
                        continue;
                    for (std::size_t x = 0; x < n_; ++x) {
                        const auto a = find(parent, static_cast<std::uint8_t>(x));
                        const auto b = find(parent, g[x]);
                        if (a != b)
                            parent[a] = b;
                    }
                }
                bool redundant = false;
                for (std::uint32_t e = explored; e != 0 && !redundant; e &= e - 1)
                    redundant = find(parent, static_cast<std::uint8_t>(std::countr_zero(e))) ==
                                find(parent, static_cast<std::uint8_t>(v));
                if (redundant)
                    continue;
            }
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == target) {
                    child.push_back(std::uint32_t{1} << v);
                    child.push_back(cell & ~(std::uint32_t{1} << v));
                } else {
                    child.push_back(cells[i]);
                }
            }
            search(std::move(child), fixed | (std::uint32_t{1} << v));
            explored |= std::uint32_t{1} << v;
        }
    }

    std::size_t n_;
    std::array<std::uint32_t, kMaxCanonicalVertices> adj_{};
    bool have_best_ = false;
    std::array<std::uint64_t, 2> best_key_{};
    Perm best_lab_{};
    std::vector<Perm> autos_;
};

} // namespace detail

/// Canonical labelling by equitable refinement and backtracking, pruned with the automorphisms
/// found along the way.
inline CanonicalGraph canonical_form(const Graph& g)
{
    if (g.n() > kMaxCanonicalVertices)
        throw Error("canonical_form supports at most 16 vertices, got " + std::to_string(g.n()));
    return detail::Canonizer(g).run();
}

/// Isomorphism of flag complexes, decided on their 1-skeletons.
inline bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (!is_flag(a) || !is_flag(b))
        throw Error("are_isomorphic only compares flag complexes");
    if (a.n() != b.n())
        return false;
    return canonical_form(one_skeleton(a)) == canonical_form(one_skeleton(b));
}

} // namespace flagtop
