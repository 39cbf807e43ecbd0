#pragma once

#include "flagtop/face.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace flagtop {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, 0)
    {
        if (n > kMaxVertices)
            throw Error("graphs are limited to 64 vertices, got " + std::to_string(n));
    }

    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    std::size_t n() const noexcept { return adj_.size(); }

    void add_edge(Vertex u, Vertex v)
    {
        check(u);
        check(v);
        if (u == v)
            throw Error("loops are not allowed (vertex " + std::to_string(u) + ")");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    void remove_edge(Vertex u, Vertex v)
    {
        check(u);
        check(v);
        adj_[u] &= ~(std::uint64_t{1} << v);
        adj_[v] &= ~(std::uint64_t{1} << u);
    }

    bool has_edge(Vertex u, Vertex v) const noexcept
    {
        return u < adj_.size() && ((adj_[u] >> v) & 1U);
    }

    Face neighbors(Vertex v) const { return Face::from_mask(adj_.at(v)); }
    int degree(Vertex v) const { return std::popcount(adj_.at(v)); }
    std::uint64_t row(Vertex v) const noexcept { return adj_[v]; }

    std::size_t edge_count() const noexcept
    {
        std::size_t twice = 0;
        for (auto r : adj_)
            twice += static_cast<std::size_t>(std::popcount(r));
        return twice / 2;
    }

    int max_degree() const noexcept
    {
        int d = 0;
        for (auto r : adj_)
            d = std::max(d, std::popcount(r));
        return d;
    }

    Face all_vertices() const noexcept { return Face::prefix(n()); }

    Graph complement() const
    {
        Graph g(n());
        const std::uint64_t all = Face::prefix(n()).mask();
        for (Vertex v = 0; v < n(); ++v)
            g.adj_[v] = all & ~adj_[v] & ~(std::uint64_t{1} << v);
        return g;
    }

    /// Graph on the relabelled vertices: vertex v becomes perm[v].
    Graph relabeled(const std::vector<Vertex>& perm) const
    {
        Graph g(n());
        for (Vertex u = 0; u < n(); ++u)
            for (std::uint64_t m = adj_[u]; m != 0; m &= m - 1) {
                const auto v = static_cast<Vertex>(std::countr_zero(m));
                g.adj_[perm[u]] |= std::uint64_t{1} << perm[v];
            }
        return g;
    }

    /// Vertex set of the connected component containing `start`.
    Face component_of(Vertex start, Face within) const
    {
        std::uint64_t seen = std::uint64_t{1} << start;
        std::uint64_t frontier = seen;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m != 0; m &= m - 1)
                next |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
            next &= within.mask() & ~seen;
            seen |= next;
            frontier = next;
        }
        return Face::from_mask(seen);
    }

    /// Number of connected components of the induced subgraph on `within`.
    int component_count(Face within) const
    {
        int count = 0;
        Face rest = within;
        while (!rest.empty()) {
            rest = rest - component_of(rest.front(), within);
            ++count;
        }
        return count;
    }

    int component_count() const { return component_count(all_vertices()); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check(Vertex v) const
    {
        if (v >= adj_.size())
            throw Error("vertex " + std::to_string(v) + " out of range for graph on " +
                        std::to_string(adj_.size()) + " vertices");
    }

    std::vector<std::uint64_t> adj_;
};

} // namespace flagtop
