#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tritail/errors.hpp"

namespace tritail {

using Vertex = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

// Triple with a < b < c.
struct Triangle {
    Vertex a, b, c;
    friend bool operator==(const Triangle&, const Triangle&) = default;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

using TriangleSet = std::vector<Triangle>;

// Immutable simple undirected graph in CSR form with sorted neighbor lists.
// Vertices are dense 0-based indices. Safe to read concurrently.
class Graph {
public:
    Graph() = default;

    // Normalizes, deduplicates, and validates the edge list.
    // Throws InputError on self-loops or endpoints outside [0, n).
    static Graph build(Vertex n, std::span<const VertexPair> edges);

    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<VertexPair> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Vertex n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adj_;
    std::size_t edge_count_ = 0;
};

// All triangles, each exactly once as an increasing triple, sorted.
TriangleSet enumerate_triangles(const Graph& g);

// Number of triangles only; avoids materializing the list.
std::uint64_t count_triangles(const Graph& g);

// Triangles with all three vertices inside w. Throws InputError on
// out-of-range vertices; duplicates in w are ignored.
std::uint64_t triangle_count_within(const Graph& g, std::span<const Vertex> w);

// Maximal connected vertex sets, each ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// BFS tree of the subgraph induced by one connected vertex set, rooted at its
// smallest vertex with neighbors explored in ascending order, so the result
// is a pure function of the graph. parent/depth use kNoVertex / -1 sentinels
// for vertices outside the component.
struct SpanningTree {
    Vertex root = kNoVertex;
    std::vector<Vertex> parent;       // parent[root] == root
    std::vector<std::int64_t> depth;  // -1 outside the component

    bool contains(Vertex v) const { return depth[v] >= 0; }
    bool is_tree_edge(Vertex u, Vertex v) const {
        return (contains(u) && parent[u] == v) || (contains(v) && parent[v] == u);
    }
    std::size_t size() const;  // vertices in the component
};

// Throws PreconditionError if `component` is empty or not connected in g.
SpanningTree spanning_tree(const Graph& g, std::span<const Vertex> component);

// Subgraph on a re-indexed vertex set; original_of maps new index -> old.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> original_of;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> w);

}  // namespace tritail
