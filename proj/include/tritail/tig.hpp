#pragma once

#include <cstdint>
#include <optional>

#include "tritail/graph.hpp"

namespace tritail {

// One connected component of the triangle-union subgraph. Every edge lies in
// at least one triangle of the component. Vertex labels are those of the
// graph the component was extracted from; `local` is the same component
// re-indexed to [0, |vertices|) via original_of.
struct TisgComponent {
    std::vector<Vertex> vertices;   // ascending original labels
    std::vector<VertexPair> edges;  // original labels, u < v, sorted
    Graph local;
    std::vector<Vertex> original_of;
    std::uint64_t triangle_count = 0;
    std::int64_t excess = 0;  // |E| - |V|
};

// Per-component triangle counts, non-decreasing; total is their sum.
struct TisgProfile {
    std::vector<std::uint64_t> sizes;
    std::uint64_t total = 0;
};

// Edges that belong to at least one triangle, on the vertices they touch.
Subgraph triangle_union_subgraph(const Graph& g);

// Components of the triangle-union subgraph, ordered by ascending triangle
// count (ties by smallest vertex).
std::vector<TisgComponent> tisg_components(const Graph& g);

TisgProfile profile_of(const std::vector<TisgComponent>& components);

// Minimum number of triangles whose union covers the whole component, by
// branch-and-bound set cover. `exact` is false when the node budget ran out,
// in which case `size` is the best (greedy-seeded) cover found.
struct SpanCover {
    std::uint32_t size = 0;
    bool exact = false;
};
SpanCover min_spanning_triangles(const TisgComponent& c, std::uint64_t budget = 1'000'000);

// ell distinct triangles of c whose prefix unions are all connected: greedy
// over the triangle-overlap graph (adjacent iff sharing a vertex), seeded and
// tie-broken by lexicographically smallest triple. Throws PreconditionError
// if ell exceeds the component's triangle count.
std::vector<Triangle> connected_triangle_selection(const TisgComponent& c, std::uint64_t ell);

// The tree-edge -> excess-edge map: each spanning-tree edge e picks the
// lexicographically smallest triangle through it; type 1 when that triangle
// has one non-tree edge (which becomes the image), type 2 when it has two
// (the image is the one at e's deeper endpoint). Each excess edge receives
// at most two preimages of each type, hence at most four in total.
struct ExcessEdgeMap {
    struct Assignment {
        VertexPair tree_edge;    // original labels, u < v
        VertexPair excess_edge;  // original labels, u < v
        int type;                // 1 or 2
    };
    std::vector<Assignment> assignments;
    std::vector<std::pair<VertexPair, int>> multiplicity;  // per excess edge, sorted
    int max_multiplicity = 0;
};
ExcessEdgeMap excess_edge_map(const TisgComponent& c);

// Counts of triangles with 1, 2, or 3 edges outside the component's spanning
// tree. Zero tree-external edges is impossible and raises IntegrityError.
struct TriangleTypeCounts {
    std::uint64_t type1 = 0;
    std::uint64_t type2 = 0;
    std::uint64_t type3 = 0;
};
TriangleTypeCounts classify_triangles_by_excess(const TisgComponent& c);

// Subgraph induced by the edges outside a spanning tree of the (connected)
// vertex set `component`; its triangles are exactly the type-3 ones.
struct ExcessSubgraph {
    Graph graph;
    std::vector<Vertex> original_of;
    std::uint64_t triangle_count = 0;
    std::uint64_t tree_excess = 0;  // |E| - |V| + 1 of the component
};
ExcessSubgraph excess_subgraph(const Graph& g, std::span<const Vertex> component);

// The four component-level inequalities with their numeric slack
// (slack >= 0 means the inequality holds).
struct TigInequalityReport {
    bool edges_vs_excess_ok;       // |E| <= 5(|E|-|V|) + 5
    double edges_vs_excess_slack;
    bool triangles_vs_excess_ok;   // D <= (sqrt2/3)(|E|-|V|+1)^{3/2} + 3(|E|-|V|+1)
    double triangles_vs_excess_slack;
    bool excess_vs_h_ok;           // |E| - |V| >= h(D)
    double excess_vs_h_slack;
    bool kruskal_katona_ok;        // D <= (sqrt2/3)|E|^{3/2}
    double kruskal_katona_slack;
    bool all_ok() const {
        return edges_vs_excess_ok && triangles_vs_excess_ok && excess_vs_h_ok &&
               kruskal_katona_ok;
    }
};
TigInequalityReport check_tig_inequalities(const TisgComponent& c);

}  // namespace tritail
