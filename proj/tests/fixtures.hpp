#pragma once

#include <vector>

#include "tritail/graph.hpp"

namespace fixtures {

using tritail::Graph;
using tritail::Vertex;
using tritail::VertexPair;

// The 8-vertex, 12-edge union of five triangles used as the running example:
// a triangle 0-1-2, a K4 on {2,3,4,5}, and a triangle 1-6-7. Six triangles total.
inline Graph five_triangle_union() {
    std::vector<VertexPair> edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 5}, {2, 5},
                                     {2, 4}, {3, 4}, {4, 5}, {6, 7}, {1, 7}, {1, 6}};
    return Graph::build(8, edges);
}

inline Graph complete(Vertex m) {
    std::vector<VertexPair> edges;
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return Graph::build(m, edges);
}

inline Graph path(Vertex n) {
    std::vector<VertexPair> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, edges);
}

inline Graph cycle(Vertex n) {
    std::vector<VertexPair> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph::build(n, edges);
}

// m-clique with `pendants` extra degree-1 vertices hung off clique vertices 0,1,...
inline Graph clique_with_pendants(Vertex m, Vertex pendants) {
    std::vector<VertexPair> edges;
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    for (Vertex i = 0; i < pendants; ++i) edges.emplace_back(i % m, m + i);
    return Graph::build(m + pendants, edges);
}

inline Graph disjoint_triangles(Vertex count) {
    std::vector<VertexPair> edges;
    for (Vertex i = 0; i < count; ++i) {
        Vertex a = 3 * i;
        edges.emplace_back(a, a + 1);
        edges.emplace_back(a, a + 2);
        edges.emplace_back(a + 1, a + 2);
    }
    return Graph::build(3 * count, edges);
}

}  // namespace fixtures
