#include "tritail/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace tritail {

Graph Graph::build(Vertex n, std::span<const VertexPair> edges) {
    std::vector<VertexPair> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge endpoint " + std::to_string(u >= n ? u : v) +
                             " out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        norm.emplace_back(u, v);
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Graph g;
    g.n_ = n;
    g.edge_count_ = norm.size();
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : norm) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * norm.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : norm) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // Inserting sorted edges front-to-back keeps each neighbor list sorted.
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_ || u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

namespace {

// Intersects the >v tails of N(u) and N(v) for each edge u < v.
template <typename Visit>
void for_each_triangle(const Graph& g, Visit&& visit) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        auto nu = g.neighbors(u);
        for (Vertex v : nu) {
            if (v <= u) continue;
            auto nv = g.neighbors(v);
            auto iu = std::upper_bound(nu.begin(), nu.end(), v);
            auto iv = std::upper_bound(nv.begin(), nv.end(), v);
            while (iu != nu.end() && iv != nv.end()) {
                if (*iu < *iv) {
                    ++iu;
                } else if (*iv < *iu) {
                    ++iv;
                } else {
                    visit(Triangle{u, v, *iu});
                    ++iu;
                    ++iv;
                }
            }
        }
    }
}

}  // namespace

TriangleSet enumerate_triangles(const Graph& g) {
    TriangleSet out;
    for_each_triangle(g, [&](const Triangle& t) { out.push_back(t); });
    return out;  // already sorted: (u, v, w) visited in lexicographic order
}

std::uint64_t count_triangles(const Graph& g) {
    std::uint64_t n = 0;
    for_each_triangle(g, [&](const Triangle&) { ++n; });
    return n;
}

std::uint64_t triangle_count_within(const Graph& g, std::span<const Vertex> w) {
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : w) {
        if (v >= g.vertex_count())
            throw InputError("subset vertex " + std::to_string(v) + " out of range");
        in[v] = true;
    }
    std::uint64_t n = 0;
    for_each_triangle(g, [&](const Triangle& t) {
        if (in[t.a] && in[t.b] && in[t.c]) ++n;
    });
    return n;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> block;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            block.push_back(u);
            for (Vertex v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;  // discovery from ascending seeds orders blocks by minimum
}

std::size_t SpanningTree::size() const {
    std::size_t n = 0;
    for (auto d : depth)
        if (d >= 0) ++n;
    return n;
}

SpanningTree spanning_tree(const Graph& g, std::span<const Vertex> component) {
    if (component.empty()) throw PreconditionError("spanning_tree: empty component");
    std::vector<bool> in(g.vertex_count(), false);
    Vertex root = kNoVertex;
    std::size_t members = 0;
    for (Vertex v : component) {
        if (v >= g.vertex_count())
            throw InputError("component vertex " + std::to_string(v) + " out of range");
        if (!in[v]) {
            in[v] = true;
            ++members;
            if (root == kNoVertex || v < root) root = v;
        }
    }

    SpanningTree t;
    t.root = root;
    t.parent.assign(g.vertex_count(), kNoVertex);
    t.depth.assign(g.vertex_count(), -1);
    t.parent[root] = root;
    t.depth[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    std::size_t reached = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : g.neighbors(u)) {
            if (in[v] && t.depth[v] < 0) {
                t.parent[v] = u;
                t.depth[v] = t.depth[u] + 1;
                q.push(v);
                ++reached;
            }
        }
    }
    if (reached != members)
        throw PreconditionError("spanning_tree: component is not connected");
    return t;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> w) {
    std::vector<Vertex> keep(w.begin(), w.end());
    for (Vertex v : keep)
        if (v >= g.vertex_count())
            throw InputError("subset vertex " + std::to_string(v) + " out of range");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<Vertex> rank(g.vertex_count(), kNoVertex);
    for (Vertex i = 0; i < keep.size(); ++i) rank[keep[i]] = i;

    std::vector<VertexPair> edges;
    for (Vertex u : keep)
        for (Vertex v : g.neighbors(u))
            if (v > u && rank[v] != kNoVertex) edges.emplace_back(rank[u], rank[v]);

    Subgraph s;
    s.graph = Graph::build(static_cast<Vertex>(keep.size()), edges);
    s.original_of = std::move(keep);
    return s;
}

}  // namespace tritail
