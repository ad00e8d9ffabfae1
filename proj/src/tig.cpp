#include "tritail/tig.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tritail/analytic.hpp"

namespace tritail {

Subgraph triangle_union_subgraph(const Graph& g) {
    std::vector<VertexPair> tri_edges;
    for (const Triangle& t : enumerate_triangles(g)) {
        tri_edges.emplace_back(t.a, t.b);
        tri_edges.emplace_back(t.a, t.c);
        tri_edges.emplace_back(t.b, t.c);
    }
    std::sort(tri_edges.begin(), tri_edges.end());
    tri_edges.erase(std::unique(tri_edges.begin(), tri_edges.end()), tri_edges.end());

    std::vector<Vertex> support;
    for (auto [u, v] : tri_edges) {
        support.push_back(u);
        support.push_back(v);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    std::vector<Vertex> rank(g.vertex_count(), kNoVertex);
    for (Vertex i = 0; i < static_cast<Vertex>(support.size()); ++i) rank[support[i]] = i;
    std::vector<VertexPair> local_edges;
    local_edges.reserve(tri_edges.size());
    for (auto [u, v] : tri_edges) local_edges.emplace_back(rank[u], rank[v]);

    Subgraph s;
    s.graph = Graph::build(static_cast<Vertex>(support.size()), local_edges);
    s.original_of = std::move(support);
    return s;
}

std::vector<TisgComponent> tisg_components(const Graph& g) {
    Subgraph un = triangle_union_subgraph(g);
    std::vector<TisgComponent> out;
    for (const auto& block : connected_components(un.graph)) {
        TisgComponent c;
        c.vertices.reserve(block.size());
        for (Vertex v : block) c.vertices.push_back(un.original_of[v]);
        Subgraph local = induced_subgraph(un.graph, block);
        for (auto [u, v] : local.graph.edges()) {
            Vertex a = un.original_of[local.original_of[u]];
            Vertex b = un.original_of[local.original_of[v]];
            if (a > b) std::swap(a, b);
            c.edges.emplace_back(a, b);
        }
        std::sort(c.edges.begin(), c.edges.end());
        c.original_of.reserve(block.size());
        for (Vertex v : local.original_of) c.original_of.push_back(un.original_of[v]);
        c.local = std::move(local.graph);
        c.triangle_count = count_triangles(c.local);
        c.excess = static_cast<std::int64_t>(c.edges.size()) -
                   static_cast<std::int64_t>(c.vertices.size());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const TisgComponent& a, const TisgComponent& b) {
        if (a.triangle_count != b.triangle_count) return a.triangle_count < b.triangle_count;
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

TisgProfile profile_of(const std::vector<TisgComponent>& components) {
    TisgProfile p;
    for (const auto& c : components) {
        p.sizes.push_back(c.triangle_count);
        p.total += c.triangle_count;
    }
    std::sort(p.sizes.begin(), p.sizes.end());
    return p;
}

namespace {

struct CoverSearch {
    const std::vector<std::vector<std::uint32_t>>& edge_to_tris;  // per edge: triangle ids
    const std::vector<std::array<std::uint32_t, 3>>& tri_edges;   // per triangle: edge ids
    std::vector<int> cover_count;  // per edge
    std::size_t uncovered;
    std::uint32_t best;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool exhausted = false;

    void take(std::uint32_t t, int dir) {
        for (auto e : tri_edges[t]) {
            cover_count[e] += dir;
            if (dir > 0 && cover_count[e] == 1) --uncovered;
            if (dir < 0 && cover_count[e] == 0) ++uncovered;
        }
    }

    void run(std::uint32_t chosen) {
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (uncovered == 0) {
            best = std::min(best, chosen);
            return;
        }
        if (chosen + (uncovered + 2) / 3 >= best) return;
        // branch on the uncovered edge with fewest covering triangles
        std::uint32_t pick = kNoVertex;
        std::size_t fewest = SIZE_MAX;
        for (std::uint32_t e = 0; e < cover_count.size(); ++e) {
            if (cover_count[e] > 0) continue;
            if (edge_to_tris[e].size() < fewest) {
                fewest = edge_to_tris[e].size();
                pick = e;
            }
        }
        for (std::uint32_t t : edge_to_tris[pick]) {
            take(t, +1);
            run(chosen + 1);
            take(t, -1);
            if (exhausted) return;
        }
    }
};

}  // namespace

SpanCover min_spanning_triangles(const TisgComponent& c, std::uint64_t budget) {
    TriangleSet tris = enumerate_triangles(c.local);
    auto graph_edges = c.local.edges();
    std::map<VertexPair, std::uint32_t> edge_id;
    for (std::uint32_t i = 0; i < graph_edges.size(); ++i) edge_id[graph_edges[i]] = i;

    std::vector<std::array<std::uint32_t, 3>> tri_edges(tris.size());
    std::vector<std::vector<std::uint32_t>> edge_to_tris(graph_edges.size());
    for (std::uint32_t t = 0; t < tris.size(); ++t) {
        const Triangle& tr = tris[t];
        tri_edges[t] = {edge_id.at({tr.a, tr.b}), edge_id.at({tr.a, tr.c}),
                        edge_id.at({tr.b, tr.c})};
        for (auto e : tri_edges[t]) edge_to_tris[e].push_back(t);
    }

    // greedy cover: repeatedly take the triangle covering most uncovered edges
    std::vector<bool> covered(graph_edges.size(), false);
    std::size_t remaining = graph_edges.size();
    std::uint32_t greedy = 0;
    while (remaining > 0) {
        std::uint32_t best_t = 0;
        int best_gain = -1;
        for (std::uint32_t t = 0; t < tris.size(); ++t) {
            int gain = 0;
            for (auto e : tri_edges[t]) gain += covered[e] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best_t = t;
            }
        }
        if (best_gain <= 0)
            throw IntegrityError("component edge not covered by any triangle");
        for (auto e : tri_edges[best_t]) {
            if (!covered[e]) {
                covered[e] = true;
                --remaining;
            }
        }
        ++greedy;
    }

    CoverSearch search{edge_to_tris, tri_edges,
                       std::vector<int>(graph_edges.size(), 0), graph_edges.size(),
                       greedy, 0, budget, false};
    search.run(0);
    return {search.best, !search.exhausted};
}

std::vector<Triangle> connected_triangle_selection(const TisgComponent& c, std::uint64_t ell) {
    TriangleSet tris = enumerate_triangles(c.local);
    if (ell > tris.size())
        throw PreconditionError("connected_triangle_selection: ell exceeds triangle count");
    std::vector<bool> used(tris.size(), false);
    std::vector<bool> touched(c.local.vertex_count(), false);
    std::vector<Triangle> picked;
    picked.reserve(ell);
    for (std::uint64_t step = 0; step < ell; ++step) {
        std::size_t choice = tris.size();
        for (std::size_t t = 0; t < tris.size(); ++t) {
            if (used[t]) continue;
            if (step > 0 && !(touched[tris[t].a] || touched[tris[t].b] || touched[tris[t].c]))
                continue;
            choice = t;
            break;  // triangles are sorted, first hit is lexicographically least
        }
        if (choice == tris.size())
            throw IntegrityError("triangle-overlap graph of a component is disconnected");
        used[choice] = true;
        touched[tris[choice].a] = touched[tris[choice].b] = touched[tris[choice].c] = true;
        const Triangle& t = tris[choice];
        picked.push_back({c.original_of[t.a], c.original_of[t.b], c.original_of[t.c]});
    }
    return picked;
}

namespace {

// Smallest w adjacent to both endpoints gives the lexicographically smallest
// triangle containing the edge.
Vertex smallest_completing_vertex(const Graph& g, Vertex u, Vertex v) {
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    auto iu = nu.begin();
    auto iv = nv.begin();
    while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv)
            ++iu;
        else if (*iv < *iu)
            ++iv;
        else
            return *iu;
    }
    return kNoVertex;
}

SpanningTree component_tree(const Graph& local) {
    std::vector<Vertex> all(local.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return spanning_tree(local, all);
}

}  // namespace

ExcessEdgeMap excess_edge_map(const TisgComponent& c) {
    const Graph& g = c.local;
    SpanningTree tree = component_tree(g);
    ExcessEdgeMap out;
    std::map<VertexPair, std::array<int, 2>> per_type;  // excess edge -> {type1, type2}

    for (Vertex child = 0; child < g.vertex_count(); ++child) {
        if (child == tree.root) continue;
        Vertex par = tree.parent[child];
        Vertex u = std::min(child, par), v = std::max(child, par);
        Vertex w = smallest_completing_vertex(g, u, v);
        if (w == kNoVertex)
            throw IntegrityError("tree edge outside every triangle in a TISG component");
        bool uw_tree = tree.is_tree_edge(u, w);
        bool vw_tree = tree.is_tree_edge(v, w);
        if (uw_tree && vw_tree)
            throw IntegrityError("triangle with three tree edges");
        VertexPair image;
        int type;
        if (uw_tree != vw_tree) {
            type = 1;
            Vertex other = uw_tree ? v : u;  // endpoint of the lone excess edge
            image = {std::min(other, w), std::max(other, w)};
        } else {
            type = 2;
            Vertex deeper = tree.depth[u] > tree.depth[v] ? u : v;
            image = {std::min(deeper, w), std::max(deeper, w)};
        }
        auto& counts = per_type[image];
        ++counts[type - 1];
        out.assignments.push_back({{c.original_of[u], c.original_of[v]},
                                   {c.original_of[image.first], c.original_of[image.second]},
                                   type});
    }

    for (const auto& [edge, counts] : per_type) {
        int total = counts[0] + counts[1];
        if (counts[0] > 2 || counts[1] > 2 || total > 4)
            throw IntegrityError("excess edge multiplicity bound violated");
        Vertex a = c.original_of[edge.first], b = c.original_of[edge.second];
        out.multiplicity.emplace_back(VertexPair{std::min(a, b), std::max(a, b)}, total);
        out.max_multiplicity = std::max(out.max_multiplicity, total);
    }
    std::sort(out.multiplicity.begin(), out.multiplicity.end());
    return out;
}

TriangleTypeCounts classify_triangles_by_excess(const TisgComponent& c) {
    const Graph& g = c.local;
    SpanningTree tree = component_tree(g);
    TriangleTypeCounts counts;
    for (const Triangle& t : enumerate_triangles(g)) {
        int excess = 0;
        excess += tree.is_tree_edge(t.a, t.b) ? 0 : 1;
        excess += tree.is_tree_edge(t.a, t.c) ? 0 : 1;
        excess += tree.is_tree_edge(t.b, t.c) ? 0 : 1;
        switch (excess) {
            case 1: ++counts.type1; break;
            case 2: ++counts.type2; break;
            case 3: ++counts.type3; break;
            default: throw IntegrityError("triangle inside the spanning tree");
        }
    }
    return counts;
}

ExcessSubgraph excess_subgraph(const Graph& g, std::span<const Vertex> component) {
    SpanningTree tree = spanning_tree(g, component);
    std::vector<VertexPair> excess;
    for (Vertex u : component)
        for (Vertex v : g.neighbors(u))
            if (v > u && tree.contains(v) && !tree.is_tree_edge(u, v))
                excess.emplace_back(u, v);
    std::sort(excess.begin(), excess.end());
    excess.erase(std::unique(excess.begin(), excess.end()), excess.end());

    std::vector<Vertex> support;
    for (auto [u, v] : excess) {
        support.push_back(u);
        support.push_back(v);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<Vertex> rank(g.vertex_count(), kNoVertex);
    for (Vertex i = 0; i < static_cast<Vertex>(support.size()); ++i) rank[support[i]] = i;
    std::vector<VertexPair> local_edges;
    local_edges.reserve(excess.size());
    for (auto [u, v] : excess) local_edges.emplace_back(rank[u], rank[v]);

    ExcessSubgraph out;
    out.graph = Graph::build(static_cast<Vertex>(support.size()), local_edges);
    out.original_of = std::move(support);
    out.triangle_count = count_triangles(out.graph);
    out.tree_excess = excess.size();  // |E| - (|V| - 1) of the component
    return out;
}

TigInequalityReport check_tig_inequalities(const TisgComponent& c) {
    double e = static_cast<double>(c.edges.size());
    double v = static_cast<double>(c.vertices.size());
    double tri = static_cast<double>(c.triangle_count);
    double x = e - v;  // tree excess minus one

    TigInequalityReport r{};
    r.edges_vs_excess_slack = 5.0 * x + 5.0 - e;
    r.edges_vs_excess_ok = r.edges_vs_excess_slack >= 0.0;
    double l32 = analytic::kruskal_katona_bound(x + 1.0) + 3.0 * (x + 1.0);
    r.triangles_vs_excess_slack = l32 - tri;
    r.triangles_vs_excess_ok = r.triangles_vs_excess_slack >= -1e-9;
    r.excess_vs_h_slack = x - analytic::h_of(tri);
    r.excess_vs_h_ok = r.excess_vs_h_slack >= -1e-9;
    r.kruskal_katona_slack = analytic::kruskal_katona_bound(e) - tri;
    r.kruskal_katona_ok = r.kruskal_katona_slack >= -1e-9;
    return r;
}

}  // namespace tritail
