#include "tritail/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "tritail/analytic.hpp"
#include "tritail/edge_io.hpp"
#include "tritail/montecarlo.hpp"
#include "tritail/rng.hpp"
#include "tritail/structure.hpp"
#include "tritail/tig.hpp"

namespace tritail {

namespace {

constexpr double kTol = 1e-9;

struct Runner {
    const VerifyConfig& cfg;
    VerifyReport report;

    void fail(const std::string& check, const std::string& detail, const Graph* g = nullptr) {
        report.violations.push_back({check, detail, g ? to_edge_list(*g) : std::string{}});
    }

    std::uint64_t brute_force_triangles(const Graph& g) {
        std::uint64_t total = 0;
        for (Vertex a = 0; a < g.vertex_count(); ++a)
            for (Vertex b = a + 1; b < g.vertex_count(); ++b)
                for (Vertex c = b + 1; c < g.vertex_count(); ++c)
                    if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) ++total;
        return total;
    }

    std::uint64_t brute_force_packing(const TriangleSet& tris) {
        std::uint64_t best = 0;
        for (std::uint32_t mask = 0; mask < (1u << tris.size()); ++mask) {
            std::set<Vertex> used;
            bool ok = true;
            std::uint64_t size = 0;
            for (std::size_t t = 0; t < tris.size() && ok; ++t) {
                if (!(mask & (1u << t))) continue;
                for (Vertex v : {tris[t].a, tris[t].b, tris[t].c})
                    if (!used.insert(v).second) ok = false;
                ++size;
            }
            if (ok) best = std::max(best, size);
        }
        return best;
    }

    void check_component(const Graph& g, const TisgComponent& c) {
        ++report.components_checked;
        double e = static_cast<double>(c.edges.size());
        double v = static_cast<double>(c.vertices.size());
        double x = e - v;
        double tri = static_cast<double>(c.triangle_count);

        if (cfg.self_test_break) {
            if (e > 4.0 * x + kTol)
                fail("edges-vs-excess[broken]", "corrupted threshold |E| <= 4(|E|-|V|)", &g);
        } else if (e > 5.0 * x + 5.0 + kTol) {
            fail("edges-vs-excess", "|E| <= 5(|E|-|V|)+5 failed", &g);
        }
        if (tri > analytic::kruskal_katona_bound(x + 1.0) + 3.0 * (x + 1.0) + kTol)
            fail("triangles-vs-excess", "component triangle bound failed", &g);
        if (x + kTol < analytic::h_of(tri))
            fail("excess-vs-h", "|E|-|V| >= h(triangles) failed", &g);
        if (c.triangle_count < 1) fail("component-triangles", "component without a triangle", &g);
        for (auto [a, b] : c.local.edges()) {
            bool in_triangle = false;
            for (Vertex w : c.local.neighbors(a))
                if (w != b && c.local.has_edge(w, b)) {
                    in_triangle = true;
                    break;
                }
            if (!in_triangle) {
                fail("component-edge-cover", "component edge outside every triangle", &g);
                break;
            }
        }

        ExcessEdgeMap map = excess_edge_map(c);
        if (map.max_multiplicity > 4)
            fail("excess-map-multiplicity", "some excess edge has > 4 preimages", &g);
        std::map<VertexPair, std::array<int, 2>> per_type;
        for (const auto& a : map.assignments) ++per_type[a.excess_edge][a.type - 1];
        for (const auto& [edge, counts] : per_type)
            if (counts[0] > 2 || counts[1] > 2)
                fail("excess-map-type", "more than two preimages of one type", &g);
        if (map.assignments.size() != c.vertices.size() - 1)
            fail("excess-map-domain", "not every tree edge was assigned", &g);

        TriangleTypeCounts types = classify_triangles_by_excess(c);
        double tree_excess = x + 1.0;
        if (types.type1 + types.type2 + types.type3 != c.triangle_count)
            fail("triangle-types-total", "type counts do not sum to the triangle count", &g);
        if (static_cast<double>(types.type1 + types.type2) > 3.0 * tree_excess + kTol)
            fail("triangle-types-12", "type1+type2 <= 3(|E|-|V|+1) failed", &g);
        if (static_cast<double>(types.type3) >
            analytic::kruskal_katona_bound(tree_excess) + kTol)
            fail("triangle-types-3", "type3 <= KK(|E|-|V|+1) failed", &g);

        std::vector<Vertex> local_all(c.local.vertex_count());
        for (Vertex v = 0; v < c.local.vertex_count(); ++v) local_all[v] = v;
        ExcessSubgraph ex = excess_subgraph(c.local, local_all);
        if (ex.triangle_count != types.type3)
            fail("excess-subgraph-triangles",
                 "excess subgraph triangles != type-3 count", &g);
        if (static_cast<double>(ex.triangle_count) + 3.0 * tree_excess + kTol < tri)
            fail("excess-subgraph-bound", "D(G') >= D(G) - 3(|E|-|V|+1) failed", &g);
        if (ex.tree_excess != static_cast<std::uint64_t>(x + 1.0))
            fail("excess-subgraph-size", "|E(G')| != |E|-|V|+1", &g);

        // a connected selection must exist for every ell up to the count
        std::uint64_t cap = std::min<std::uint64_t>(c.triangle_count, 25);
        for (std::uint64_t ell = 1; ell <= cap; ++ell) {
            auto sel = connected_triangle_selection(c, ell);
            std::set<Vertex> seen;
            for (std::size_t i = 0; i < sel.size(); ++i) {
                bool touches = seen.empty() || seen.count(sel[i].a) || seen.count(sel[i].b) ||
                               seen.count(sel[i].c);
                if (!touches) {
                    fail("connected-selection", "prefix union disconnected", &g);
                    break;
                }
                seen.insert({sel[i].a, sel[i].b, sel[i].c});
            }
            if (sel.size() != ell) fail("connected-selection", "selection too short", &g);
        }
    }

    void check_graph(const Graph& g) {
        ++report.graphs_checked;
        TriangleSet tris = enumerate_triangles(g);
        double total = static_cast<double>(tris.size());
        if (total > analytic::kruskal_katona_bound(static_cast<double>(g.edge_count())) + kTol)
            fail("kruskal-katona", "whole-graph triangle bound failed", &g);

        if (g.vertex_count() <= 30 && brute_force_triangles(g) != tris.size())
            fail("triangle-enumeration", "intersection count != brute force", &g);

        std::vector<Vertex> all(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
        if (triangle_count_within(g, all) != tris.size())
            fail("count-within-total", "triangle_count_within(V) != total", &g);

        // connected-graph inequalities on every component of g
        for (const auto& block : connected_components(g)) {
            std::uint64_t block_tris = triangle_count_within(g, block);
            Subgraph sub = induced_subgraph(g, block);
            double e = static_cast<double>(sub.graph.edge_count());
            double v = static_cast<double>(block.size());
            double x1 = e - v + 1.0;
            if (static_cast<double>(block_tris) >
                analytic::kruskal_katona_bound(x1) + 3.0 * x1 + kTol)
                fail("connected-triangle-bound", "Delta vs tree-excess bound failed", &g);
            if (block_tris >= 1 && e - v + kTol < analytic::h_of(static_cast<double>(block_tris)))
                fail("connected-h-bound", "|E|-|V| >= h(Delta) failed", &g);
            ExcessSubgraph ex = excess_subgraph(g, block);
            if (static_cast<double>(ex.triangle_count) + 3.0 * x1 + kTol <
                static_cast<double>(block_tris))
                fail("excess-subgraph-bound", "D(G') >= D(G) - 3(|E|-|V|+1) failed", &g);
        }

        for (const auto& c : tisg_components(g)) check_component(g, c);

        // spanning-tree determinism
        for (const auto& block : connected_components(g)) {
            SpanningTree t1 = spanning_tree(g, block);
            SpanningTree t2 = spanning_tree(g, block);
            if (t1.parent != t2.parent)
                fail("spanning-tree-determinism", "two runs disagreed", &g);
            break;  // one block suffices per graph
        }

        // structure checks on graphs with few triangles: packing vs brute force
        if (!tris.empty() && tris.size() <= 12) {
            PackingResult pack = max_disjoint_triangles(g);
            if (!pack.exact)
                fail("packing-exact", "budget exhausted on a tiny instance", &g);
            else if (pack.size != brute_force_packing(tris))
                fail("packing-maximum", "branch-and-bound != brute force", &g);
        }
        if (g.edge_count() >= 1 && g.vertex_count() <= 12) {
            EigenPair eig = principal_eigenpair(g);
            double two_e = 2.0 * static_cast<double>(g.edge_count());
            if (eig.lambda1 * eig.lambda1 > two_e + 1e-6 * two_e)
                fail("eigen-trace", "lambda1^2 > 2|E|", &g);
            if (eig.lambda1 + 1e-6 < 6.0 * total / two_e)
                fail("eigen-triangle-bound", "lambda1 < 6D/(2|E|)", &g);
        }

        // dense-core accounting on connected triangle-bearing graphs
        if (!tris.empty() && connected_components(g).size() == 1) {
            DenseCoreReport core = dense_core(g, tris.size(), 0.25);
            std::uint64_t lost = core.lost_to_tree_types + core.lost_to_pruning;
            if (core.core_triangles + lost != tris.size())
                fail("dense-core-accounting", "lost triangles do not sum up", &g);
        }
    }

    void run_exhaustive() {
        for (Vertex n = 2; n <= cfg.exhaustive_max_n; ++n) {
            std::vector<VertexPair> pairs;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
            std::uint64_t masks = 1ULL << pairs.size();
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                std::vector<VertexPair> edges;
                for (std::size_t e = 0; e < pairs.size(); ++e)
                    if (mask & (1ULL << e)) edges.push_back(pairs[e]);
                check_graph(Graph::build(n, edges));
                if (report.violations.size() > 50) return;  // enough evidence
            }
        }
    }

    void run_random() {
        for (std::uint64_t i = 0; i < cfg.random_samples; ++i) {
            Graph g = mc::sample_er(cfg.random_n, cfg.random_d, stream_seed(cfg.seed, i));
            check_graph(g);
            if (report.violations.size() > 50) return;
        }
    }

    void analytic_point(bool ok, const std::string& check, const std::string& detail) {
        ++report.analytic_points_checked;
        if (!ok) fail(check, detail);
    }

    void run_analytic() {
        using namespace analytic;
        const double a = critical_coefficient();

        // round trip on a log grid over (10.0001, 1e9)
        const int grid = 10'000;
        double lo = std::log(10.0001), hi = std::log(1e9);
        for (int i = 0; i < grid; ++i) {
            double y = std::exp(lo + (hi - lo) * i / (grid - 1));
            double err = std::abs(f_of(h_of(y)) - y);
            analytic_point(err <= 1e-9 * y, "h-round-trip",
                           "f(h(y)) off at y=" + std::to_string(y));
        }

        // concavity above the seam, several spacings
        for (double step : {1e-3, 0.1, 97.0, 1.0e6}) {
            double start = 10.0 + 2 * step;
            for (int i = 0; i < 300; ++i) {
                double y = start + step * i;
                double second = h_of(y - step) - 2.0 * h_of(y) + h_of(y + step);
                analytic_point(second <= 1e-9, "h-concavity",
                               "second difference positive at y=" + std::to_string(y));
            }
        }

        // monotone across both seams and beyond
        {
            double prev = h_of(-10.0);
            for (double y = -9.0; y < 12.0; y += 0.01) {
                double cur = h_of(y);
                analytic_point(cur >= prev, "h-monotone",
                               "h decreased at y=" + std::to_string(y));
                prev = cur;
            }
            for (int i = 0; i < 500; ++i) {
                double y = 12.0 * std::pow(1e6 / 12.0, i / 499.0);
                double cur = h_of(y);
                analytic_point(cur >= prev, "h-monotone",
                               "h decreased at y=" + std::to_string(y));
                prev = cur;
            }
        }

        // upper bounds h(y) <= a y^{2/3}; with room to spare for y >= 1e4
        for (int i = 0; i < 2'000; ++i) {
            double y = std::exp(std::log(1.0) + (std::log(1e9) - std::log(1.0)) * i / 1999.0);
            analytic_point(h_of(y) <= a * std::pow(y, 2.0 / 3.0) + kTol, "h-upper",
                           "h(y) > a y^{2/3} at y=" + std::to_string(y));
            if (y >= 1e4)
                analytic_point(h_of(y) + 10.0 <= a * std::pow(y, 2.0 / 3.0) + kTol,
                               "h-upper-slack", "h(y)+10 > a y^{2/3} at y=" + std::to_string(y));
        }

        // superadditivity relative to the value at 10
        for (int i = 0; i < 200; ++i) {
            for (int j = i; j < 200; ++j) {
                double xx = 10.0 + (1e6 - 10.0) * i / 199.0;
                double yy = 10.0 + (1e6 - 10.0) * j / 199.0;
                bool ok = h_of(xx) + h_of(yy) >= h_of(10.0) + h_of(xx + yy - 10.0) - kTol;
                analytic_point(ok, "h-superadditive",
                               "failed at x=" + std::to_string(xx) + " y=" + std::to_string(yy));
            }
        }

        // integer-grid inequalities, strided
        for (std::uint64_t i = 0; i <= 10'000; i += 53) {
            for (std::uint64_t m = 0; m <= 1'000'000; m += 4'999) {
                auto [first, second] = check_h_integer_shifts(i, m);
                analytic_point(first && second, "h-integer-shifts",
                               "failed at i=" + std::to_string(i) + " m=" + std::to_string(m));
            }
        }

        // derivative against central differences
        for (int i = 0; i < 500; ++i) {
            double y = std::exp(std::log(10.1) + (std::log(1e9) - std::log(10.1)) * i / 499.0);
            double delta = y * 1e-4;
            if (y - delta <= 10.0) delta = (y - 10.0) / 2;
            double numeric = (h_of(y + delta) - h_of(y - delta)) / (2.0 * delta);
            double exact = h_prime(y);
            analytic_point(std::abs(numeric - exact) <= 1e-6 * exact, "h-derivative",
                           "finite difference mismatch at y=" + std::to_string(y));
        }

        // Poisson complement and packing-expectation ordering
        for (double lambda : {0.5, 4.0 / 3.0, 1.0, 4.5, 10.0}) {
            for (std::uint64_t kk = 1; kk <= 30; ++kk) {
                double cdf = 0.0;
                for (std::uint64_t j = 0; j < kk; ++j) cdf += poisson_pmf(lambda, j);
                analytic_point(std::abs(poisson_tail(lambda, kk) + cdf - 1.0) <= 1e-12,
                               "poisson-complement", "tail+cdf != 1");
            }
        }
        for (std::uint64_t n : {30ULL, 100ULL, 1000ULL}) {
            for (double d : {0.5, 2.0, 3.0}) {
                for (std::uint64_t kk = 0; 3 * kk <= n && kk <= 8; ++kk) {
                    auto pe = expected_isolated_packings(n, d, kk);
                    double d0 = d * d * d / 6.0;
                    double remark =
                        std::exp(-std::lgamma(static_cast<double>(kk) + 1.0) +
                                 static_cast<double>(kk) * std::log(d0));
                    analytic_point(pe.exact <= pe.bound * (1.0 + 1e-12) + 1e-300,
                                   "packing-order", "exact > bound");
                    analytic_point(pe.bound <= remark * (1.0 + 1e-9),
                                   "packing-remark", "bound > (1/k!) d0^k");
                }
            }
        }
    }

    void run_sampler_determinism() {
        Graph a = mc::sample_er(200, 2.0, cfg.seed);
        Graph b = mc::sample_er(200, 2.0, cfg.seed);
        if (!(a == b)) fail("sampler-determinism", "same seed produced different graphs");
        auto t1 = mc::estimate_tail(60, 2.0, 1, 400, cfg.seed, 1);
        auto t3 = mc::estimate_tail(60, 2.0, 1, 400, cfg.seed, 3);
        if (t1.successes != t3.successes)
            fail("worker-invariance", "estimate depends on worker count");
        for (std::uint64_t s = 0; s < 10; ++s) {
            Graph planted = mc::plant_disjoint_triangles(60, 2.0, 4, stream_seed(cfg.seed, s));
            if (count_triangles(planted) < 4)
                fail("planted-frequency", "planted graph below its own threshold", &planted);
            if (max_disjoint_triangles(planted, 4).size < 4)
                fail("planted-packing", "packing misses the planted triangles", &planted);
        }
    }
};

}  // namespace

VerifyReport verify_suite(const VerifyConfig& config) {
    Runner runner{config, {}};
    runner.run_exhaustive();
    if (config.random_samples > 0) runner.run_random();
    if (config.analytic_checks) runner.run_analytic();
    runner.run_sampler_determinism();
    return runner.report;
}

}  // namespace tritail
