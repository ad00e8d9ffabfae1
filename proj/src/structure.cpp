#include "tritail/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tritail/analytic.hpp"

namespace tritail {

std::uint64_t ceil_threshold(double x) {
    if (x <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::ceil(x - 1e-9));
}

EigenPair principal_eigenpair(const Graph& g) {
    if (g.edge_count() == 0)
        throw PreconditionError("principal_eigenpair requires at least one edge");
    const Vertex n = g.vertex_count();
    const std::uint64_t max_iters = 100'000;
    const double rel_tol = 1e-12;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double rayleigh = 0.0;
    std::uint64_t it = 0;
    for (it = 1; it <= max_iters; ++it) {
        for (Vertex v = 0; v < n; ++v) {
            double acc = x[v];  // the +I shift
            for (Vertex u : g.neighbors(v)) acc += x[u];
            y[v] = acc;
        }
        double dot = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        double next = dot - 1.0;  // x is unit, so x'(A+I)x - 1 = x'Ax
        double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        for (Vertex v = 0; v < n; ++v) x[v] = y[v] / norm;
        if (it > 1 && std::abs(next - rayleigh) <= rel_tol * std::max(1.0, std::abs(next))) {
            rayleigh = next;
            break;
        }
        rayleigh = next;
    }
    if (it > max_iters)
        throw NumericError("power iteration did not converge in " +
                           std::to_string(max_iters) + " iterations");
    return {rayleigh, std::move(x), it};
}

namespace {

SpectralPartition partition_by_eigenvector(const Graph& g, std::uint64_t k, double eps_tilde) {
    SpectralPartition p;
    p.eps_tilde = eps_tilde;
    if (g.edge_count() > 0) {
        EigenPair e = principal_eigenpair(g);
        p.lambda1 = e.lambda1;
        p.v1 = std::move(e.v1);
        p.iterations = e.iterations;
    } else {
        p.v1.assign(g.vertex_count(), 0.0);
    }
    p.residual_frobenius_sq = 2.0 * static_cast<double>(g.edge_count()) - p.lambda1 * p.lambda1;

    double scale = std::pow(static_cast<double>(k), 1.0 / 6.0);
    double quarter = std::pow(eps_tilde, 0.25);
    double low = std::pow(eps_tilde, 0.125) / scale;
    double band_lo = (1.0 - quarter) / scale;
    double band_hi = (1.0 + quarter) / scale;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        double a = std::abs(p.v1[v]);
        if (a > band_hi)
            p.s1.push_back(v);
        else if (a >= band_lo)
            p.s4.push_back(v);
        else if (a <= low)
            p.s3.push_back(v);
        else
            p.s2.push_back(v);
    }
    return p;
}

}  // namespace

NearCliqueReport spectral_near_clique(const Graph& g, std::uint64_t k, double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw InputError("eps must lie in (0, 0.5)");
    if (k == 0) throw InputError("k must be positive");
    double kd = static_cast<double>(k);
    double ratio = (1.0 - eps) / (1.0 + eps);
    double eps_tilde = 1.0 + eps - ratio * ratio;

    NearCliqueReport r;
    r.partition = partition_by_eigenvector(g, k, eps_tilde);
    r.triangle_hypothesis =
        static_cast<double>(count_triangles(g)) >= (1.0 - eps) * kd / 6.0 - 1e-9;
    r.edge_hypothesis =
        static_cast<double>(g.edge_count()) <= (1.0 + eps) * 0.5 * std::pow(kd, 2.0 / 3.0) + 1e-9;
    r.hypotheses_met = r.triangle_hypothesis && r.edge_hypothesis;

    r.v_prime = r.partition.s4;
    r.v_prime_triangles = triangle_count_within(g, r.v_prime);
    double k13 = std::cbrt(kd);
    double corr = 6.0 * std::pow(eps, 0.25);
    r.size_bound = (1.0 + corr) * k13;
    r.triangle_bound = (1.0 - corr) * kd / 6.0;
    r.size_ok = static_cast<double>(r.v_prime.size()) <= r.size_bound + 1e-9;
    r.triangles_ok = static_cast<double>(r.v_prime_triangles) >= r.triangle_bound - 1e-9;

    double quarter = std::pow(eps_tilde, 0.25);
    r.s1_s2_bound = 2.0 * quarter * k13;
    r.s4_bound = quarter < 1.0
                     ? k13 / ((1.0 - quarter) * (1.0 - quarter))
                     : std::numeric_limits<double>::infinity();
    r.s1_ok = static_cast<double>(r.partition.s1.size()) < r.s1_s2_bound + 1e-9;
    r.s2_ok = static_cast<double>(r.partition.s2.size()) < r.s1_s2_bound + 1e-9;
    r.s4_ok = static_cast<double>(r.partition.s4.size()) <= r.s4_bound + 1e-9;
    return r;
}

namespace {

struct PackingSearch {
    const TriangleSet& tris;
    std::optional<std::uint64_t> target;
    std::uint64_t budget;

    std::vector<bool> vertex_used;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    bool target_hit = false;

    bool free(const Triangle& t) const {
        return !vertex_used[t.a] && !vertex_used[t.b] && !vertex_used[t.c];
    }
    void mark(const Triangle& t, bool val) {
        vertex_used[t.a] = vertex_used[t.b] = vertex_used[t.c] = val;
    }

    void run(std::size_t from) {
        if (target_hit || exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (current.size() > best.size()) {
            best = current;
            if (target && best.size() >= *target) {
                target_hit = true;
                return;
            }
        }
        std::size_t remaining = 0;
        for (std::size_t t = from; t < tris.size(); ++t)
            if (free(tris[t])) ++remaining;
        if (current.size() + remaining <= best.size()) return;
        for (std::size_t t = from; t < tris.size(); ++t) {
            if (!free(tris[t])) continue;
            mark(tris[t], true);
            current.push_back(t);
            run(t + 1);
            current.pop_back();
            mark(tris[t], false);
            if (target_hit || exhausted) return;
        }
    }
};

}  // namespace

PackingResult max_disjoint_triangles(const Graph& g, std::optional<std::uint64_t> target,
                                     std::uint64_t budget) {
    TriangleSet tris = enumerate_triangles(g);
    PackingResult out;
    if (target && *target == 0) {
        out.exact = false;
        return out;  // the empty packing already meets the target
    }

    PackingSearch search{tris, target, budget,
                         std::vector<bool>(g.vertex_count(), false), {}, {}, 0, false, false};
    // greedy seed in lexicographic order
    for (std::size_t t = 0; t < tris.size(); ++t) {
        if (search.free(tris[t])) {
            search.mark(tris[t], true);
            search.best.push_back(t);
        }
    }
    for (std::size_t t : search.best) search.mark(tris[t], false);
    if (target && search.best.size() >= *target) {
        search.target_hit = true;
    } else {
        search.run(0);
    }

    out.size = search.best.size();
    out.exact = !search.exhausted && !search.target_hit;
    for (std::size_t t : search.best) out.triangles.push_back(tris[t]);
    return out;
}

DenseCoreReport dense_core(const Graph& g, std::uint64_t ell, double xi) {
    if (!(xi > 0.0)) throw InputError("xi must be positive");
    if (ell == 0) throw InputError("ell must be positive");
    if (connected_components(g).size() != 1)
        throw PreconditionError("dense_core requires a connected graph");
    std::uint64_t total = count_triangles(g);
    if (total < ell)
        throw PreconditionError("dense_core requires at least ell triangles");

    double ld = static_cast<double>(ell);
    double l13 = std::cbrt(ld);
    double l23 = l13 * l13;

    DenseCoreReport r;
    double excess = static_cast<double>(g.edge_count()) - static_cast<double>(g.vertex_count());
    r.precondition_ok = excess <= 0.5 * l23 / std::sqrt(xi) - 1.0 + 1e-9;

    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    ExcessSubgraph g1 = excess_subgraph(g, all);
    r.lost_to_tree_types = total - g1.triangle_count;

    double degree_cut = xi * l13;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g1.graph.vertex_count(); ++v)
        if (static_cast<double>(g1.graph.degree(v)) > degree_cut) keep.push_back(v);
    Subgraph pruned = induced_subgraph(g1.graph, keep);

    r.core = std::move(pruned.graph);
    r.original_of.reserve(pruned.original_of.size());
    for (Vertex v : pruned.original_of) r.original_of.push_back(g1.original_of[v]);
    r.core_vertices = r.core.vertex_count();
    r.core_edges = r.core.edge_count();
    r.core_triangles = count_triangles(r.core);
    r.lost_to_pruning = g1.triangle_count - r.core_triangles;

    double shrink = std::max(0.0, 1.0 - 2.0 * std::sqrt(xi));
    r.size_bound = l13 / (xi * std::sqrt(xi));
    r.edge_bound = analytic::critical_coefficient() * std::pow(shrink, 2.0 / 3.0) * l23;
    r.triangle_bound = shrink * ld;
    r.size_ok = static_cast<double>(r.core_vertices) <= r.size_bound + 1e-9;
    r.edges_ok = static_cast<double>(r.core_edges) >= r.edge_bound - 1e-9;
    r.triangles_ok = static_cast<double>(r.core_triangles) >= r.triangle_bound - 1e-9;
    return r;
}

namespace {

// Suffixes of the min-degree peeling order, smallest surviving set first.
// Returns candidate (vertex set, triangle count) pairs.
std::vector<std::pair<std::vector<Vertex>, std::uint64_t>> peeling_suffixes(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::uint64_t> degree(n);
    std::vector<bool> alive(n, true);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

    std::uint64_t total = count_triangles(g);
    std::uint64_t triangles = total;
    std::vector<Vertex> peel_order;
    std::vector<std::uint64_t> tri_after;  // triangles after removing peel_order[0..i]

    for (Vertex step = 0; step < n; ++step) {
        Vertex pick = kNoVertex;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && (pick == kNoVertex || degree[v] < degree[pick])) pick = v;
        // triangles through pick among surviving vertices
        std::uint64_t lost = 0;
        auto nb = g.neighbors(pick);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (!alive[nb[i]]) continue;
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (alive[nb[j]] && g.has_edge(nb[i], nb[j])) ++lost;
        }
        alive[pick] = false;
        for (Vertex u : nb)
            if (alive[u]) --degree[u];
        triangles -= lost;
        peel_order.push_back(pick);
        tri_after.push_back(triangles);
    }

    std::vector<std::pair<std::vector<Vertex>, std::uint64_t>> out;
    std::vector<Vertex> suffix;  // grows from the last-peeled end
    out.push_back({{}, 0});
    for (std::size_t i = n; i-- > 1;) {
        suffix.push_back(peel_order[i]);
        auto sorted = suffix;
        std::sort(sorted.begin(), sorted.end());
        out.push_back({std::move(sorted), tri_after[i - 1]});
    }
    if (n > 0) {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 0);
        out.push_back({std::move(all), total});
    }
    return out;
}

}  // namespace

EventClassification classify_events(const Graph& g, std::uint64_t k, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0, 1)");
    double kd = static_cast<double>(k);

    EventClassification r;
    r.k = k;
    r.eps = eps;
    r.disjoint_threshold = ceil_threshold((1.0 - eps) * kd);
    r.clique_triangle_threshold = ceil_threshold((1.0 - eps) * kd);
    r.component_threshold = ceil_threshold((1.0 - 2.0 * eps) * kd);
    r.clique_size_bound = (1.0 + eps) * std::cbrt(6.0 * kd);

    if (r.disjoint_threshold == 0) {
        r.d_event = true;
        r.packing.exact = false;
    } else {
        r.packing = max_disjoint_triangles(g, r.disjoint_threshold);
        r.d_event = r.packing.size >= r.disjoint_threshold;
    }

    auto components = tisg_components(g);
    for (const auto& c : components) {
        if (c.triangle_count > r.max_component_triangles || r.t_witness.empty()) {
            r.max_component_triangles = c.triangle_count;
            r.t_witness = c.vertices;
        }
    }
    r.t_event = r.max_component_triangles >= r.component_threshold;

    auto try_witness = [&](const std::vector<Vertex>& candidate,
                           std::optional<std::uint64_t> known_triangles) {
        if (r.c_event) return;
        if (static_cast<double>(candidate.size()) > r.clique_size_bound + 1e-9) return;
        std::uint64_t tri =
            known_triangles ? *known_triangles : triangle_count_within(g, candidate);
        if (tri >= r.clique_triangle_threshold) {
            r.c_event = true;
            r.c_witness = candidate;
            r.c_witness_triangles = tri;
        }
    };

    if (r.clique_triangle_threshold == 0) {
        r.c_event = true;  // the empty set is a witness
    } else if (!components.empty()) {
        // spectral candidate from the largest component, then peeling suffixes
        const TisgComponent& largest = components.back();
        if (eps < 0.5) {
            NearCliqueReport nc = spectral_near_clique(largest.local, k, eps);
            std::vector<Vertex> candidate;
            candidate.reserve(nc.v_prime.size());
            for (Vertex v : nc.v_prime) candidate.push_back(largest.original_of[v]);
            try_witness(candidate, std::nullopt);
        }
        for (const auto& [suffix, tri] : peeling_suffixes(g)) {
            if (r.c_event) break;
            try_witness(suffix, tri);
        }
    }
    return r;
}

}  // namespace tritail
