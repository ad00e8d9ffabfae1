#pragma once

#include <cstdint>
#include <optional>

#include "tritail/graph.hpp"
#include "tritail/tig.hpp"

namespace tritail {

// Principal adjacency eigenpair by power iteration on A + I from the all-ones
// vector (the shift makes the Perron value strictly dominant on every graph,
// bipartite ones included, without moving the eigenvectors). Converges when
// successive Rayleigh quotients agree to 1e-12 relative.
struct EigenPair {
    double lambda1 = 0.0;
    std::vector<double> v1;  // unit norm, entrywise non-negative
    std::uint64_t iterations = 0;
};
EigenPair principal_eigenpair(const Graph& g);

// Vertex partition by |v1| entry against the bands
//   S3: [0, e~^{1/8}/k^{1/6}]   S2: (e~^{1/8}, 1-e~^{1/4})/k^{1/6}
//   S4: [1-e~^{1/4}, 1+e~^{1/4}]/k^{1/6}   S1: above,
// resolved in the order S1, S4, S3, S2 where the bands overlap.
struct SpectralPartition {
    double lambda1 = 0.0;
    std::vector<double> v1;
    double eps_tilde = 0.0;
    std::vector<Vertex> s1, s2, s3, s4;
    double residual_frobenius_sq = 0.0;  // 2|E| - lambda1^2
    std::uint64_t iterations = 0;
};

// Near-clique extraction: V' = S4 of the spectral partition, with the target
// inequalities |V'| <= (1+6 eps^{1/4}) k^{1/3} and D(V') >= (1-6 eps^{1/4}) k/6
// evaluated, plus the partition-size diagnostics. The hypotheses
// D >= (1-eps)k/6 and |E| <= (1+eps)k^{2/3}/2 are reported, never required:
// the partition is computed either way.
struct NearCliqueReport {
    SpectralPartition partition;
    bool hypotheses_met = false;
    bool triangle_hypothesis = false;
    bool edge_hypothesis = false;
    std::vector<Vertex> v_prime;
    std::uint64_t v_prime_triangles = 0;
    double size_bound = 0.0;
    double triangle_bound = 0.0;
    bool size_ok = false;
    bool triangles_ok = false;
    double s1_s2_bound = 0.0;  // 2 e~^{1/4} k^{1/3}
    double s4_bound = 0.0;     // k^{1/3} / (1 - e~^{1/4})^2
    bool s1_ok = false, s2_ok = false, s4_ok = false;
};
NearCliqueReport spectral_near_clique(const Graph& g, std::uint64_t k, double eps);

// Maximum set of pairwise vertex-disjoint triangles by branch-and-bound over
// the sorted triangle list, greedy-seeded. With `target`, returns as soon as
// a packing of that size is found (exact = false unless the search finished).
struct PackingResult {
    std::vector<Triangle> triangles;
    std::uint64_t size = 0;
    bool exact = false;
};
PackingResult max_disjoint_triangles(const Graph& g,
                                     std::optional<std::uint64_t> target = std::nullopt,
                                     std::uint64_t budget = 1'000'000);

// The two-step core extraction: excess subgraph of a deterministic spanning
// tree, then one pruning pass removing vertices of degree <= xi ell^{1/3}.
// The three target inequalities are evaluated and reported, not asserted
// (they are promised only for large ell).
struct DenseCoreReport {
    Graph core;
    std::vector<Vertex> original_of;
    std::uint64_t core_vertices = 0;
    std::uint64_t core_edges = 0;
    std::uint64_t core_triangles = 0;
    bool precondition_ok = false;    // |E|-|V| <= xi^{-1/2} ell^{2/3}/2 - 1
    double size_bound = 0.0;         // xi^{-3/2} ell^{1/3}
    double edge_bound = 0.0;         // a (1-2 xi^{1/2})^{2/3} ell^{2/3}
    double triangle_bound = 0.0;     // (1-2 xi^{1/2}) ell
    bool size_ok = false, edges_ok = false, triangles_ok = false;
    std::uint64_t lost_to_tree_types = 0;  // D(g) - D(excess subgraph)
    std::uint64_t lost_to_pruning = 0;     // D(excess subgraph) - D(core)
};
DenseCoreReport dense_core(const Graph& g, std::uint64_t ell, double xi);

// Event classifiers at level (k, eps):
//   d_event:  >= ceil((1-eps) k) vertex-disjoint triangles (witness: packing)
//   c_event:  some V' with |V'| <= (1+eps) 6^{1/3} k^{1/3} and D(V') >= ceil((1-eps) k);
//             searched via the spectral S4 of the largest triangle-union
//             component and every suffix of a min-degree peeling order, so a
//             false answer means "no witness found", not a proof of absence
//   t_event:  some triangle-union component with >= ceil((1-2 eps) k) triangles
struct EventClassification {
    bool d_event = false;
    bool c_event = false;
    bool t_event = false;
    std::uint64_t k = 0;
    double eps = 0.0;
    std::uint64_t disjoint_threshold = 0;
    std::uint64_t clique_triangle_threshold = 0;
    std::uint64_t component_threshold = 0;
    double clique_size_bound = 0.0;
    PackingResult packing;
    std::vector<Vertex> c_witness;
    std::uint64_t c_witness_triangles = 0;
    std::uint64_t max_component_triangles = 0;
    std::vector<Vertex> t_witness;  // vertices of the component carrying the most triangles
};
EventClassification classify_events(const Graph& g, std::uint64_t k, double eps);

// ceil(x) on thresholds of the form (1-eps)k, robust to float noise.
std::uint64_t ceil_threshold(double x);

}  // namespace tritail
