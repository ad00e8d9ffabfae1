#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "tritail/graph.hpp"
#include "tritail/structure.hpp"

namespace tritail::mc {

// G(n, d/n) by geometric skipping over the lexicographic pair order;
// expected work proportional to the number of edges. Same seed, same graph.
// Trial t of the estimators below draws from the stream (seed, t); this
// function is stream (seed, 0).
Graph sample_er(Vertex n, double d, std::uint64_t seed);

struct TailEstimate {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double p_hat = 0.0;
    double std_err = 0.0;
    std::array<double, 2> ci95{0.0, 0.0};  // Wilson
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
    bool exact = false;  // true when produced by exhaustive enumeration
};

// Monte Carlo frequency of {triangle count >= k} over `trials` samples.
// Results do not depend on `workers`.
TailEstimate estimate_tail(Vertex n, double d, std::uint64_t k, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers = 1);

// Exact P(N >= k) by enumerating all 2^C(n,2) graphs weighted by
// p^e (1-p)^(C(n,2)-e). Requires C(n,2) <= 20. successes counts graphs in the
// event, trials the graphs enumerated; p_hat is the exact weighted sum.
TailEstimate exhaustive_tail(Vertex n, double d, std::uint64_t k);

struct DistributionReport {
    std::map<std::uint64_t, std::uint64_t> histogram;  // MC mode: counts
    std::map<std::uint64_t, double> pmf;               // exhaustive mode
    double tv_distance_to_poisson = 0.0;
    double lambda = 0.0;  // d^3/6
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
    bool exact = false;
};

DistributionReport empirical_distribution(Vertex n, double d, std::uint64_t trials,
                                          std::uint64_t seed, unsigned workers = 1);
DistributionReport exhaustive_distribution(Vertex n, double d);

// Total variation distance between a law on {0,1,...} and Poi(lambda);
// Poisson mass beyond the largest support point counts in full.
double tv_distance_to_poisson(const std::map<std::uint64_t, double>& law, double lambda);

struct ConditionalReport {
    std::uint64_t samples = 0;
    std::uint64_t total_draws = 0;
    double acceptance_rate = 0.0;  // estimates P(N >= k)
    double d_freq = 0.0;
    double c_freq = 0.0;
    double t_freq = 0.0;
    double d_or_c_freq = 0.0;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
};

// Rejection sampling: redraw G(n, d/n) until the triangle count reaches k,
// classify the accepted graph, repeat `samples` times. Conditioned sample i
// draws from its own stream, so results are worker-count independent; each
// sample may use at most ceil(max_total_draws / samples) draws before the
// run aborts with FeasibilityError (advise larger d or smaller k).
ConditionalReport conditional_structure_experiment(Vertex n, double d, std::uint64_t k,
                                                   double eps, std::uint64_t samples,
                                                   std::uint64_t seed, unsigned workers = 1,
                                                   std::uint64_t max_total_draws = 10'000'000);

// G(n, d/n) with the 3k edges of k disjoint triangles on {0,...,3k-1} forced.
Graph plant_disjoint_triangles(Vertex n, double d, std::uint64_t k, std::uint64_t seed);

// G(n, d/n) with all C(m,2) edges on {0,...,m-1} forced.
Graph plant_clique(Vertex n, double d, std::uint64_t m, std::uint64_t seed);

}  // namespace tritail::mc
