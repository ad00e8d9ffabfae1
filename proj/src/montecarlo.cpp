#include "tritail/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <thread>

#include "tritail/analytic.hpp"
#include "tritail/rng.hpp"

namespace tritail::mc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_density(Vertex n, double d) {
    if (!(d > 0.0) || !(d < static_cast<double>(n)))
        throw PreconditionError("edge density d/n requires 0 < d < n");
}

std::vector<VertexPair> sample_er_edges(Vertex n, double p, SplitMix64& rng) {
    std::vector<VertexPair> edges;
    if (n < 2) return edges;
    const double log_miss = std::log1p(-p);
    // walk the pairs (0,1),(0,2),...,(n-2,n-1) with geometric jumps
    std::uint64_t row = 0, col = 1;
    auto advance = [&](std::uint64_t steps) {
        col += steps;
        while (col >= n && row + 2 < n) {
            std::uint64_t wrapped = col - n;
            ++row;
            col = row + 1 + wrapped;
        }
    };
    while (row + 1 < n && col < n) {
        double u = rng.next_unit();
        std::uint64_t skip = static_cast<std::uint64_t>(std::log1p(-u) / log_miss);
        advance(skip);
        if (row + 1 >= n || col >= n) break;
        edges.emplace_back(static_cast<Vertex>(row), static_cast<Vertex>(col));
        advance(1);
    }
    return edges;
}

Graph sample_er_stream(Vertex n, double d, std::uint64_t stream) {
    SplitMix64 rng(stream);
    auto edges = sample_er_edges(n, d / static_cast<double>(n), rng);
    return Graph::build(n, edges);
}

std::array<double, 2> wilson_ci95(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    double nd = static_cast<double>(trials);
    double p = static_cast<double>(successes) / nd;
    double denom = 1.0 + z * z / nd;
    double center = (p + z * z / (2.0 * nd)) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / nd + z * z / (4.0 * nd * nd)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

// Runs fn(trial) on `workers` threads with a strided split; fn must only
// touch per-trial state.
template <typename Fn>
void parallel_trials(std::uint64_t trials, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || trials < 2) {
        for (std::uint64_t t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t t = w; t < trials; t += workers) fn(t);
        });
    }
    for (auto& th : pool) th.join();
}

struct ExhaustiveLaw {
    std::map<std::uint64_t, double> pmf;
    std::map<std::uint64_t, std::uint64_t> graph_counts;
    std::uint64_t graphs = 0;
};

ExhaustiveLaw exhaustive_law(Vertex n, double d) {
    check_density(n, d);
    std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (pairs > 20)
        throw PreconditionError("exhaustive mode requires C(n,2) <= 20 (n <= 6)");
    double p = d / static_cast<double>(n);

    std::vector<VertexPair> pair_list;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
    std::vector<std::uint32_t> triple_masks;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                std::uint32_t mask = 0;
                for (std::uint32_t e = 0; e < pair_list.size(); ++e) {
                    auto [x, y] = pair_list[e];
                    bool in = (x == a || x == b || x == c) && (y == a || y == b || y == c);
                    if (in) mask |= 1u << e;
                }
                triple_masks.push_back(mask);
            }

    std::vector<double> weight_by_edges(pairs + 1);
    for (std::uint64_t e = 0; e <= pairs; ++e)
        weight_by_edges[e] = std::pow(p, static_cast<double>(e)) *
                             std::pow(1.0 - p, static_cast<double>(pairs - e));

    ExhaustiveLaw law;
    law.graphs = 1ULL << pairs;
    for (std::uint64_t mask = 0; mask < law.graphs; ++mask) {
        std::uint64_t tri = 0;
        for (std::uint32_t tm : triple_masks)
            if ((mask & tm) == tm) ++tri;
        law.pmf[tri] += weight_by_edges[std::popcount(mask)];
        ++law.graph_counts[tri];
    }
    return law;
}

}  // namespace

Graph sample_er(Vertex n, double d, std::uint64_t seed) {
    check_density(n, d);
    return sample_er_stream(n, d, stream_seed(seed, 0));
}

TailEstimate estimate_tail(Vertex n, double d, std::uint64_t k, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers) {
    check_density(n, d);
    if (trials == 0) throw PreconditionError("trials must be >= 1");
    auto start = Clock::now();

    std::vector<std::uint8_t> hit(trials, 0);
    parallel_trials(trials, workers, [&](std::uint64_t t) {
        Graph g = sample_er_stream(n, d, stream_seed(seed, t));
        hit[t] = count_triangles(g) >= k ? 1 : 0;
    });
    std::uint64_t successes = 0;
    for (auto h : hit) successes += h;

    TailEstimate est;
    est.successes = successes;
    est.trials = trials;
    est.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
    est.ci95 = wilson_ci95(successes, trials);
    est.seed = seed;
    est.wall_time_s = seconds_since(start);
    return est;
}

TailEstimate exhaustive_tail(Vertex n, double d, std::uint64_t k) {
    auto start = Clock::now();
    ExhaustiveLaw law = exhaustive_law(n, d);
    double prob = 0.0;
    std::uint64_t graphs_in_event = 0;
    for (const auto& [tri, mass] : law.pmf)
        if (tri >= k) prob += mass;
    for (const auto& [tri, cnt] : law.graph_counts)
        if (tri >= k) graphs_in_event += cnt;

    TailEstimate est;
    est.successes = graphs_in_event;
    est.trials = law.graphs;
    est.p_hat = prob;
    est.std_err = 0.0;
    est.ci95 = {prob, prob};
    est.seed = 0;
    est.exact = true;
    est.wall_time_s = seconds_since(start);
    return est;
}

double tv_distance_to_poisson(const std::map<std::uint64_t, double>& law, double lambda) {
    std::uint64_t top = law.empty() ? 0 : law.rbegin()->first;
    double sum = 0.0;
    for (std::uint64_t j = 0; j <= top; ++j) {
        auto it = law.find(j);
        double pj = it == law.end() ? 0.0 : it->second;
        sum += std::abs(pj - analytic::poisson_pmf(lambda, j));
    }
    sum += analytic::poisson_tail(lambda, top + 1);  // mass the law never reaches
    return 0.5 * sum;
}

DistributionReport empirical_distribution(Vertex n, double d, std::uint64_t trials,
                                          std::uint64_t seed, unsigned workers) {
    check_density(n, d);
    if (trials == 0) throw PreconditionError("trials must be >= 1");
    auto start = Clock::now();

    std::vector<std::uint32_t> counts(trials);
    parallel_trials(trials, workers, [&](std::uint64_t t) {
        Graph g = sample_er_stream(n, d, stream_seed(seed, t));
        counts[t] = static_cast<std::uint32_t>(count_triangles(g));
    });

    DistributionReport rep;
    for (auto c : counts) ++rep.histogram[c];
    rep.lambda = d * d * d / 6.0;
    rep.trials = trials;
    rep.seed = seed;
    std::map<std::uint64_t, double> law;
    for (const auto& [tri, cnt] : rep.histogram)
        law[tri] = static_cast<double>(cnt) / static_cast<double>(trials);
    rep.tv_distance_to_poisson = tv_distance_to_poisson(law, rep.lambda);
    rep.wall_time_s = seconds_since(start);
    return rep;
}

DistributionReport exhaustive_distribution(Vertex n, double d) {
    auto start = Clock::now();
    ExhaustiveLaw law = exhaustive_law(n, d);
    DistributionReport rep;
    rep.pmf = law.pmf;
    rep.histogram = law.graph_counts;
    rep.lambda = d * d * d / 6.0;
    rep.trials = law.graphs;
    rep.exact = true;
    rep.tv_distance_to_poisson = tv_distance_to_poisson(law.pmf, rep.lambda);
    rep.wall_time_s = seconds_since(start);
    return rep;
}

ConditionalReport conditional_structure_experiment(Vertex n, double d, std::uint64_t k,
                                                   double eps, std::uint64_t samples,
                                                   std::uint64_t seed, unsigned workers,
                                                   std::uint64_t max_total_draws) {
    check_density(n, d);
    if (samples == 0) throw PreconditionError("samples must be >= 1");
    if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0, 1)");
    auto start = Clock::now();
    std::uint64_t per_sample_cap = std::max<std::uint64_t>(1, max_total_draws / samples);

    struct Outcome {
        std::uint64_t draws = 0;
        bool d_event = false, c_event = false, t_event = false;
        bool gave_up = false;
    };
    std::vector<Outcome> outcomes(samples);
    parallel_trials(samples, workers, [&](std::uint64_t i) {
        SplitMix64 rng(stream_seed(seed, i));
        Outcome& out = outcomes[i];
        for (std::uint64_t attempt = 0; attempt < per_sample_cap; ++attempt) {
            auto edges = sample_er_edges(n, d / static_cast<double>(n), rng);
            Graph g = Graph::build(n, edges);
            ++out.draws;
            if (count_triangles(g) >= k) {
                EventClassification ev = classify_events(g, k, eps);
                out.d_event = ev.d_event;
                out.c_event = ev.c_event;
                out.t_event = ev.t_event;
                return;
            }
        }
        out.gave_up = true;
    });

    ConditionalReport rep;
    rep.samples = samples;
    rep.seed = seed;
    std::uint64_t d_hits = 0, c_hits = 0, t_hits = 0, dc_hits = 0;
    for (const auto& out : outcomes) {
        rep.total_draws += out.draws;
        if (out.gave_up)
            throw FeasibilityError(
                "conditional sampling acceptance rate below floor after " +
                std::to_string(per_sample_cap) +
                " draws for one sample; increase d or decrease k");
        d_hits += out.d_event;
        c_hits += out.c_event;
        t_hits += out.t_event;
        dc_hits += out.d_event || out.c_event;
    }
    double sd = static_cast<double>(samples);
    rep.acceptance_rate = sd / static_cast<double>(rep.total_draws);
    rep.d_freq = static_cast<double>(d_hits) / sd;
    rep.c_freq = static_cast<double>(c_hits) / sd;
    rep.t_freq = static_cast<double>(t_hits) / sd;
    rep.d_or_c_freq = static_cast<double>(dc_hits) / sd;
    rep.wall_time_s = seconds_since(start);
    return rep;
}

Graph plant_disjoint_triangles(Vertex n, double d, std::uint64_t k, std::uint64_t seed) {
    if (3 * k > n) throw PreconditionError("plant_disjoint_triangles requires 3k <= n");
    check_density(n, d);
    SplitMix64 rng(stream_seed(seed, 0));
    auto edges = sample_er_edges(n, d / static_cast<double>(n), rng);
    for (std::uint64_t i = 0; i < k; ++i) {
        Vertex a = static_cast<Vertex>(3 * i);
        edges.emplace_back(a, a + 1);
        edges.emplace_back(a, a + 2);
        edges.emplace_back(a + 1, a + 2);
    }
    return Graph::build(n, edges);
}

Graph plant_clique(Vertex n, double d, std::uint64_t m, std::uint64_t seed) {
    if (m > n) throw PreconditionError("plant_clique requires m <= n");
    check_density(n, d);
    SplitMix64 rng(stream_seed(seed, 0));
    auto edges = sample_er_edges(n, d / static_cast<double>(n), rng);
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

}  // namespace tritail::mc
