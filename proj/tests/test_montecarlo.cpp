#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "fixtures.hpp"
#include "tritail/analytic.hpp"
#include "tritail/montecarlo.hpp"

using namespace tritail;

TEST_CASE("sampler determinism") {
    Graph a = mc::sample_er(300, 2.0, 42);
    Graph b = mc::sample_er(300, 2.0, 42);
    CHECK(a == b);
    Graph c = mc::sample_er(300, 2.0, 43);
    CHECK_FALSE(a == c);
}

TEST_CASE("sampler edge count moments") {
    // expected edges C(n,2) d/n ~ 9999, sd ~ 100; a fixed seed stays within 5 sd
    Graph g = mc::sample_er(10'000, 2.0, 7);
    double mean = (10'000.0 * 9'999.0 / 2.0) * (2.0 / 10'000.0);
    double sd = std::sqrt(mean * (1.0 - 2.0 / 10'000.0));
    CHECK(std::abs(static_cast<double>(g.edge_count()) - mean) < 5.0 * sd);

    // average over independent seeds lands much closer
    double acc = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s)
        acc += static_cast<double>(mc::sample_er(2'000, 2.0, 100 + s).edge_count());
    double avg = acc / 50.0;
    double mean2 = (2'000.0 * 1'999.0 / 2.0) * (2.0 / 2'000.0);
    CHECK(std::abs(avg - mean2) < 5.0 * std::sqrt(mean2 / 50.0));
}

TEST_CASE("sampler saturates as d approaches n") {
    Graph g = mc::sample_er(3, 2.9999, 11);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);  // p = 0.99996..., all three pairs present
    CHECK_THROWS_AS(mc::sample_er(3, 3.0, 11), PreconditionError);
    CHECK_THROWS_AS(mc::sample_er(3, -1.0, 11), PreconditionError);
}

TEST_CASE("exhaustive tail on four vertices") {
    mc::TailEstimate t = mc::exhaustive_tail(4, 2.0, 1);
    CHECK(t.exact);
    CHECK(t.p_hat == 23.0 / 64.0);  // exact dyadic value
    CHECK(t.successes == 23);
    CHECK(t.trials == 64);
    CHECK(t.std_err == 0.0);

    CHECK(mc::exhaustive_tail(4, 2.0, 0).p_hat == 1.0);
    CHECK(mc::exhaustive_tail(4, 2.0, 4).p_hat == doctest::Approx(1.0 / 64.0));  // only K4
    CHECK(mc::exhaustive_tail(4, 2.0, 5).p_hat == 0.0);
    CHECK_THROWS_AS(mc::exhaustive_tail(30, 2.0, 1), PreconditionError);
}

TEST_CASE("exhaustive distribution on four vertices") {
    mc::DistributionReport rep = mc::exhaustive_distribution(4, 2.0);
    CHECK(rep.exact);
    CHECK(rep.pmf.at(0) == 41.0 / 64.0);
    CHECK(rep.pmf.at(4) == 1.0 / 64.0);
    double mass = 0.0;
    for (const auto& [tri, p] : rep.pmf) mass += p;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("estimate_tail basics") {
    mc::TailEstimate all = mc::estimate_tail(50, 2.0, 0, 500, 3);
    CHECK(all.p_hat == 1.0);  // k = 0 succeeds always

    // n = 4, d = 2 MC agrees with the exact 23/64 within 4 standard errors
    mc::TailEstimate t = mc::estimate_tail(4, 2.0, 1, 20'000, 12345);
    CHECK(std::abs(t.p_hat - 23.0 / 64.0) < 4.0 * std::max(t.std_err, 1e-3));
    CHECK(t.ci95[0] <= t.p_hat);
    CHECK(t.ci95[1] >= t.p_hat);
    CHECK(t.successes <= t.trials);
}

TEST_CASE("tail at n = 2000 approaches the Poisson limit") {
    // P(N >= 1) -> 1 - e^{-4/3} ~ 0.7364 (finite-n bias is well under the window)
    mc::TailEstimate t = mc::estimate_tail(2000, 2.0, 1, 4000, 8, 2);
    CHECK(std::abs(t.p_hat - 0.7364) < 0.03);
}

TEST_CASE("worker count never changes the estimate") {
    mc::TailEstimate w1 = mc::estimate_tail(200, 2.0, 1, 3'000, 99, 1);
    mc::TailEstimate w3 = mc::estimate_tail(200, 2.0, 1, 3'000, 99, 3);
    mc::TailEstimate w8 = mc::estimate_tail(200, 2.0, 1, 3'000, 99, 8);
    CHECK(w1.successes == w3.successes);
    CHECK(w3.successes == w8.successes);
    CHECK(w1.p_hat == w3.p_hat);

    mc::DistributionReport d2 = mc::empirical_distribution(100, 2.0, 2'000, 5, 2);
    mc::DistributionReport d5 = mc::empirical_distribution(100, 2.0, 2'000, 5, 5);
    CHECK(d2.histogram == d5.histogram);
}

TEST_CASE("histogram counts sum to trials") {
    mc::DistributionReport rep = mc::empirical_distribution(80, 2.0, 5'000, 17, 2);
    std::uint64_t total = 0;
    for (const auto& [tri, cnt] : rep.histogram) total += cnt;
    CHECK(total == 5'000);
    CHECK(rep.trials == 5'000);
    CHECK(rep.lambda == doctest::Approx(8.0 / 6.0));
}

TEST_CASE("tv distance folds the unreached poisson mass") {
    std::map<std::uint64_t, double> at_zero{{0, 1.0}};
    double lambda = 4.0 / 3.0;
    CHECK(mc::tv_distance_to_poisson(at_zero, lambda) ==
          doctest::Approx(analytic::poisson_tail(lambda, 1)).epsilon(1e-12));

    // the Poisson law against itself (truncated far out) is almost zero
    std::map<std::uint64_t, double> poisson_self;
    for (std::uint64_t j = 0; j <= 60; ++j) poisson_self[j] = analytic::poisson_pmf(lambda, j);
    CHECK(mc::tv_distance_to_poisson(poisson_self, lambda) < 1e-12);
}

TEST_CASE("planted triangles") {
    Graph g = mc::plant_disjoint_triangles(9, 0.5, 3, 77);
    for (Vertex i = 0; i < 3; ++i) {
        Vertex a = 3 * i;
        CHECK(g.has_edge(a, a + 1));
        CHECK(g.has_edge(a, a + 2));
        CHECK(g.has_edge(a + 1, a + 2));
    }
    CHECK(count_triangles(g) >= 3);
    CHECK(max_disjoint_triangles(g, 3).size >= 3);

    Graph big = mc::plant_disjoint_triangles(30, 2.0, 5, 78);
    auto prof = profile_of(tisg_components(big));
    CHECK(prof.total >= 5);
    CHECK(max_disjoint_triangles(big, 5).size >= 5);

    CHECK_THROWS_AS(mc::plant_disjoint_triangles(8, 1.0, 3, 1), PreconditionError);
}

TEST_CASE("planted clique") {
    Graph g = mc::plant_clique(100, 1.0, 6, 5);
    std::vector<Vertex> clique = {0, 1, 2, 3, 4, 5};
    CHECK(triangle_count_within(g, clique) == 20);
    CHECK(count_triangles(g) >= 20);

    EventClassification ev = classify_events(g, 20, 0.25);
    CHECK(ev.c_event);

    Graph tiny = mc::plant_clique(50, 1.0, 2, 5);
    CHECK(tiny.has_edge(0, 1));

    CHECK_THROWS_AS(mc::plant_clique(5, 1.0, 6, 1), PreconditionError);
}

TEST_CASE("conditional experiment at k = 0 accepts everything") {
    mc::ConditionalReport rep = mc::conditional_structure_experiment(50, 2.0, 0, 0.3, 200, 21, 2);
    CHECK(rep.total_draws == 200);
    CHECK(rep.acceptance_rate == 1.0);
    CHECK(rep.d_freq == 1.0);
    CHECK(rep.c_freq == 1.0);
    CHECK(rep.t_freq == 1.0);
}

TEST_CASE("conditional experiment is worker independent") {
    mc::ConditionalReport a = mc::conditional_structure_experiment(100, 3.0, 1, 0.3, 60, 9, 1);
    mc::ConditionalReport b = mc::conditional_structure_experiment(100, 3.0, 1, 0.3, 60, 9, 4);
    CHECK(a.total_draws == b.total_draws);
    CHECK(a.d_freq == b.d_freq);
    CHECK(a.c_freq == b.c_freq);
    CHECK(a.t_freq == b.t_freq);
}

TEST_CASE("conditional experiment reports infeasibility") {
    // 20 vertices cannot hold 40 triangles at d = 0.2 within a tiny draw budget
    CHECK_THROWS_AS(
        mc::conditional_structure_experiment(20, 0.2, 40, 0.3, 4, 1, 1, 400),
        FeasibilityError);
}

TEST_CASE("planted samples always pass their own tail event") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = mc::plant_disjoint_triangles(60, 2.0, 4, seed);
        CHECK(count_triangles(g) >= 4);
    }
}
