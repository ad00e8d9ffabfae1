#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tritail/analytic.hpp"
#include "tritail/errors.hpp"

using namespace tritail;
using namespace tritail::analytic;

namespace {

// Independent coarse bisection oracle for f^{-1}, used to pin expected h values.
double invert_f_oracle(double y) {
    double lo = 0.0, hi = 1.0;
    while ((std::sqrt(2.0) / 3.0) * std::pow(hi + 1.0, 1.5) + 3.0 * (hi + 1.0) < y) hi *= 2.0;
    for (int i = 0; i < 300; ++i) {
        double mid = 0.5 * (lo + hi);
        double fmid = (std::sqrt(2.0) / 3.0) * std::pow(mid + 1.0, 1.5) + 3.0 * (mid + 1.0);
        (fmid < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("context constants") {
    AnalyticContext ctx(2.0);
    CHECK(ctx.d0 == doctest::Approx(8.0 / 6.0));
    CHECK(ctx.d1 == doctest::Approx(std::exp(1.0) * 8.0 / 6.0));
    CHECK(critical_coefficient() > 1.65);
    CHECK(critical_coefficient() < 1.66);
    CHECK_THROWS_AS(AnalyticContext(-1.0), InputError);
}

TEST_CASE("f values") {
    CHECK(f_of(1.0) == doctest::Approx(22.0 / 3.0).epsilon(1e-12));
    CHECK(f_of(0.0) == doctest::Approx(std::sqrt(2.0) / 3.0 + 3.0).epsilon(1e-12));
    CHECK(f_of(600.0) == doctest::Approx(8748.6).epsilon(1e-4));
    CHECK(f_of(600.0) < 1e4);
    CHECK_THROWS_AS(f_of(-0.5), InputError);

    // strictly increasing and convex on a grid
    double prev = f_of(0.0);
    double prev_slope = 0.0;
    for (int i = 1; i <= 100; ++i) {
        double x = 0.3 * i;
        double val = f_of(x);
        CHECK(val > prev);
        double slope = (val - prev) / 0.3;
        if (i > 1) CHECK(slope > prev_slope);
        prev = val;
        prev_slope = slope;
    }
}

TEST_CASE("h piecewise values") {
    CHECK(h_of(1.0) == 0.0);
    CHECK(h_of(-5.0) == 0.0);
    CHECK(h_of(1.9999) == 0.0);
    CHECK(h_of(2.0) == 1.0);
    CHECK(h_of(5.0) == 1.0);
    CHECK(h_of(10.0) == 1.0);

    CHECK(h_of(11.0) == doctest::Approx(invert_f_oracle(11.0)).epsilon(1e-9));
    CHECK(h_of(11.0) == doctest::Approx(1.8936).epsilon(1e-3));
    CHECK(h_of(1e4) > 600.0);
    CHECK(h_of(1e4) == doctest::Approx(invert_f_oracle(1e4)).epsilon(1e-9));
    CHECK(h_of(1e4) == doctest::Approx(660.21).epsilon(1e-3));
    CHECK(h_of(1e6) > 14000.0);  // used by the integer-grid inequality
}

TEST_CASE("h round trip and monotonicity") {
    for (double y : {10.0001, 10.5, 11.0, 42.0, 1e3, 1e5, 1e7, 1e9})
        CHECK(std::abs(f_of(h_of(y)) - y) <= 1e-9 * y);
    double prev = -1.0;
    for (double y = -3.0; y < 40.0; y += 0.37) {
        CHECK(h_of(y) >= prev);
        prev = h_of(y);
    }
}

TEST_CASE("h derivative") {
    CHECK(h_prime(11.0) == doctest::Approx(0.2379).epsilon(2e-3));
    CHECK(h_prime(1e4) < 0.1);
    CHECK_THROWS_AS(h_prime(10.0), std::domain_error);
    CHECK_THROWS_AS(h_prime(3.0), std::domain_error);

    // two-sided asymptotic envelope at y = 1e9 with kappa = 0.01
    double y = 1e9;
    double a = critical_coefficient();
    double rate = (2.0 / 3.0) * std::pow(y, -1.0 / 3.0);
    CHECK(h_prime(y) >= (a - 0.01) * rate);
    CHECK(h_prime(y) <= (a + 0.01) * rate);

    // matches the slope of h
    for (double yy : {10.5, 20.0, 100.0, 1e6}) {
        double delta = yy * 1e-4;
        if (yy - delta <= 10.0) delta = (yy - 10.0) / 2;
        double numeric = (h_of(yy + delta) - h_of(yy - delta)) / (2.0 * delta);
        CHECK(h_prime(yy) == doctest::Approx(numeric).epsilon(1e-6));
    }
}

TEST_CASE("kruskal katona bound") {
    CHECK(kruskal_katona_bound(3) == doctest::Approx(2.4495).epsilon(1e-4));
    CHECK(kruskal_katona_bound(6) == doctest::Approx(6.9282).epsilon(1e-4));
    CHECK(kruskal_katona_bound(6) >= 4.0);    // K4
    CHECK(kruskal_katona_bound(15) == doctest::Approx(27.386).epsilon(1e-4));
    CHECK(kruskal_katona_bound(15) >= 20.0);  // K6
}

TEST_CASE("integer grid inequalities") {
    auto [a1, a2] = check_h_integer_shifts(0, 100'000);
    CHECK(a1);
    CHECK(a2);
    auto [b1, b2] = check_h_integer_shifts(10'000, 200'000);
    CHECK(b1);
    CHECK(b2);
    auto [c1, c2] = check_h_integer_shifts(1, 25);
    CHECK(c1);
    CHECK(c2);
}

TEST_CASE("poisson tail") {
    CHECK(poisson_tail(3.7, 0) == 1.0);
    CHECK(poisson_tail(4.0 / 3.0, 1) == doctest::Approx(1.0 - std::exp(-4.0 / 3.0)).epsilon(1e-12));
    CHECK(poisson_tail(4.0 / 3.0, 1) == doctest::Approx(0.736403).epsilon(1e-6));
    CHECK(poisson_tail(1.0, 2) == doctest::Approx(1.0 - 2.0 * std::exp(-1.0)).epsilon(1e-12));
    CHECK(poisson_tail(1.0, 2) == doctest::Approx(0.264241).epsilon(1e-6));

    for (double lambda : {0.2, 1.0, 4.5, 25.0}) {
        for (std::uint64_t k = 1; k < 40; ++k) {
            double cdf = 0.0;
            for (std::uint64_t j = 0; j < k; ++j) cdf += poisson_pmf(lambda, j);
            CHECK(std::abs(poisson_tail(lambda, k) + cdf - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("expected isolated packings") {
    auto pe = expected_isolated_packings(10, 2.0, 1);
    // 120 * 0.008 * 0.8^21 and 120 * 0.008, evaluated independently
    double direct_bound = 120.0 * 0.008;
    double direct_exact = direct_bound * std::pow(0.8, 21.0);
    CHECK(pe.bound == doctest::Approx(direct_bound).epsilon(1e-12));
    CHECK(pe.exact == doctest::Approx(direct_exact).epsilon(1e-12));
    CHECK(pe.exact == doctest::Approx(0.0088545).epsilon(1e-4));

    // monotone vanishing as d -> 0
    double prev = 1.0;
    for (double d : {1.0, 0.1, 0.01, 0.001}) {
        double now = expected_isolated_packings(10, d, 1).exact;
        CHECK(now < prev);
        prev = now;
    }
    CHECK(prev < 1e-9);

    // bound <= (1/k!) (d^3/6)^k, tight at large n
    auto big = expected_isolated_packings(1'000'000, 2.0, 3);
    double remark = (1.0 / 6.0) * std::pow(8.0 / 6.0, 3.0);
    CHECK(big.bound <= remark * (1.0 + 1e-9));
    CHECK(big.bound == doctest::Approx(0.3951).epsilon(1e-3));
    CHECK(big.exact <= big.bound);

    CHECK_THROWS_AS(expected_isolated_packings(10, 2.0, 4), PreconditionError);
}

TEST_CASE("clique lower bound") {
    auto cl = clique_lower_bound(100, 1.0, 36);
    CHECK(cl.clique_size == 6);  // (6*36)^{1/3} = 6 exactly
    CHECK(cl.log_probability == doctest::Approx(-30.0 * std::log(10.0)).epsilon(1e-12));

    CHECK(clique_lower_bound(50, 1.0, 1).clique_size == 2);

    auto big = clique_lower_bound(10'000, 3.0, 100);
    CHECK(big.clique_size == 9);  // ceil(8.434)
    CHECK(big.log_probability == doctest::Approx(36.0 * std::log(3e-4)).epsilon(1e-9));

    CHECK_THROWS_AS(clique_lower_bound(5, 1.0, 1000), PreconditionError);
}

TEST_CASE("rarity bound") {
    CHECK(tisg_rarity_bound(100, 5, 0.0) == doctest::Approx(1e-2).epsilon(1e-12));
    CHECK(tisg_rarity_bound(100, 1, 0.0) == 1.0);
    double h11 = invert_f_oracle(11.0);
    CHECK(tisg_rarity_bound(100, 11, 0.0) ==
          doctest::Approx(std::pow(100.0, -h11)).epsilon(1e-9));
    CHECK(tisg_rarity_bound(100, 11, 0.0) == doctest::Approx(1.63e-4).epsilon(1e-2));
}

TEST_CASE("partition sum") {
    BoundParams zero;
    zero.eta = 0.0;
    zero.alpha = 0.0;
    CHECK(partition_sum_upper_bound_log(100, 2.0, 0, zero) == doctest::Approx(0.0));
    CHECK(partition_sum_upper_bound_log(100, 2.0, 1, zero) ==
          doctest::Approx(std::log(7.0 / 3.0)).epsilon(1e-12));

    // below the h cutoff the sum is dominated by e^{d0 + alpha sqrt k}
    BoundParams p;
    p.eta = 0.0;
    for (std::uint64_t k : {10ULL, 500ULL, 20'000ULL}) {
        double d0 = 27.0 / 6.0;
        double cap = d0 + p.alpha * std::sqrt(static_cast<double>(k));
        CHECK(partition_sum_upper_bound_log(1000, 3.0, k, p) <= cap + 1e-9);
    }
}

TEST_CASE("phase boundary") {
    double k_star = phase_boundary_k(1'000'000);
    CHECK(k_star == doctest::Approx(112.6).epsilon(5e-3));
    double lhs = std::cbrt(k_star) * std::log(k_star);
    CHECK(lhs == doctest::Approx(critical_coefficient() * std::log(1e6)).epsilon(1e-9));

    CHECK(phase_boundary_k(10'000'000) > phase_boundary_k(1'000'000));

    // the small-n root also satisfies its defining equation
    double small = phase_boundary_k(3);
    CHECK(std::cbrt(small) * std::log(small) ==
          doctest::Approx(critical_coefficient() * std::log(3.0)).epsilon(1e-9));
    CHECK(small == doctest::Approx(3.3597).epsilon(1e-3));
}

TEST_CASE("regime classification") {
    CHECK(regime_of(1'000'000, 10, 0.1) == Regime::kSubcritical);
    CHECK(regime_of(1'000'000, 10'000, 0.1) == Regime::kSupercritical);
    double k_star = phase_boundary_k(1'000'000);
    CHECK(regime_of(1'000'000, std::round(k_star), 0.05) == Regime::kCriticalWindow);
    CHECK(regime_name(Regime::kCriticalWindow) == "critical-window");
}

TEST_CASE("tail bound expressions") {
    BoundParams p;
    p.c = 0.0;
    auto b = tail_exponent_expressions(1000, std::exp(1.0), p);
    CHECK(b.disjoint_lower_log == doctest::Approx(-std::exp(1.0)).epsilon(1e-12));
    CHECK(b.disjoint_upper_log == doctest::Approx(-std::exp(1.0)).epsilon(1e-12));

    BoundParams q;
    q.epsilon = 0.05;
    auto s = tail_exponent_expressions(1'000'000, 100.0, q);
    double scale = std::pow(100.0, 2.0 / 3.0) * std::log(1e6);
    CHECK(s.clique_lower_log ==
          doctest::Approx(-(critical_coefficient() + 0.05) * scale).epsilon(1e-12));
    CHECK(s.clique_upper_log ==
          doctest::Approx(-(critical_coefficient() - 0.05) * scale).epsilon(1e-12));

    for (double k : {2.0, 7.0, 95.0}) {
        auto o = tail_exponent_expressions(5000, k, q);
        CHECK(o.disjoint_lower_log <= o.disjoint_upper_log);
        CHECK(o.clique_lower_log <= o.clique_upper_log);
    }
    CHECK_THROWS_AS(tail_exponent_expressions(100, 1.0, q), PreconditionError);
}
