#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace tritail::analytic {

// The constant (3/sqrt2)^(2/3) ~ 1.65104: coefficient of log n at the phase
// boundary, and the edges-per-Delta^(2/3) ratio at clique equality of the
// Kruskal-Katona bound.
double critical_coefficient();

// Degree parameter and its derived constants d0 = d^3/6, d1 = e*d^3/6.
struct AnalyticContext {
    double d;
    double d0;
    double d1;
    double root_tol;

    explicit AnalyticContext(double degree, double tol = 1e-12);
};

// User-supplied constants the asymptotic bounds leave unspecified. Defaults are
// conveniences, not asserted values: c = 5, alpha = pi*sqrt(2/3) (the
// Hardy-Ramanujan partition constant), eps = 0.05.
struct BoundParams {
    double eta = 0.0;        // in [0, 1)
    double alpha = 2.565099660323728;
    double c = 5.0;          // subcritical rate slack
    double c_prime = 5.0;    // first-moment remark slack
    double epsilon = 0.05;   // supercritical exponent slack
    double delta = 0.1;      // regime-condition slack

    void validate() const;
};

// f(x) = (sqrt2/3)(x+1)^{3/2} + 3(x+1); strictly increasing and convex.
double f_of(double x);
double f_prime(double x);

// Piecewise inverse of f: 0 below 2, 1 on [2, 10], f^{-1}(y) above 10
// (bracketed bisection polished by Newton, |f(h(y)) - y| <= tol * y).
double h_of(double y, double tol = 1e-12);

// h'(y) = 1 / f'(h(y)) for y > 10; throws std::domain_error elsewhere.
double h_prime(double y);

// (sqrt2/3) e^{3/2}, the triangle count ceiling for e edges.
double kruskal_katona_bound(double edges);

// Checks i + h(m - 10 i) >= h(m - 10^5) and h(m - 10^5) >= h(m) - h(10^6).
std::pair<bool, bool> check_h_integer_shifts(std::uint64_t i, std::uint64_t m);

double poisson_pmf(double lambda, std::uint64_t k);
// P(Poi(lambda) >= k), absolute error <= 1e-12.
double poisson_tail(double lambda, std::uint64_t k);

// Expected number of sets of k vertex-disjoint triangles:
//   bound = (1/k!) * prod_{i<k} C(n-3i, 3) * (d/n)^{3k}
//   exact = bound * (1 - d/n)^{3k(n-3k) + 3k(3k-1)/2 - 3k}
// where `exact` additionally requires the 3k vertices to have no other edges.
struct PackingExpectation {
    double exact;
    double bound;
    double log_exact;
    double log_bound;
};
PackingExpectation expected_isolated_packings(std::uint64_t n, double d, std::uint64_t k);

// log (d/n)^{C(m,2)} for the smallest clique with at least k triangles,
// m = min { m : m^3 >= 6k }.
struct CliqueLowerBound {
    std::uint64_t clique_size;
    double log_probability;
};
CliqueLowerBound clique_lower_bound(std::uint64_t n, double d, std::uint64_t k);

// n^{-(1-eta) h(ell)}: upper bound on the probability of a triangle-union
// component spanned by ell triangles.
double tisg_rarity_bound(std::uint64_t n, std::uint64_t ell, double eta);

// log of sum_{j=0}^{k} (1/j!) d0^j e^{alpha sqrt(k-j)} n^{-(1-eta) h(k-j-10^5)},
// evaluated term-wise in log space.
double partition_sum_upper_bound_log(std::uint64_t n, double d, std::uint64_t k,
                                     const BoundParams& params);

// The unique k* > 1 with k^{1/3} ln k = critical_coefficient() * ln n.
double phase_boundary_k(std::uint64_t n);

enum class Regime { kSubcritical, kSupercritical, kCriticalWindow };
std::string regime_name(Regime r);
Regime regime_of(std::uint64_t n, double k, double delta);

// The four tail exponents (natural log scale): -k ln k -+ ck for the
// disjoint-triangle regime and -(a +- eps) k^{2/3} ln n for the clique regime.
struct TailExponents {
    double disjoint_lower_log;
    double disjoint_upper_log;
    double clique_lower_log;
    double clique_upper_log;
};
TailExponents tail_exponent_expressions(std::uint64_t n, double k, const BoundParams& params);

}  // namespace tritail::analytic
