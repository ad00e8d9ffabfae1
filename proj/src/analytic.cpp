#include "tritail/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tritail/errors.hpp"

namespace tritail::analytic {

namespace {
const double kSqrt2Over3 = std::sqrt(2.0) / 3.0;
const double kA = std::pow(3.0 / std::sqrt(2.0), 2.0 / 3.0);
}  // namespace

double critical_coefficient() { return kA; }

AnalyticContext::AnalyticContext(double degree, double tol) : d(degree), root_tol(tol) {
    if (!(degree > 0)) throw InputError("degree parameter d must be positive");
    if (!(tol > 0)) throw InputError("root tolerance must be positive");
    d0 = degree * degree * degree / 6.0;
    d1 = std::exp(1.0) * d0;
}

void BoundParams::validate() const {
    if (!(eta >= 0.0 && eta < 1.0)) throw InputError("eta must lie in [0, 1)");
    if (!(alpha >= 0.0)) throw InputError("alpha must be non-negative");
    if (!(c >= 0.0) || !(c_prime >= 0.0)) throw InputError("c constants must be non-negative");
    if (!(epsilon >= 0.0)) throw InputError("epsilon must be non-negative");
    if (!(delta > 0.0)) throw InputError("delta must be positive");
}

double f_of(double x) {
    if (!(x >= 0.0)) throw InputError("f is defined for x >= 0");
    double u = x + 1.0;
    return kSqrt2Over3 * u * std::sqrt(u) + 3.0 * u;
}

double f_prime(double x) {
    if (!(x >= 0.0)) throw InputError("f' is defined for x >= 0");
    return 0.5 * std::sqrt(2.0) * std::sqrt(x + 1.0) + 3.0;
}

namespace {

// Inverts f on (10, inf). The bracket top a*y^{2/3} always satisfies
// f(top) > y because f(x) > (sqrt2/3) x^{3/2}.
double invert_f(double y, double tol) {
    double lo = 1.0;
    double hi = std::max(2.0, kA * std::pow(y, 2.0 / 3.0));
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double fx = f_of(x);
        if (std::abs(fx - y) <= tol * y) return x;
        if (fx < y)
            lo = x;
        else
            hi = x;
        double step = (fx - y) / f_prime(x);
        double newton = x - step;
        x = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
    }
    return x;
}

}  // namespace

double h_of(double y, double tol) {
    if (y < 2.0) return 0.0;
    if (y <= 10.0) return 1.0;
    return invert_f(y, tol);
}

double h_prime(double y) {
    if (!(y > 10.0)) throw std::domain_error("h' is defined only for y > 10");
    return 1.0 / f_prime(h_of(y));
}

double kruskal_katona_bound(double edges) {
    if (!(edges >= 0.0)) throw InputError("edge count must be non-negative");
    return kSqrt2Over3 * edges * std::sqrt(edges);
}

std::pair<bool, bool> check_h_integer_shifts(std::uint64_t i, std::uint64_t m) {
    const double kTol = 1e-9;
    double md = static_cast<double>(m);
    double first_lhs = static_cast<double>(i) + h_of(md - 10.0 * static_cast<double>(i));
    double first_rhs = h_of(md - 1e5);
    double second_rhs = h_of(md) - h_of(1e6);
    return {first_lhs >= first_rhs - kTol, first_rhs >= second_rhs - kTol};
}

double poisson_pmf(double lambda, std::uint64_t k) {
    if (!(lambda > 0)) throw InputError("lambda must be positive");
    double kd = static_cast<double>(k);
    return std::exp(-lambda + kd * std::log(lambda) - std::lgamma(kd + 1.0));
}

double poisson_tail(double lambda, std::uint64_t k) {
    if (!(lambda > 0)) throw InputError("lambda must be positive");
    if (k == 0) return 1.0;
    if (static_cast<double>(k) <= lambda) {
        // CDF below the mean is moderate; 1 - CDF loses at most ~1e-16.
        double term = std::exp(-lambda);
        double cdf = term;
        for (std::uint64_t j = 1; j < k; ++j) {
            term *= lambda / static_cast<double>(j);
            cdf += term;
        }
        return 1.0 - cdf;
    }
    // Above the mean the tail terms decay geometrically; sum them directly.
    double term = poisson_pmf(lambda, k);
    double tail = term;
    for (std::uint64_t j = k + 1;; ++j) {
        term *= lambda / static_cast<double>(j);
        tail += term;
        if (term <= 1e-18 * tail && static_cast<double>(j) > lambda) break;
    }
    return std::min(tail, 1.0);
}

namespace {

double log_choose3(double n) {
    // log C(n, 3) for real n >= 3
    return std::log(n) + std::log(n - 1.0) + std::log(n - 2.0) - std::log(6.0);
}

}  // namespace

PackingExpectation expected_isolated_packings(std::uint64_t n, double d, std::uint64_t k) {
    if (3 * k > n) throw PreconditionError("expected_isolated_packings requires 3k <= n");
    if (!(d > 0.0) || !(d < static_cast<double>(n)))
        throw InputError("requires 0 < d < n");
    double nd = static_cast<double>(n);
    double kd = static_cast<double>(k);
    double log_bound = -std::lgamma(kd + 1.0) + 3.0 * kd * std::log(d / nd);
    for (std::uint64_t i = 0; i < k; ++i)
        log_bound += log_choose3(nd - 3.0 * static_cast<double>(i));
    double exponent = 3.0 * kd * (nd - 3.0 * kd) + 3.0 * kd * (3.0 * kd - 1.0) / 2.0 - 3.0 * kd;
    double log_exact = log_bound + exponent * std::log1p(-d / nd);
    return {std::exp(log_exact), std::exp(log_bound), log_exact, log_bound};
}

CliqueLowerBound clique_lower_bound(std::uint64_t n, double d, std::uint64_t k) {
    // smallest m with m^3 >= 6k, integer-exact
    std::uint64_t target = 6 * k;
    std::uint64_t m = static_cast<std::uint64_t>(std::llround(std::cbrt(static_cast<double>(target))));
    m = std::max<std::uint64_t>(m, 1);
    while (m * m * m < target) ++m;
    while (m > 1 && (m - 1) * (m - 1) * (m - 1) >= target) --m;
    if (m > n) throw PreconditionError("clique size exceeds n");
    if (!(d > 0.0)) throw InputError("d must be positive");
    double pairs = static_cast<double>(m) * static_cast<double>(m - 1) / 2.0;
    return {m, pairs * std::log(d / static_cast<double>(n))};
}

double tisg_rarity_bound(std::uint64_t n, std::uint64_t ell, double eta) {
    if (n < 2) throw PreconditionError("requires n >= 2");
    if (ell < 1) throw PreconditionError("requires ell >= 1");
    if (!(eta >= 0.0 && eta < 1.0)) throw InputError("eta must lie in [0, 1)");
    return std::exp(-(1.0 - eta) * h_of(static_cast<double>(ell)) *
                    std::log(static_cast<double>(n)));
}

double partition_sum_upper_bound_log(std::uint64_t n, double d, std::uint64_t k,
                                     const BoundParams& params) {
    params.validate();
    AnalyticContext ctx(d);
    double log_n = std::log(static_cast<double>(n));
    double log_d0 = std::log(ctx.d0);
    std::vector<double> terms;
    terms.reserve(k + 1);
    for (std::uint64_t j = 0; j <= k; ++j) {
        double jd = static_cast<double>(j);
        double rest = static_cast<double>(k - j);
        double h_arg = rest - 1e5;
        terms.push_back(-std::lgamma(jd + 1.0) + jd * log_d0 + params.alpha * std::sqrt(rest) -
                        (1.0 - params.eta) * h_of(h_arg) * log_n);
    }
    double peak = *std::max_element(terms.begin(), terms.end());
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - peak);
    return peak + std::log(acc);
}

double phase_boundary_k(std::uint64_t n) {
    if (n < 3) throw PreconditionError("requires n >= 3");
    double target = kA * std::log(static_cast<double>(n));
    auto lhs = [](double k) { return std::cbrt(k) * std::log(k); };
    double lo = 1.0, hi = 2.0;
    while (lhs(hi) < target) hi *= 2.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (lhs(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::kSubcritical: return "subcritical";
        case Regime::kSupercritical: return "supercritical";
        case Regime::kCriticalWindow: return "critical-window";
    }
    return "?";
}

Regime regime_of(std::uint64_t n, double k, double delta) {
    if (n < 3) throw PreconditionError("requires n >= 3");
    if (!(k >= 1.0)) throw PreconditionError("requires k >= 1");
    if (!(delta > 0.0)) throw InputError("delta must be positive");
    double lhs = std::cbrt(k) * std::log(k);
    double log_n = std::log(static_cast<double>(n));
    if (lhs < (kA - delta) * log_n) return Regime::kSubcritical;
    if (lhs > (kA + delta) * log_n) return Regime::kSupercritical;
    return Regime::kCriticalWindow;
}

TailExponents tail_exponent_expressions(std::uint64_t n, double k, const BoundParams& params) {
    params.validate();
    if (!(k >= 2.0)) throw PreconditionError("requires k >= 2");
    double log_n = std::log(static_cast<double>(n));
    double k23 = std::pow(k, 2.0 / 3.0);
    return {
        -k * std::log(k) - params.c * k,
        -k * std::log(k) + params.c * k,
        -(kA + params.epsilon) * k23 * log_n,
        -(kA - params.epsilon) * k23 * log_n,
    };
}

}  // namespace tritail::analytic
