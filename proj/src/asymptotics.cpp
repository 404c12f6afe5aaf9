#include "sojourn/asymptotics.hpp"

#include "sojourn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sojourn {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kEdgeFraction = 1e-6;
constexpr double kTailC1 = 0.1;
constexpr double kTailC2 = 0.9;

void require_horizon(const LimitParams& lp) {
    if (!(lp.t > 0)) throw std::domain_error("LimitParams: horizon t must be positive");
}

void require_interior(const LimitParams& lp, double s) {
    require_horizon(lp);
    if (!(s > 0) || !(s < lp.t))
        throw std::domain_error("density: s must lie strictly inside (0, t)");
    if (s < kEdgeFraction * lp.t || lp.t - s < kEdgeFraction * lp.t)
        throw std::domain_error("density: refusing evaluation within 1e-6 t of an edge");
}

// psi-type density without the edge refusal, taking s and t - s separately so
// integrators can form both without cancellation.
double density_from_parts(double rho, double s, double t_minus_s) {
    const double inv = 1.0 / std::sqrt(kTwoPi);
    if (rho >= 0)
        return inv * (rho + phi_tail(s, rho) / (2.0 * std::sqrt(kTwoPi))) *
               phi_tail(t_minus_s, rho);
    return inv * (-rho + phi_tail(t_minus_s, rho) / (2.0 * std::sqrt(kTwoPi))) *
           phi_tail(s, rho);
}

// Int_a^t phi(u) phi_tail(t-u) du with phi(z) = exp(-rho^2 z/2) z^{-3/2};
// u = t - v^2 removes the square-root singularity at u = t.
double cross_integral(double a, double t, double rho) {
    const double phi_t = std::exp(-0.5 * rho * rho * t) / (t * std::sqrt(t));
    auto integrand = [&](double v) {
        if (v == 0.0) return 4.0 * phi_t;
        const double u = t - v * v;
        const double phi_u = std::exp(-0.5 * rho * rho * u) / (u * std::sqrt(u));
        return 2.0 * v * phi_u * phi_tail(v * v, rho);
    };
    const double vmax = std::sqrt(t - a);
    const double scale = std::max({integrand(0.0), integrand(vmax), 1.0});
    return adaptive_simpson(integrand, 0.0, vmax, 1e-13 * scale * vmax);
}

}  // namespace

double phi_tail(double sigma, double rho) {
    if (!(sigma > 0)) throw std::domain_error("phi_tail: sigma must be positive");
    const double r = std::fabs(rho);
    if (r == 0.0) return 2.0 / std::sqrt(sigma);
    return 2.0 / std::sqrt(sigma) * std::exp(-0.5 * r * r * sigma) -
           std::sqrt(kTwoPi) * r * std::erfc(r * std::sqrt(0.5 * sigma));
}

double phi_tail_quadrature(double sigma, double rho) {
    if (!(sigma > 0)) throw std::domain_error("phi_tail_quadrature: sigma must be positive");
    const double r = std::fabs(rho);
    // z = 1/u^2 maps the tail onto (0, 1/sqrt(sigma)] with a bounded,
    // monotone integrand.
    auto integrand = [r](double u) {
        if (u == 0.0) return r == 0.0 ? 1.0 : 0.0;
        return std::exp(-0.5 * r * r / (u * u));
    };
    const double b = 1.0 / std::sqrt(sigma);
    const double scale = std::max(integrand(b) * b, 1e-280);
    return 2.0 * adaptive_simpson(integrand, 0.0, b, 1e-13 * scale);
}

double sojourn_density(const LimitParams& lp, double s) {
    require_interior(lp, s);
    return density_from_parts(lp.rho, s, lp.t - s);
}

double conditioned_density(const LimitParams& lp, double s, Sign sign) {
    require_interior(lp, s);
    const double rho = lp.rho;
    const double t = lp.t;
    if (sign == Sign::minus) {
        const double drift_part = std::max(-rho, 0.0) / std::sqrt(kTwoPi) *
                                  (phi_tail(s, rho) - phi_tail(t, rho));
        return drift_part + cross_integral(s, t, rho) / (4.0 * kPi);
    }
    const double drift_part = std::max(rho, 0.0) / std::sqrt(kTwoPi) *
                              (phi_tail(t - s, rho) - phi_tail(t, rho));
    return drift_part + cross_integral(t - s, t, rho) / (4.0 * kPi);
}

double total_sojourn_density(double rho, double s) {
    if (!(s > 0)) throw std::domain_error("total_sojourn_density: s must be positive");
    if (rho >= 0) return 0.0;
    return -rho / std::sqrt(kTwoPi) * phi_tail(s, rho);
}

double limit_cdf(const LimitParams& lp, double s) {
    require_horizon(lp);
    if (!(s > 0)) return 0.0;
    if (!(s < lp.t)) return 1.0;
    const double t = lp.t;
    // s' = t sin^2(theta): ds' = t sin(2 theta) d theta tames the 1/sqrt(s')
    // edge of the density. t - s' is formed as t cos^2(theta), never by
    // subtraction.
    auto integrand = [&](double theta) {
        const double sin_t = std::sin(theta);
        const double cos_t = std::cos(theta);
        return density_from_parts(lp.rho, t * sin_t * sin_t, t * cos_t * cos_t) * t *
               std::sin(2.0 * theta);
    };
    const double theta_s = std::asin(std::sqrt(s / t));
    if (theta_s <= 1e-12) return 0.0;
    return adaptive_simpson(integrand, 1e-12, theta_s, 1e-11);
}

double density_normalization(const LimitParams& lp) {
    require_horizon(lp);
    const double t = lp.t;
    auto integrand = [&](double theta) {
        const double sin_t = std::sin(theta);
        const double cos_t = std::cos(theta);
        return density_from_parts(lp.rho, t * sin_t * sin_t, t * cos_t * cos_t) * t *
               std::sin(2.0 * theta);
    };
    // sin and cos stay nonzero at both numeric endpoints, so the integrand is
    // finite everywhere it is sampled.
    return adaptive_simpson(integrand, 1e-12, 0.5 * kPi - 1e-12, 1e-11);
}

std::vector<double> discrete_free_distribution(double p, long n) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("discrete_free_distribution: need 0 < p < 1");
    if (n < 0) throw std::domain_error("discrete_free_distribution: negative n");
    const double q = 1.0 - p;
    const double pq = p * q;
    // alpha[u] = a_{2u} (pq)^u and its prefix sums.
    const size_t half = static_cast<size_t>(n / 2) + 1;
    std::vector<double> alpha(half), prefix(half);
    alpha[0] = 0.5;
    prefix[0] = 0.5;
    for (size_t u = 1; u < half; ++u) {
        const long i = 2 * static_cast<long>(u) - 2;
        alpha[u] = alpha[u - 1] * 4.0 * pq * (i + 1) / (i + 4);
        prefix[u] = prefix[u - 1] + alpha[u];
    }
    auto alpha_at = [&](long i) { return alpha[static_cast<size_t>(i / 2)]; };
    auto prefix_upto = [&](long m) {
        if (m < 0) return 0.0;
        return prefix[static_cast<size_t>(std::min(m, n) / 2)];
    };
    std::vector<double> masses(static_cast<size_t>(n) + 1, 0.0);
    for (long k = 0; k <= n; ++k) {
        double total = 0.0;
        if ((n - k) % 2 == 0) {
            double conv = 0.0;
            for (long u = 0; u <= k - 2; u += 2) conv += alpha_at(n - k + u) * prefix_upto(k - 2 - u);
            total += 2.0 * p * (prefix_upto(n) - prefix_upto(n - k - 2)) - 4.0 * pq * conv;
        }
        if (k % 2 == 0) {
            double conv = 0.0;
            for (long u = 0; u <= n - k - 2; u += 2) conv += alpha_at(k + u) * prefix_upto(n - k - 2 - u);
            total += 2.0 * q * (prefix_upto(n) - prefix_upto(k - 2)) - 4.0 * pq * conv;
        }
        masses[static_cast<size_t>(k)] = total;
    }
    double sum = 0.0;
    for (double m : masses) sum += m;
    if (std::fabs(sum - 1.0) > 1e-9)
        throw std::logic_error("discrete_free_distribution: masses do not sum to 1");
    return masses;
}

ConvergenceReport convergence_experiment(double rho, double t, long big_n,
                                         const std::vector<double>& grid) {
    if (!(t > 0)) throw std::domain_error("convergence_experiment: t must be positive");
    if (big_n <= 0) throw std::domain_error("convergence_experiment: N must be positive");
    const double p_n = 0.5 + rho / (2.0 * std::sqrt(static_cast<double>(big_n)));
    if (!(p_n > 0.0) || !(p_n < 1.0))
        throw std::domain_error("convergence_experiment: |rho| too large for N, p_N outside (0,1)");
    const long steps = static_cast<long>(static_cast<double>(big_n) * t);
    if (steps < 1) throw std::domain_error("convergence_experiment: N t < 1");
    for (double s : grid)
        if (!(s > 0) || !(s < t))
            throw std::domain_error("convergence_experiment: grid points must lie in (0, t)");

    const std::vector<double> masses = discrete_free_distribution(p_n, steps);
    std::vector<double> cdf(masses.size());
    double running = 0.0;
    for (size_t k = 0; k < masses.size(); ++k) {
        running += masses[k];
        cdf[k] = running;
    }

    ConvergenceReport report{rho, t, big_n, steps, p_n, {}, 0.0};
    const LimitParams lp{rho, t};
    for (double s : grid) {
        const double scaled = static_cast<double>(big_n) * s;
        const long idx = std::min(static_cast<long>(std::floor(scaled)), steps);
        const double discrete = idx < 0 ? 0.0 : cdf[static_cast<size_t>(idx)];
        const double limit = limit_cdf(lp, s);
        const double gap = std::fabs(discrete - limit);
        report.points.push_back({s, discrete, limit, gap});
        report.sup_gap = std::max(report.sup_gap, gap);
    }
    return report;
}

TailAsymptotic tail_sum_asymptotic(double rho, long big_n, long k) {
    if (big_n < 4) throw std::domain_error("tail_sum_asymptotic: N too small");
    if (k % 2 != 0) throw std::domain_error("tail_sum_asymptotic: k must be even");
    const double nd = static_cast<double>(big_n);
    if (k < kTailC1 * nd || k > kTailC2 * nd)
        throw std::domain_error("tail_sum_asymptotic: need 0.1 N <= k <= 0.9 N");
    const double four_pq = 1.0 - rho * rho / nd;
    if (!(four_pq > 0))
        throw std::domain_error("tail_sum_asymptotic: |rho| too large for N");

    double lhs;
    const double log_central = std::lgamma(k + 1.0) - 2.0 * std::lgamma(k / 2.0 + 1.0);
    if (rho == 0.0) {
        // Exact: sum_{i in E, i >= k} a_i 4^{-i/2} = C(k, k/2) 2^{-k}.
        lhs = std::exp(log_central - k * std::log(2.0));
    } else {
        // alpha_k = C(k,k/2)/(k+2) * (pq)^{k/2}, then the ratio recurrence
        // alpha_{i+2} = alpha_i * 4pq (i+1)/(i+4).
        double term = std::exp(log_central - std::log(k + 2.0) - k * std::log(2.0) +
                               0.5 * k * std::log1p(-rho * rho / nd));
        double sum = 0.0;
        long i = k;
        const long max_terms = 1L << 31;
        long taken = 0;
        while (true) {
            sum += term;
            if (term < 1e-18 * sum) break;
            term *= four_pq * static_cast<double>(i + 1) / static_cast<double>(i + 4);
            i += 2;
            if (++taken > max_terms)
                throw std::domain_error("tail_sum_asymptotic: rho too close to 0 for convergence");
        }
        lhs = sum;
    }
    const double rhs = phi_tail(static_cast<double>(k) / nd, rho) / std::sqrt(kTwoPi * nd);
    return {lhs, rhs, std::fabs(lhs - rhs) / rhs};
}

}  // namespace sojourn
