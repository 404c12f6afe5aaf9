#pragma once

#include "sojourn/conditioning.hpp"

#include <vector>

namespace sojourn {

/// Drift rho and horizon t > 0 of the rescaled limit: step probability
/// p_N = 1/2 + rho / (2 sqrt(N)), time window [0, t].
struct LimitParams {
    double rho;
    double t;
};

/// Int_sigma^inf exp(-rho^2 z / 2) z^{-3/2} dz, closed Erfc form. The
/// integrand depends on rho only through rho^2, so the sign of rho is
/// irrelevant.
double phi_tail(double sigma, double rho);

/// Same integral by adaptive quadrature after z = 1/u^2; independent route
/// kept free of erfc.
double phi_tail_quadrature(double sigma, double rho);

/// Density of the occupation time of (0, inf) up to t for Brownian motion
/// with drift rho, at 0 < s < t. Reduces to the arcsine density
/// 1/(pi sqrt(s (t-s))) at rho = 0. Evaluation within 1e-6 t of either edge
/// is refused (integrable singularity).
double sojourn_density(const LimitParams& lp, double s);

/// Joint densities with the terminal sign: Sign::minus is
/// P{occupation in ds, B_t < 0}/ds, Sign::plus the B_t > 0 counterpart.
/// The two sum to sojourn_density.
double conditioned_density(const LimitParams& lp, double s, Sign sign);

/// Density of the total occupation time of (0, inf): zero for rho >= 0,
/// |rho|/sqrt(2 pi) * phi_tail(s, rho) for rho < 0.
double total_sojourn_density(double rho, double s);

/// Int_0^s sojourn_density, by quadrature under s' = t sin^2(theta).
double limit_cdf(const LimitParams& lp, double s);

/// Int_0^t sojourn_density by the same substitution, edge to edge; equals 1
/// for every drift (the occupation time has no atoms at 0 or t).
double density_normalization(const LimitParams& lp);

/// Full distribution of T_n in doubles via the closed forms with prefix-sum
/// convolutions; O(n^2) and good to ~1e-12 absolute.
std::vector<double> discrete_free_distribution(double p, long n);

struct ConvergencePoint {
    double s;
    double discrete_cdf;
    double limit_cdf;
    double gap;
};

struct ConvergenceReport {
    double rho;
    double t;
    long big_n;     // scaling parameter N
    long steps;     // walk length [N t]
    double p_n;     // step probability used
    std::vector<ConvergencePoint> points;
    double sup_gap;
};

/// Compares the exact distribution of T_[Nt] at p_N against the limit CDF on
/// the given grid of interior time fractions.
ConvergenceReport convergence_experiment(double rho, double t, long big_n,
                                         const std::vector<double>& grid);

struct TailAsymptotic {
    double lhs;      // sum_{i in E, i >= k} a_i (p_N q_N)^{i/2}
    double rhs;      // phi_tail(k/N, rho) / sqrt(2 pi N)
    double rel_err;  // |lhs - rhs| / rhs
};

/// Tail-sum asymptotic check at k in [0.1 N, 0.9 N], k even. rho = 0 uses the
/// exact identity sum = C(k, k/2) 2^{-k}; otherwise the series is summed with
/// the a_i ratio recurrence until terms drop below 1e-18 of the partial sum.
TailAsymptotic tail_sum_asymptotic(double rho, long big_n, long k);

}  // namespace sojourn
