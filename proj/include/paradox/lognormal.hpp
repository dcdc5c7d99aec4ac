#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "paradox/degree_stats.hpp"

namespace paradox {

/// Bivariate log-normal joint degree model: log-degrees of the two endpoints of a
/// random edge are jointly normal with equal means m, equal variances s^2 and
/// correlation coefficient c.
struct LogNormalParams {
    double m = 2.5;
    double s = 1.25;  // must be > 0
    double c = 0.0;   // must be in (-1, 1)

    void validate() const; // throws std::invalid_argument
};

/// r = (e^{c s^2} - 1)/(e^{s^2} - 1); always within [-e^{-s^2}, 1].
double lognormal_assortativity(const LogNormalParams& p);

/// mu_x(k) = 1 - Phi( (log k - m)/s * sqrt((1-c)/(1+c)) ), k > 0 (real-valued).
double lognormal_mu_x(const LogNormalParams& p, double k);

/// Per-degree paradox probability of the analytic model: the 2K Gaussian form
/// evaluated at the closed-form mu_x(k); for k = 1 the exact binomial f = mu.
double lognormal_f(const LogNormalParams& p, double k);

/// Width of the f transition: k at the first downward crossing of f_lo minus k at
/// the first downward crossing of f_hi (clamped to k=1 when f starts below f_hi).
double transition_width(const LogNormalParams& p, double f_hi = 0.9, double f_lo = 0.1);

/// Unit-cell midpoint discretization of the bivariate log-normal onto integer
/// degrees 1..k_max. Cell masses are renormalized; marginals and the moments
/// needed for assortativity are accumulated without materializing the matrix.
struct DiscretizedLogNormal {
    LogNormalParams params;
    Degree k_max = 0;
    std::vector<double> q;  // q[k-1], k = 1..k_max (row sums)
    std::vector<double> p;  // p[k-1] = q/k renormalized
    double mean_degree = 0.0;
    double var_q = 0.0;
    double assortativity = 0.0; // from the discretized matrix moments
    double normalization = 0.0; // raw cell-mass sum before normalizing

    /// Normalized cell mass e(k,k'); zero outside 1..k_max.
    double cell(Degree k, Degree kp) const;

    /// Materialize the (renormalized) joint restricted to the given degree classes.
    SparseJoint restricted_joint(std::span<const Degree> classes) const;

    /// Materialize the full matrix, dropping cells below rel_cutoff * max cell.
    /// Intended for moderate k_max only.
    SparseJoint full_joint(double rel_cutoff = 1e-14) const;
};

/// Throws std::runtime_error when the discretized p mass beyond k_max is >= 1e-6
/// (reported in the message).
DiscretizedLogNormal discretize_lognormal(const LogNormalParams& p, Degree k_max);

/// One row of the Fig.-1(b)-style sweep.
struct SweepPoint {
    double c = 0.0;
    double r = 0.0;         // Eq.-(7)-style closed form
    double p_paradox = 0.0; // sum_k p(k) f(k) over the discretized marginal
};

/// Analytic sweep over correlation values; P decreases as c increases.
std::vector<SweepPoint> sweep_global_paradox(double m, double s, std::span<const double> c_grid,
                                             Degree k_max);

} // namespace paradox
