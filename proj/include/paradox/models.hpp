#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "paradox/degree_stats.hpp"
#include "paradox/exceedance.hpp"
#include "paradox/paradox.hpp"

namespace paradox {

/// Standard normal CDF / survival function via erfc (absolute error well under 1e-12).
double std_normal_cdf(double z);
double std_normal_sf(double z);

/// P(Binomial(k, mu) >= m), numerically stable for k up to 1e6 (log-space first
/// term plus term recurrence; symmetry reduction for mu > 1/2).
double binomial_tail_ge(std::int64_t k, std::int64_t m, double mu);

/// Inputs shared by the per-degree paradox predictors. Domains of mu and p must
/// agree; cov must cover every class k >= 2 when the 3K model is requested.
struct ModelInputs {
    std::map<Degree, double> mu;
    std::optional<std::map<Degree, double>> cov;
    std::map<Degree, double> p;
};

/// Estimate mu, cov and p empirically from a graph.
ModelInputs model_inputs(const Graph& g);
ModelInputs model_inputs(const DegreeStats& stats, const ExceedanceProfile& profile);

/// f(k) = sum_{i=ceil((k+1)/2)}^{k} C(k,i) mu^i (1-mu)^{k-i}  (independent neighbors).
ParadoxProfile predict_2k_binomial(const ModelInputs& in);

/// Gaussian approximation: f(k) = 1 - Phi((1-2mu)/(2 sqrt(mu(1-mu))) sqrt(k)),
/// with limit values f=0 at mu=0 and f=1 at mu=1.
ParadoxProfile predict_2k_gauss(const ModelInputs& in);

/// Covariance-corrected Gaussian: sigma^2(k) = mu(1-mu)/k + (k-1)/k * cov(k),
/// f(k) = 1 - Phi((1/2 - mu)/sigma). For k=1 the exact binomial f(1)=mu is used.
/// Non-positive sigma^2 (noisy negative covariance) is floored at 1e-6*mu(1-mu)/k
/// and the class recorded in clamped_classes.
ParadoxProfile predict_3k(const ModelInputs& in);

} // namespace paradox
