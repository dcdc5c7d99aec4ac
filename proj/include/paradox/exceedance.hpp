#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "paradox/degree_stats.hpp"
#include "paradox/graph.hpp"

namespace paradox {

/// Per-degree-class statistics of the neighbor exceedance indicator x_i = 1[deg(neighbor) > k].
///
/// mu is the incidence fraction, cov/rho the neighbor-neighbor (wedge-level) covariance and
/// correlation. cov is defined for classes with at least one neighbor pair (k >= 2); rho
/// additionally requires mu outside {0,1} and at least 2 pairs. Undefined entries are
/// std::nullopt, never NaN.
struct ExceedanceProfile {
    struct ClassStats {
        double mu = 0.0;
        std::optional<double> cov;
        std::optional<double> rho;
        std::int64_t nodes = 0;
        std::int64_t pairs = 0;              // N_k * C(k,2)
        std::int64_t exceed_incidences = 0;  // sum over nodes of n_>(v)
        std::int64_t exceed_pairs2 = 0;      // sum over nodes of 2*C(n_>(v),2)
    };
    std::map<Degree, ClassStats> per_degree;
};

/// Exceedance statistics for every occurring degree class k >= 1.
/// Uses the per-node counting identity sum_{i<j} x_i x_j = C(n_>,2); cost O(E).
ExceedanceProfile exceedance_profile(const Graph& g);

/// P(k'_i > k, k'_j > k | k) per degree class k >= 2 (classes without pairs omitted).
/// Throws if no node has degree >= 2.
std::map<Degree, double> pair_exceed_prob(const Graph& g);

/// Histogram of xbar = n_>(v)/k over the degree-k nodes; keys are the integer
/// numerators n_> in 0..k.
struct XbarDistribution {
    Degree degree = 0;
    std::map<std::int64_t, std::int64_t> count_by_numerator;
    std::int64_t total_nodes() const;
};

/// Throws std::runtime_error when no node has degree k.
XbarDistribution xbar_distribution(const Graph& g, Degree k);

/// Display smoothing for rho(k) profiles: geometric degree bins, adjacent bins
/// merged until each holds at least min_nodes sample nodes. Pooled correlation
/// per bin = sum(pairs*cov) / sum(pairs*mu(1-mu)).
struct BinnedRho {
    double k_geometric_mean = 0.0;
    Degree k_low = 0, k_high = 0;   // inclusive degree range
    double rho = 0.0;
    std::int64_t nodes = 0;
    std::int64_t pairs = 0;
};
std::vector<BinnedRho> smooth_rho(const ExceedanceProfile& profile, int min_nodes = 30);

} // namespace paradox
