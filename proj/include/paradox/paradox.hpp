#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "paradox/degree_stats.hpp"
#include "paradox/graph.hpp"

namespace paradox {

/// A node of degree k is in the paradox regime when...
enum class ParadoxDefinition {
    median_strict, // Median of neighbor degrees (mean of central pair for even k) > k
    xbar_majority, // strictly more than k/2 neighbors have degree > k
};

enum class ProfileSource {
    observed,
    model_2k_binomial,
    model_2k_gauss,
    model_3k,
};

std::string to_string(ParadoxDefinition d);
std::string to_string(ProfileSource s);

/// Per-degree paradox probability f(k) plus the degree-weighted global value.
struct ParadoxProfile {
    std::map<Degree, double> f;
    std::map<Degree, std::int64_t> class_nodes; // observed profiles only
    double global_p = 0.0;                      // sum_k p(k) f(k)
    Degree k_c = 0;                             // median of q(k)
    ParadoxDefinition definition = ParadoxDefinition::median_strict;
    ProfileSource source = ProfileSource::observed;
    std::int64_t excluded_isolated = 0;
    std::vector<Degree> clamped_classes;        // 3K model: classes where sigma^2 was floored
};

/// Measure the observed paradox per degree class. Degree-0 nodes are excluded from
/// f and from the global_p denominator. Throws when every node is isolated.
ParadoxProfile observed_paradox(const Graph& g,
                                ParadoxDefinition definition = ParadoxDefinition::median_strict);

/// Critical degree: smallest k whose cumulative q(k) mass reaches >= 1/2.
Degree critical_degree(const DegreeStats& stats);

/// Smallest occurring degree with mu_x(k) < 1/2 (reported alongside k_c; the two
/// coincide when mu_x is monotone). Returns the largest degree + 1 if none.
Degree mu_half_crossing(const std::map<Degree, double>& mu);

} // namespace paradox
