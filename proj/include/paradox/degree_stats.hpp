#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "paradox/graph.hpp"

namespace paradox {

using Degree = std::int64_t;

/// Sparse symmetric joint degree distribution e(k,k') over ordered endpoint pairs.
using SparseJoint = std::map<std::pair<Degree, Degree>, double>;

/// 1K/2K summary of a graph (or of a synthetic joint degree matrix).
///
/// Distributions cover degree classes k >= 1; isolated nodes are excluded so the
/// identities q(k) = k p(k)/<k> and global_p = sum p(k) f(k) hold exactly.
/// Integer count fields are populated only when derived from a graph.
struct DegreeStats {
    std::map<Degree, double> p;            // node degree distribution
    std::map<Degree, double> q;            // edge-endpoint degree distribution
    SparseJoint e;                         // normalized joint, sums to 1 over ordered pairs
    double mean_degree = 0.0;              // <k> over non-isolated nodes
    double var_q = 0.0;                    // Var(k) under q
    double assortativity = 0.0;            // r; 0 by convention when var_q == 0

    // exact counts (graph-derived only)
    std::map<Degree, std::int64_t> nodes_per_degree;     // N_k
    std::map<std::pair<Degree, Degree>, std::int64_t> joint_count; // ordered pairs, sums to 2E
    std::int64_t non_isolated_nodes = 0;
    std::int64_t edge_count = 0;

    bool has_counts() const { return non_isolated_nodes > 0; }
};

/// Full 1K/2K statistics of a graph. Throws std::runtime_error on an edgeless graph.
DegreeStats degree_stats(const Graph& g);

/// Same summary computed from a synthetic normalized joint matrix (no counts).
/// The matrix must be symmetric; it is renormalized to sum to 1.
DegreeStats degree_stats_from_joint(const SparseJoint& e);

/// Q_> of the 2K structure: <k> * sum_{k'>k} e(k,k')/k, the probability that a
/// random node sees a (random) neighbor with strictly larger degree.
double q_exceed_prob(const DegreeStats& stats);

/// mu_x(k) = sum_{k'>k} e(k,k')/q(k) for every occurring degree class.
std::map<Degree, double> mu_x(const DegreeStats& stats);

/// Assortativity of a normalized symmetric joint matrix (0 when Var_q = 0).
double assortativity_from_joint(const SparseJoint& e);

} // namespace paradox
