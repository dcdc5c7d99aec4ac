#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "paradox/degree_stats.hpp"
#include "paradox/graph.hpp"
#include "paradox/lognormal.hpp"

namespace paradox {

/// Target for the 2K stub-matching generator.
struct GenerationSpec {
    SparseJoint target_e;            // symmetric, normalized within 1e-9
    std::int64_t node_count = 0;     // >= 2
    std::uint64_t seed = 1;
    std::int64_t max_retries = 100;  // repair attempts per conflicting edge
};

struct GenerationReport {
    double realized_e_tv = 0.0;        // total variation, realized vs target e
    double dropped_tv = 0.0;           // TV contribution of dropped residual conflicts
    std::int64_t conflicts = 0;        // self-loops/duplicates seen during matching
    std::int64_t repaired = 0;
    std::int64_t dropped_edges = 0;
    std::int64_t parity_adjusted_nodes = 0; // nodes moved one degree class to even the stub sum
    std::int64_t requested_edges = 0;
    std::int64_t realized_edges = 0;
};

/// Degree-class stub matching toward a target joint degree distribution, with a
/// class-preserving double-swap repair pass for self-loops and duplicates.
/// Residual conflicts are dropped; generation fails when their TV contribution
/// exceeds 1e-3. Deterministic for a fixed spec + seed.
std::pair<Graph, GenerationReport> generate_2k(const GenerationSpec& spec);

/// Convenience: discretize a bivariate log-normal target and generate.
std::pair<Graph, GenerationReport> generate_2k_lognormal(const LogNormalParams& params,
                                                         Degree k_max, std::int64_t node_count,
                                                         std::uint64_t seed,
                                                         std::int64_t max_retries = 100);

struct RewireResult {
    Graph graph;
    double achieved_r = 0.0;
    std::int64_t accepted_swaps = 0;
    std::int64_t proposals = 0;
    bool reached_target = false;
};

/// Greedy degree-preserving double-edge swaps toward a target assortativity.
/// Stops at |r - target| <= tolerance or after max_steps proposals (best effort,
/// flagged via reached_target).
RewireResult rewire_to_assortativity(const Graph& g, double target_r, double tolerance,
                                     std::int64_t max_steps, std::uint64_t seed);

/// Three-tier fixture with controlled neighbor-neighbor correlation: each mid-tier
/// node wires a fraction `purity` of its edges into the core (probability beta) or
/// into degree-1 leaves (probability 1-beta); the core is a (core_degree)-regular
/// ring-with-chords so core degrees always exceed mid degrees.
struct CorePeripherySpec {
    std::int64_t n_core = 60;
    std::int64_t n_mid = 1500;
    std::int64_t n_leaf = 10000;
    std::int64_t mid_degree = 10;
    std::int64_t core_degree = 0;  // 0 -> mid_degree + 2
    double beta = 0.5;             // probability a mid node is core-attached
    double purity = 1.0;           // fraction of a mid node's edges on its preferred side
    std::uint64_t seed = 1;
};

/// Throws std::runtime_error when the wiring is infeasible (e.g. leaf pool too small).
Graph generate_core_periphery(const CorePeripherySpec& spec);

} // namespace paradox
