#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace paradox {

using NodeId = std::uint32_t;

/// Bookkeeping produced while cleaning an edge list into a simple graph.
struct IngestionReport {
    std::int64_t raw_lines = 0;          // every line read, including comments/blank
    std::int64_t parsed_edges = 0;       // well-formed "u v" lines
    std::int64_t dropped_self_loops = 0;
    std::int64_t deduplicated_edges = 0; // parsed lines collapsed onto an already-seen edge
    bool relabeled_ids = false;          // input ids were not already 0..n-1
    std::int64_t isolated_nodes = 0;     // degree-0 nodes (appear only in dropped self-loops)
    std::vector<std::int64_t> original_id; // new id -> original id (identity when !relabeled_ids)
};

struct LoadOptions {
    // Directed inputs are folded into undirected edges. With symmetrize=false the
    // input must already contain both directions of every edge, else loading fails.
    bool symmetrize = true;
};

/// Immutable undirected simple graph in compressed adjacency form.
/// Node ids are contiguous 0..n-1; every adjacency list is sorted.
class Graph {
public:
    Graph() = default;

    /// Parse a whitespace-separated edge list ('#' lines are comments), clean it
    /// (drop self-loops, collapse parallel edges, relabel ids by sorted original id)
    /// and build the graph. Throws std::runtime_error on malformed or empty input.
    static std::pair<Graph, IngestionReport> load_edge_list(std::istream& in,
                                                            const LoadOptions& options = {});

    /// Build from already-deduplicated undirected edges over ids 0..node_count-1.
    /// Throws if an edge is out of range, a self-loop, or a duplicate.
    static Graph from_edges(std::vector<std::pair<NodeId, NodeId>> edges, NodeId node_count);

    /// Build from adjacency lists (will be sorted; must be symmetric and simple).
    static Graph from_adjacency(std::vector<std::vector<NodeId>> adjacency);

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::uint64_t edge_count() const { return neighbors_.size() / 2; }

    std::uint32_t degree(NodeId v) const;   // throws std::out_of_range on bad id
    std::span<const NodeId> neighbors(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;

    std::int64_t isolated_count() const;
    std::uint32_t max_degree() const;

    /// One "u v" line per undirected edge (u < v), preceded by '#'-prefixed header lines.
    void write_edge_list(std::ostream& out, std::span<const std::string> header_lines = {}) const;

    std::vector<std::vector<NodeId>> adjacency_copy() const;

private:
    std::vector<std::uint64_t> offsets_;  // size n+1
    std::vector<NodeId> neighbors_;       // size 2*edge_count, sorted per node

    void check_node(NodeId v) const;
};

} // namespace paradox
