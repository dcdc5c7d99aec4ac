#include "paradox/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace paradox {

namespace {

bool parse_i64(std::string_view tok, std::int64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::uint64_t pack(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

std::uint32_t Graph::degree(NodeId v) const {
    check_node(v);
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    check_node(v);
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::int64_t Graph::isolated_count() const {
    std::int64_t isolated = 0;
    for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
        if (offsets_[v + 1] == offsets_[v]) ++isolated;
    return isolated;
}

std::uint32_t Graph::max_degree() const {
    std::uint32_t best = 0;
    for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
        best = std::max<std::uint32_t>(best, static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]));
    return best;
}

void Graph::check_node(NodeId v) const {
    if (v >= node_count())
        throw std::out_of_range("node id " + std::to_string(v) + " out of range (n=" +
                                std::to_string(node_count()) + ")");
}

std::pair<Graph, IngestionReport> Graph::load_edge_list(std::istream& in, const LoadOptions& options) {
    IngestionReport report;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs; // directed, self-loops removed
    std::set<std::int64_t> ids; // ordered so relabeling is by sorted original id

    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++report.raw_lines;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::int64_t tok[2];
        int ntok = 0;
        std::size_t pos = start;
        while (pos < line.size()) {
            std::size_t end = line.find_first_of(" \t\r", pos);
            if (end == std::string::npos) end = line.size();
            std::string_view token(line.data() + pos, end - pos);
            if (!token.empty()) {
                std::int64_t value = 0;
                if (ntok >= 2 || !parse_i64(token, value))
                    throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                             ": expected two integer node ids");
                tok[ntok++] = value;
            }
            pos = line.find_first_not_of(" \t\r", end);
            if (pos == std::string::npos) break;
        }
        if (ntok != 2)
            throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                     ": expected two integer node ids");
        ++report.parsed_edges;
        ids.insert(tok[0]);
        ids.insert(tok[1]);
        if (tok[0] == tok[1]) {
            ++report.dropped_self_loops;
            continue;
        }
        pairs.emplace_back(tok[0], tok[1]);
    }

    if (report.parsed_edges == 0) throw std::runtime_error("no edges");

    if (ids.size() > static_cast<std::size_t>(std::numeric_limits<NodeId>::max()))
        throw std::runtime_error("too many distinct node ids");

    std::unordered_map<std::int64_t, NodeId> relabel;
    relabel.reserve(ids.size() * 2);
    report.original_id.reserve(ids.size());
    NodeId next = 0;
    for (std::int64_t id : ids) {
        if (id != static_cast<std::int64_t>(next)) report.relabeled_ids = true;
        relabel.emplace(id, next++);
        report.original_id.push_back(id);
    }
    const NodeId n = next;

    std::vector<std::uint64_t> keys;
    keys.reserve(pairs.size());
    if (options.symmetrize) {
        for (auto [a, b] : pairs) {
            NodeId u = relabel[a], v = relabel[b];
            if (u > v) std::swap(u, v);
            keys.push_back(pack(u, v));
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        report.deduplicated_edges =
            report.parsed_edges - report.dropped_self_loops - static_cast<std::int64_t>(keys.size());
    } else {
        for (auto [a, b] : pairs) keys.push_back(pack(relabel[a], relabel[b]));
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        report.deduplicated_edges =
            report.parsed_edges - report.dropped_self_loops - static_cast<std::int64_t>(keys.size());
        std::unordered_set<std::uint64_t> directed(keys.begin(), keys.end());
        for (std::uint64_t key : keys) {
            NodeId u = static_cast<NodeId>(key >> 32), v = static_cast<NodeId>(key);
            if (!directed.count(pack(v, u)))
                throw std::runtime_error("asymmetric edge " + std::to_string(report.original_id[u]) +
                                         " -> " + std::to_string(report.original_id[v]) +
                                         " (reverse direction missing; rerun with symmetrize)");
        }
        std::vector<std::uint64_t> undirected;
        undirected.reserve(keys.size() / 2);
        for (std::uint64_t key : keys) {
            NodeId u = static_cast<NodeId>(key >> 32), v = static_cast<NodeId>(key);
            if (u < v) undirected.push_back(key);
        }
        keys = std::move(undirected);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(keys.size());
    for (std::uint64_t key : keys)
        edges.emplace_back(static_cast<NodeId>(key >> 32), static_cast<NodeId>(key));

    Graph g = from_edges(std::move(edges), n);
    report.isolated_nodes = g.isolated_count();
    return {std::move(g), std::move(report)};
}

Graph Graph::from_edges(std::vector<std::pair<NodeId, NodeId>> edges, NodeId node_count) {
    Graph g;
    g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop in edge set");
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.neighbors_.resize(2 * edges.size());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }
    for (NodeId v = 0; v < node_count; ++v) {
        auto begin = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto end = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(begin, end);
        if (std::adjacent_find(begin, end) != end)
            throw std::invalid_argument("duplicate edge in edge set");
    }
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<NodeId>> adjacency) {
    const NodeId n = static_cast<NodeId>(adjacency.size());
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : adjacency[u]) {
            if (v >= n) throw std::invalid_argument("adjacency endpoint out of range");
            if (v == u) throw std::invalid_argument("self-loop in adjacency");
            if (u < v) edges.emplace_back(u, v);
        }
    }
    Graph g = from_edges(std::move(edges), n);
    // symmetric input has every edge twice; verify sizes match
    std::size_t listed = 0;
    for (const auto& nb : adjacency) listed += nb.size();
    if (listed != g.neighbors_.size()) throw std::invalid_argument("adjacency is not symmetric");
    return g;
}

void Graph::write_edge_list(std::ostream& out, std::span<const std::string> header_lines) const {
    for (const auto& h : header_lines) out << "# " << h << '\n';
    const NodeId n = static_cast<NodeId>(node_count());
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

std::vector<std::vector<NodeId>> Graph::adjacency_copy() const {
    std::vector<std::vector<NodeId>> adj(node_count());
    for (NodeId v = 0; v < node_count(); ++v) {
        auto nb = neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    return adj;
}

} // namespace paradox
