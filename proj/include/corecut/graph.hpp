#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corecut {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
using OriginalId = std::int64_t;

// Undirected edge over internal node ids, endpoints normalized so u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Neighbor {
  NodeId node;
  EdgeId edge;
};

struct ParseReport {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

// Immutable simple undirected graph. Internal node ids are dense 0..n-1,
// assigned in ascending order of the original identifiers, so the internal
// lexicographic order of edges matches the original one. Adjacency lists are
// sorted by neighbor id.
class Graph {
 public:
  Graph() = default;

  // `edges` use dense ids in [0, n); self-loops and duplicates are dropped.
  static Graph from_edges(NodeId n, std::vector<Edge> edges);

  NodeId node_count() const { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  int degree(NodeId v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  OriginalId original_id(NodeId v) const { return labels_[v]; }
  std::span<const OriginalId> labels() const { return labels_; }
  std::optional<NodeId> find_node(OriginalId original) const;
  std::pair<OriginalId, OriginalId> original_pair(EdgeId e) const {
    return {labels_[edges_[e].u], labels_[edges_[e].v]};
  }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;
  bool has_edge(NodeId a, NodeId b) const { return find_edge(a, b).has_value(); }

  // Copy of the graph without the given edge ids (node set unchanged).
  Graph without_edges(std::span<const EdgeId> remove) const;

  // One "u v" line per edge in original identifiers, ascending.
  std::string to_edge_list() const;

 private:
  friend std::pair<Graph, ParseReport> parse_edge_list(std::string_view text);

  void build_adjacency();

  std::vector<OriginalId> labels_;     // internal id -> original id
  std::vector<Edge> edges_;            // sorted by (u, v)
  std::vector<std::int64_t> offsets_;  // CSR offsets, size n+1
  std::vector<Neighbor> adjacency_;    // sorted by neighbor within each node
};

// Parses a whitespace-separated edge list. Lines starting with '#' or '%' and
// blank lines are skipped; CRLF and a UTF-8 BOM are tolerated. Node ids are
// arbitrary nonnegative integers and get remapped to dense indices. Throws
// std::runtime_error with the line number on malformed input.
std::pair<Graph, ParseReport> parse_edge_list(std::string_view text);

// G^B: removes every edge of `remove` (given as internal-id pairs). Throws if
// an edge is absent, identifying it by original ids.
Graph delete_edges(const Graph& g, std::span<const Edge> remove);

}  // namespace corecut
