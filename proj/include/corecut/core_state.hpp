#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "corecut/core.hpp"
#include "corecut/graph.hpp"

namespace corecut {

// Mutable working copy of the k-core of a graph. Deleting an edge cascades:
// every node whose internal degree drops below k is removed together with its
// incident edges, so the surviving subgraph is always exactly the k-core of
// the original graph minus the deleted edges. All mutations are journaled and
// can be rolled back to any earlier checkpoint.
class CoreState {
 public:
  // The state references the graph; it must outlive the state.
  CoreState(const Graph& g, int k);
  CoreState(const Graph& g, const CoreDecomposition& cores, int k);
  CoreState(Graph&&, int) = delete;
  CoreState(Graph&&, const CoreDecomposition&, int) = delete;

  int k() const { return k_; }
  const Graph& graph() const { return *graph_; }

  bool node_alive(NodeId v) const { return node_alive_[v] != 0; }
  bool edge_alive(EdgeId e) const { return edge_alive_[e] != 0; }
  int degree(NodeId v) const { return degree_[v]; }
  std::int64_t alive_node_count() const { return alive_nodes_; }
  std::int64_t alive_edge_count() const { return alive_edges_; }

  std::vector<NodeId> alive_nodes() const;
  std::vector<EdgeId> alive_edges() const;

  // Nodes that would leave the core if `e` were deleted, without mutating the
  // state. Throws if `e` is not in the current core. Uses internal scratch,
  // so concurrent probes need distinct CoreState copies.
  std::vector<NodeId> compute_vs(EdgeId e) const;

  // Deletes `e` and cascades; returns the removed nodes (ascending). Throws
  // if `e` is not in the current core.
  std::vector<NodeId> local_update(EdgeId e);

  // Same deletion, returning only the number of removed nodes.
  std::int64_t local_update_count(EdgeId e);

  // Journaling is on by default; turning it off makes bulk deletion cheaper
  // for states that are reset by copy assignment instead of rollback.
  void set_journaling(bool enabled) { journaling_ = enabled; }

  std::size_t checkpoint() const { return journal_.size(); }
  void rollback(std::size_t mark);

 private:
  struct Entry {
    enum Kind : std::uint8_t { kEdgeKilled, kNodeRemoved, kDegreeDecremented };
    Kind kind;
    std::int32_t id;
  };

  void kill_edge(EdgeId e);
  void decrement_degree(NodeId v);
  void remove_node(NodeId v);
  std::int64_t delete_and_cascade(EdgeId e, std::vector<NodeId>* removed);

  const Graph* graph_ = nullptr;
  int k_ = 0;
  bool journaling_ = true;
  std::vector<std::uint8_t> node_alive_;
  std::vector<std::uint8_t> edge_alive_;
  std::vector<int> degree_;  // within the current core; stale for dead nodes
  std::int64_t alive_nodes_ = 0;
  std::int64_t alive_edges_ = 0;
  std::vector<Entry> journal_;
  std::vector<NodeId> cascade_queue_;

  // compute_vs scratch; reset after each probe.
  mutable std::vector<int> probe_loss_;
  mutable std::vector<std::uint8_t> probe_marked_;
  mutable std::vector<NodeId> probe_touched_;
};

}  // namespace corecut
