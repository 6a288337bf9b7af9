#include "corecut/core_state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace corecut {

CoreState::CoreState(const Graph& g, int k) : CoreState(g, kcore_decompose(g), k) {}

CoreState::CoreState(const Graph& g, const CoreDecomposition& cores, int k) : graph_(&g), k_(k) {
  if (k < 1) throw std::invalid_argument("CoreState: k must be >= 1");
  const NodeId n = g.node_count();
  node_alive_.assign(static_cast<std::size_t>(n), 0);
  degree_.assign(static_cast<std::size_t>(n), 0);
  for (NodeId v = 0; v < n; ++v) {
    if (cores.in_core(v, k)) {
      node_alive_[v] = 1;
      ++alive_nodes_;
    }
  }
  edge_alive_.assign(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (node_alive_[ed.u] && node_alive_[ed.v]) {
      edge_alive_[e] = 1;
      ++alive_edges_;
      ++degree_[ed.u];
      ++degree_[ed.v];
    }
  }
  probe_loss_.assign(static_cast<std::size_t>(n), 0);
  probe_marked_.assign(static_cast<std::size_t>(n), 0);
}

std::vector<NodeId> CoreState::alive_nodes() const {
  std::vector<NodeId> out;
  out.reserve(static_cast<std::size_t>(alive_nodes_));
  for (NodeId v = 0; v < graph_->node_count(); ++v) {
    if (node_alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> CoreState::alive_edges() const {
  std::vector<EdgeId> out;
  out.reserve(static_cast<std::size_t>(alive_edges_));
  for (EdgeId e = 0; e < graph_->edge_count(); ++e) {
    if (edge_alive_[e]) out.push_back(e);
  }
  return out;
}

std::vector<NodeId> CoreState::compute_vs(EdgeId e) const {
  if (e < 0 || e >= graph_->edge_count() || !edge_alive_[e]) {
    throw std::invalid_argument("compute_vs: edge " + std::to_string(e) +
                                " is not in the current core");
  }
  const NodeId u = graph_->edge(e).u;
  const NodeId v = graph_->edge(e).v;

  std::vector<NodeId> stack;
  std::vector<NodeId> removed;
  const auto mark = [&](NodeId x) {
    probe_marked_[x] = 1;
    stack.push_back(x);
    removed.push_back(x);
  };

  // The deleted edge costs each endpoint one unit of degree.
  probe_loss_[u] = 1;
  probe_loss_[v] = 1;
  probe_touched_.push_back(u);
  probe_touched_.push_back(v);
  if (degree_[u] - 1 < k_) mark(u);
  if (degree_[v] - 1 < k_) mark(v);

  while (!stack.empty()) {
    const NodeId y = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : graph_->neighbors(y)) {
      const NodeId w = nb.node;
      if (!edge_alive_[nb.edge] || !node_alive_[w] || probe_marked_[w]) continue;
      // The probed edge is already accounted for in the initial losses.
      if ((y == u && w == v) || (y == v && w == u)) continue;
      if (probe_loss_[w] == 0) probe_touched_.push_back(w);
      ++probe_loss_[w];
      if (degree_[w] - probe_loss_[w] < k_) mark(w);
    }
  }

  for (NodeId x : probe_touched_) {
    probe_loss_[x] = 0;
    probe_marked_[x] = 0;
  }
  probe_touched_.clear();

  std::sort(removed.begin(), removed.end());
  return removed;
}

void CoreState::kill_edge(EdgeId e) {
  edge_alive_[e] = 0;
  --alive_edges_;
  if (journaling_) journal_.push_back({Entry::kEdgeKilled, e});
}

void CoreState::decrement_degree(NodeId v) {
  --degree_[v];
  if (journaling_) journal_.push_back({Entry::kDegreeDecremented, v});
}

void CoreState::remove_node(NodeId v) {
  node_alive_[v] = 0;
  --alive_nodes_;
  if (journaling_) journal_.push_back({Entry::kNodeRemoved, v});
}

std::int64_t CoreState::delete_and_cascade(EdgeId e, std::vector<NodeId>* removed) {
  if (e < 0 || e >= graph_->edge_count() || !edge_alive_[e]) {
    throw std::invalid_argument("local_update: edge " + std::to_string(e) +
                                " is not in the current core");
  }
  const NodeId u = graph_->edge(e).u;
  const NodeId v = graph_->edge(e).v;

  kill_edge(e);
  decrement_degree(u);
  decrement_degree(v);

  std::int64_t count = 0;
  auto& queue = cascade_queue_;
  queue.clear();
  const auto drop = [&](NodeId x) {
    remove_node(x);
    ++count;
    if (removed != nullptr) removed->push_back(x);
    queue.push_back(x);
  };

  for (const NodeId x : {u, v}) {
    if (degree_[x] < k_) drop(x);
  }
  while (!queue.empty()) {
    const NodeId y = queue.back();
    queue.pop_back();
    for (const Neighbor& nb : graph_->neighbors(y)) {
      if (!edge_alive_[nb.edge]) continue;
      kill_edge(nb.edge);
      const NodeId w = nb.node;
      if (!node_alive_[w]) continue;
      decrement_degree(w);
      if (degree_[w] < k_) drop(w);
    }
  }
  return count;
}

std::vector<NodeId> CoreState::local_update(EdgeId e) {
  std::vector<NodeId> removed;
  delete_and_cascade(e, &removed);
  std::sort(removed.begin(), removed.end());
  return removed;
}

std::int64_t CoreState::local_update_count(EdgeId e) { return delete_and_cascade(e, nullptr); }

void CoreState::rollback(std::size_t mark) {
  if (mark > journal_.size()) throw std::invalid_argument("rollback: checkpoint is ahead of the journal");
  while (journal_.size() > mark) {
    const Entry entry = journal_.back();
    journal_.pop_back();
    switch (entry.kind) {
      case Entry::kEdgeKilled:
        edge_alive_[entry.id] = 1;
        ++alive_edges_;
        break;
      case Entry::kNodeRemoved:
        node_alive_[entry.id] = 1;
        ++alive_nodes_;
        break;
      case Entry::kDegreeDecremented:
        ++degree_[entry.id];
        break;
    }
  }
}

}  // namespace corecut
