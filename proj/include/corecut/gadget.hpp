#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corecut/graph.hpp"

namespace corecut {

// Set Union Knapsack instance with equal profits and weights: items 0..n-1
// and a family of nonempty item subsets.
struct SkInstance {
  std::int32_t n_items = 0;
  std::vector<std::vector<std::int32_t>> subsets;
};

// Set Cover instance: every item must appear in at least one subset.
struct ScInstance {
  std::int32_t n_items = 0;
  std::vector<std::vector<std::int32_t>> subsets;
};

// Role of a gadget node: Y item cycles, Z anchor widgets, X subset structures
// (block+apex or cycle), W handle cycles. group and pos are 1-based.
struct NodeRole {
  char role = '?';
  std::int32_t group = 0;
  std::int32_t pos = 0;
};

struct GadgetGraph {
  Graph graph;
  std::vector<EdgeId> candidate_edges;  // the designated removable edges
  std::vector<NodeRole> roles;          // by node id

  NodeId node(char role, std::int32_t group, std::int32_t pos) const;
  std::string label(NodeId v) const;
};

// Reduction graph for the equal-profit Set Union Knapsack problem. Every node
// starts in the 3-core; removing the (Y_j1, Y_j2) edge of item j collapses
// its m'-cycle plus Z_j1, and a subset's block+apex collapses once all of its
// items are gone. x_block_size must be even and >= 4; two block nodes act as
// degree-2 stubs that the apex tops up to degree 3.
GadgetGraph build_sk_gadget(const SkInstance& instance, std::int32_t x_block_size = 4);

// Reduction graph for Set Cover. Removing subset i's (W_i1, W_i2) edge
// collapses its W- and X-cycles (2n nodes) and releases its items; an item's
// cycle plus Z_j1 (m+1 nodes) collapses once some chosen subset contains it.
GadgetGraph build_setcover_gadget(const ScInstance& instance);

}  // namespace corecut
