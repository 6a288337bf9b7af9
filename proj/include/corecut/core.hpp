#pragma once

#include <vector>

#include "corecut/graph.hpp"

namespace corecut {

// Core number per node plus the degeneracy. A node v is in the k-core iff
// core_number[v] >= k.
struct CoreDecomposition {
  std::vector<int> core_number;
  int k_max = 0;

  bool in_core(NodeId v, int k) const { return core_number[v] >= k; }
};

// Induced subgraph on the k-core vertex set of some graph. `degree[i]` is the
// degree of `nodes[i]` within the subgraph.
struct CoreSubgraph {
  int k = 0;
  std::vector<NodeId> nodes;   // ascending
  std::vector<EdgeId> edges;   // ascending
  std::vector<int> degree;     // aligned with nodes

  std::int64_t n_k() const { return static_cast<std::int64_t>(nodes.size()); }
  std::int64_t m_k() const { return static_cast<std::int64_t>(edges.size()); }
};

// Bucket-based peeling, O(n + m).
CoreDecomposition kcore_decompose(const Graph& g);

CoreSubgraph extract_kcore(const Graph& g, int k);
CoreSubgraph extract_kcore(const Graph& g, const CoreDecomposition& cores, int k);

// N_k(G) without materializing the subgraph.
std::int64_t kcore_size(const Graph& g, int k);

}  // namespace corecut
