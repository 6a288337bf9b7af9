#include "corecut/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace corecut {

CoreDecomposition kcore_decompose(const Graph& g) {
  const NodeId n = g.node_count();
  CoreDecomposition out;
  out.core_number.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return out;

  std::vector<int> deg(static_cast<std::size_t>(n));
  int max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  // Bin sort by degree; vert holds nodes in ascending current-degree order,
  // pos[v] is v's slot, bin[d] the first slot of degree d.
  std::vector<NodeId> vert(static_cast<std::size_t>(n));
  std::vector<std::int64_t> pos(static_cast<std::size_t>(n));
  std::vector<std::int64_t> bin(static_cast<std::size_t>(max_deg) + 2, 0);
  for (NodeId v = 0; v < n; ++v) ++bin[deg[v] + 1];
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
  {
    std::vector<std::int64_t> cursor(bin.begin(), bin.end() - 1);
    for (NodeId v = 0; v < n; ++v) {
      pos[v] = cursor[deg[v]]++;
      vert[pos[v]] = v;
    }
  }

  for (std::int64_t i = 0; i < n; ++i) {
    const NodeId v = vert[i];
    out.core_number[v] = deg[v];
    for (const Neighbor& nb : g.neighbors(v)) {
      const NodeId u = nb.node;
      if (deg[u] <= deg[v]) continue;
      // Swap u to the front of its bin, then shrink its degree by one.
      const std::int64_t pu = pos[u];
      const std::int64_t pw = bin[deg[u]];
      const NodeId w = vert[pw];
      if (u != w) {
        std::swap(vert[pu], vert[pw]);
        pos[u] = pw;
        pos[w] = pu;
      }
      ++bin[deg[u]];
      --deg[u];
    }
  }

  out.k_max = 0;
  for (NodeId v = 0; v < n; ++v) out.k_max = std::max(out.k_max, out.core_number[v]);
  return out;
}

CoreSubgraph extract_kcore(const Graph& g, const CoreDecomposition& cores, int k) {
  if (k < 1) throw std::invalid_argument("extract_kcore: k must be >= 1");
  CoreSubgraph sub;
  sub.k = k;
  std::vector<std::int64_t> index(static_cast<std::size_t>(g.node_count()), -1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (cores.in_core(v, k)) {
      index[v] = static_cast<std::int64_t>(sub.nodes.size());
      sub.nodes.push_back(v);
    }
  }
  sub.degree.assign(sub.nodes.size(), 0);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      sub.edges.push_back(id);
      ++sub.degree[index[e.u]];
      ++sub.degree[index[e.v]];
    }
  }
  return sub;
}

CoreSubgraph extract_kcore(const Graph& g, int k) {
  return extract_kcore(g, kcore_decompose(g), k);
}

std::int64_t kcore_size(const Graph& g, int k) {
  const CoreDecomposition cores = kcore_decompose(g);
  std::int64_t n_k = 0;
  for (int c : cores.core_number) n_k += (c >= k) ? 1 : 0;
  return n_k;
}

}  // namespace corecut
