#include "corecut/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "corecut/core.hpp"
#include "corecut/core_state.hpp"

namespace corecut {

std::vector<NodeId> naive_kcore(const Graph& g, int k) {
  const NodeId n = g.node_count();
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(n), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int deg = 0;
      for (const Neighbor& nb : g.neighbors(v)) deg += alive[nb.node] ? 1 : 0;
      if (deg < k) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n; ++v) {
    if (alive[v]) out.push_back(v);
  }
  return out;
}

namespace {

std::int64_t binomial_capped(std::int64_t n, std::int64_t k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

}  // namespace

Solution exact_kcm(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                   const OracleBudget& budget) {
  const auto start = std::chrono::steady_clock::now();
  if (b < 1) throw std::invalid_argument("budget must be >= 1");

  Solution s;
  s.algorithm = "OPT";
  s.k = k;
  s.budget = b;

  const std::int64_t initial_nk = kcore_size(g, k);
  const std::int64_t gamma = candidates.size();
  const std::int64_t pick = std::min(b, gamma);
  if (gamma == 0 || initial_nk == 0) {
    s.core_empty = initial_nk == 0;
    return s;
  }

  const std::int64_t subsets = binomial_capped(gamma, pick, budget.max_subsets_for_opt);
  if (subsets > budget.max_subsets_for_opt) {
    throw std::invalid_argument("exact_kcm: C(" + std::to_string(gamma) + ", " +
                                std::to_string(pick) + ") exceeds the cap of " +
                                std::to_string(budget.max_subsets_for_opt) + " subsets");
  }

  const auto edges = candidates.edges();
  std::vector<std::int64_t> combo(static_cast<std::size_t>(pick));
  std::iota(combo.begin(), combo.end(), 0);

  std::vector<EdgeId> best_edges;
  std::int64_t best_objective = -1;
  std::vector<EdgeId> scratch(static_cast<std::size_t>(pick));

  for (;;) {
    for (std::size_t i = 0; i < combo.size(); ++i) scratch[i] = edges[combo[i]];
    const std::int64_t objective = initial_nk - kcore_size(g.without_edges(scratch), k);
    if (objective > best_objective) {  // first maximizer in lex order wins
      best_objective = objective;
      best_edges = scratch;
    }
    // Next combination in lexicographic order.
    std::int64_t i = pick - 1;
    while (i >= 0 && combo[i] == gamma - pick + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (std::int64_t j = i + 1; j < pick; ++j) combo[j] = combo[j - 1] + 1;
  }

  for (EdgeId e : best_edges) s.edges.push_back(g.edge(e));
  s.objective = best_objective;
  s.dn_percent = 100.0 * static_cast<double>(best_objective) / static_cast<double>(initial_nk);
  s.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return s;
}

ExactShapley exact_shapley(const Graph& g, int k, const CandidateSet& candidates,
                           const OracleBudget& budget) {
  const std::int64_t gamma = candidates.size();
  if (gamma > budget.max_gamma_for_shapley) {
    throw std::invalid_argument("exact_shapley: " + std::to_string(gamma) +
                                " candidates exceed the cap of " +
                                std::to_string(budget.max_gamma_for_shapley));
  }
  ExactShapley out;
  if (gamma == 0) return out;

  const CoreDecomposition cores = kcore_decompose(g);
  CoreState master(g, cores, k);
  master.set_journaling(false);
  CoreState state = master;

  out.numerator.assign(static_cast<std::size_t>(gamma), 0);
  const auto edges = candidates.edges();
  std::vector<std::int32_t> order(static_cast<std::size_t>(gamma));
  std::iota(order.begin(), order.end(), 0);
  do {
    state = master;
    for (const std::int32_t pos : order) {
      const EdgeId e = edges[static_cast<std::size_t>(pos)];
      if (!state.edge_alive(e)) continue;  // endpoints already collapsed: gain 0
      out.numerator[static_cast<std::size_t>(pos)] +=
          static_cast<std::uint64_t>(state.local_update_count(e));
    }
    ++out.permutations;
  } while (std::next_permutation(order.begin(), order.end()));

  out.phi.resize(static_cast<std::size_t>(gamma));
  for (std::size_t i = 0; i < out.phi.size(); ++i) {
    out.phi[i] = static_cast<double>(out.numerator[i]) / static_cast<double>(out.permutations);
  }
  return out;
}

Solution exact_shapley_cut(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                           const OracleBudget& budget) {
  const auto start = std::chrono::steady_clock::now();
  if (b < 1) throw std::invalid_argument("budget must be >= 1");

  Solution s;
  s.algorithm = "EXACT_SV";
  s.k = k;
  s.budget = b;

  const std::int64_t initial_nk = kcore_size(g, k);
  if (candidates.empty() || initial_nk == 0) {
    s.core_empty = initial_nk == 0;
    return s;
  }

  const ExactShapley exact = exact_shapley(g, k, candidates, budget);
  const auto edges = candidates.edges();
  std::vector<std::int32_t> rank(static_cast<std::size_t>(candidates.size()));
  std::iota(rank.begin(), rank.end(), 0);
  std::sort(rank.begin(), rank.end(), [&](std::int32_t a, std::int32_t bdx) {
    if (exact.numerator[a] != exact.numerator[bdx]) return exact.numerator[a] > exact.numerator[bdx];
    return edges[a] < edges[bdx];
  });

  const auto take = static_cast<std::size_t>(std::min<std::int64_t>(b, candidates.size()));
  std::vector<EdgeId> chosen;
  for (std::size_t i = 0; i < take; ++i) {
    chosen.push_back(edges[rank[i]]);
    s.scores.push_back(exact.phi[rank[i]]);
  }
  for (EdgeId e : chosen) s.edges.push_back(g.edge(e));
  s.objective = initial_nk - kcore_size(g.without_edges(chosen), k);
  s.dn_percent = 100.0 * static_cast<double>(s.objective) / static_cast<double>(initial_nk);
  s.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace corecut
