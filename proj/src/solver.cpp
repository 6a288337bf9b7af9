#include "corecut/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "corecut/rng.hpp"

namespace corecut {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Solution make_base(std::string algorithm, int k, std::int64_t b) {
  Solution s;
  s.algorithm = std::move(algorithm);
  s.k = k;
  s.budget = b;
  return s;
}

// Fills objective and dn_percent by scratch recomputation on G^B.
void finalize(Solution& s, const Graph& g, std::span<const EdgeId> chosen,
              std::int64_t initial_nk, Clock::time_point start) {
  s.objective = initial_nk - kcore_size(g.without_edges(chosen), s.k);
  s.dn_percent = initial_nk == 0 ? 0.0
                                 : 100.0 * static_cast<double>(s.objective) /
                                       static_cast<double>(initial_nk);
  s.core_empty = initial_nk == 0;
  s.wall_ms = elapsed_ms(start);
}

void require_budget(std::int64_t b) {
  if (b < 1) throw std::invalid_argument("budget must be >= 1");
}

std::vector<Edge> to_pairs(const Graph& g, std::span<const EdgeId> ids) {
  std::vector<Edge> out;
  out.reserve(ids.size());
  for (EdgeId id : ids) out.push_back(g.edge(id));
  return out;
}

std::uint64_t factorial(std::int64_t n) {
  std::uint64_t f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// index-th permutation of 0..size-1 in factorial-base (Lehmer) order.
void decode_permutation(std::uint64_t index, std::size_t size, std::vector<std::int32_t>& out) {
  std::vector<std::int32_t> pool(size);
  std::iota(pool.begin(), pool.end(), 0);
  out.clear();
  std::uint64_t f = factorial(static_cast<std::int64_t>(size));
  for (std::size_t i = 0; i < size; ++i) {
    f /= static_cast<std::uint64_t>(size - i);
    const auto d = static_cast<std::size_t>(index / f);
    index %= f;
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
}

}  // namespace

CandidateSet CandidateSet::all_core_edges(const Graph& g, const CoreDecomposition& cores, int k) {
  CandidateSet set;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (cores.in_core(ed.u, k) && cores.in_core(ed.v, k)) set.edges_.push_back(e);
  }
  return set;
}

CandidateSet CandidateSet::from_pairs(const Graph& g, const CoreDecomposition& cores, int k,
                                      std::span<const Edge> pairs) {
  CandidateSet set;
  for (const Edge& p : pairs) {
    const Edge e = make_edge(p.u, p.v);
    const auto id = g.find_edge(e.u, e.v);
    if (!id) {
      throw std::invalid_argument("candidate edge (" + std::to_string(g.original_id(e.u)) + ", " +
                                  std::to_string(g.original_id(e.v)) + ") is not a graph edge");
    }
    if (!cores.in_core(e.u, k) || !cores.in_core(e.v, k)) {
      throw std::invalid_argument("candidate edge (" + std::to_string(g.original_id(e.u)) + ", " +
                                  std::to_string(g.original_id(e.v)) + ") lies outside the " +
                                  std::to_string(k) + "-core");
    }
    set.edges_.push_back(*id);
  }
  std::sort(set.edges_.begin(), set.edges_.end());
  set.edges_.erase(std::unique(set.edges_.begin(), set.edges_.end()), set.edges_.end());
  return set;
}

std::int64_t sample_size(std::int64_t gamma_size, double epsilon, int ell) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (ell < 1) throw std::invalid_argument("ell must be a positive integer");
  if (gamma_size < 1) throw std::invalid_argument("candidate set must be nonempty");
  const double bound = static_cast<double>(ell + 1) * std::log(static_cast<double>(gamma_size)) /
                       (2.0 * epsilon * epsilon);
  const auto s = static_cast<std::int64_t>(std::ceil(bound));
  return std::max<std::int64_t>(s, 1);
}

Solution greedy_cut(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                    bool prune) {
  const auto start = Clock::now();
  require_budget(b);
  Solution s = make_base("GC", k, b);

  const CoreDecomposition cores = kcore_decompose(g);
  CoreState state(g, cores, k);
  const std::int64_t initial_nk = state.alive_node_count();

  std::vector<EdgeId> chosen;
  std::vector<std::uint32_t> covered(static_cast<std::size_t>(g.node_count()), 0);

  for (std::uint32_t round = 1; round <= static_cast<std::uint64_t>(b); ++round) {
    if (state.alive_node_count() == 0) break;
    std::int64_t best_gain = -1;
    EdgeId best = -1;
    for (EdgeId e : candidates.edges()) {
      if (!state.edge_alive(e)) continue;
      if (prune) {
        // Dominated by an edge probed earlier this round: its vulnerable set
        // is a subset of that edge's, so it can never beat the running max.
        const Edge& ed = g.edge(e);
        if (covered[ed.u] == round || covered[ed.v] == round) continue;
      }
      const std::vector<NodeId> vs = state.compute_vs(e);
      if (prune) {
        for (NodeId x : vs) covered[x] = round;
      }
      if (static_cast<std::int64_t>(vs.size()) > best_gain) {
        best_gain = static_cast<std::int64_t>(vs.size());
        best = e;
      }
    }
    if (best < 0) break;  // candidates exhausted
    state.local_update(best);
    chosen.push_back(best);
    s.scores.push_back(static_cast<double>(best_gain));
  }

  s.edges = to_pairs(g, chosen);
  finalize(s, g, chosen, initial_nk, start);
  return s;
}

namespace {

// Walks one permutation of candidate positions, accumulating each edge's
// marginal collapse into acc. Deleting an edge whose endpoints already left
// the working core removes nothing, which is exactly the dominance rule; the
// prune flag only short-circuits the probe.
void walk_permutation(CoreState& state, const Graph& g, std::span<const EdgeId> edges,
                      std::span<const std::int32_t> order, bool prune,
                      std::vector<std::uint64_t>& acc) {
  for (const std::int32_t pos : order) {
    const EdgeId e = edges[static_cast<std::size_t>(pos)];
    if (prune) {
      const Edge& ed = g.edge(e);
      if (!state.node_alive(ed.u) || !state.node_alive(ed.v)) continue;
    }
    if (!state.edge_alive(e)) continue;
    acc[static_cast<std::size_t>(pos)] += static_cast<std::uint64_t>(state.local_update_count(e));
  }
}

}  // namespace

ShapleyEstimates shapley_estimates(const Graph& g, int k, const CandidateSet& candidates,
                                   const SamplingPlan& plan, bool prune, int threads) {
  const auto gamma = candidates.size();
  ShapleyEstimates out;
  if (gamma == 0) return out;

  std::uint64_t total = 0;
  if (plan.exhaustive) {
    if (gamma > 10) {
      throw std::invalid_argument("exhaustive permutation walk is limited to 10 candidates");
    }
    total = factorial(gamma);
  } else {
    total = static_cast<std::uint64_t>(plan.samples > 0 ? plan.samples
                                                        : sample_size(gamma, plan.epsilon, plan.ell));
  }
  out.sample_count = total;

  const CoreDecomposition cores = kcore_decompose(g);
  CoreState master(g, cores, k);
  master.set_journaling(false);  // walk states reset by copy, never rollback

  const int worker_count =
      static_cast<int>(std::min<std::uint64_t>(std::max(threads, 1), total));
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(worker_count),
      std::vector<std::uint64_t>(static_cast<std::size_t>(gamma), 0));

  const auto run_worker = [&](int worker) {
    CoreState state = master;
    std::vector<std::int32_t> order(static_cast<std::size_t>(gamma));
    std::vector<std::uint64_t>& acc = partial[static_cast<std::size_t>(worker)];
    for (std::uint64_t i = worker; i < total; i += static_cast<std::uint64_t>(worker_count)) {
      if (plan.exhaustive) {
        decode_permutation(i, static_cast<std::size_t>(gamma), order);
      } else {
        std::iota(order.begin(), order.end(), 0);
        auto rng = seeded_engine(plan.seed, i);
        shuffle(order, rng);
      }
      state = master;
      walk_permutation(state, g, candidates.edges(), order, prune, acc);
    }
  };

  if (worker_count <= 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }

  out.numerator.assign(static_cast<std::size_t>(gamma), 0);
  for (const auto& acc : partial) {
    for (std::size_t i = 0; i < acc.size(); ++i) out.numerator[i] += acc[i];
  }
  out.phi.resize(static_cast<std::size_t>(gamma));
  for (std::size_t i = 0; i < out.phi.size(); ++i) {
    out.phi[i] = static_cast<double>(out.numerator[i]) / static_cast<double>(total);
  }
  return out;
}

Solution shapley_cut(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                     const SamplingPlan& plan, bool prune, int threads) {
  const auto start = Clock::now();
  require_budget(b);
  Solution s = make_base("SV", k, b);
  s.seed = plan.seed;
  s.epsilon = plan.epsilon;
  s.ell = plan.ell;

  const std::int64_t initial_nk = kcore_size(g, k);
  if (candidates.empty() || initial_nk == 0) {
    s.samples = 0;
    s.core_empty = initial_nk == 0;
    s.wall_ms = elapsed_ms(start);
    return s;
  }

  const ShapleyEstimates est = shapley_estimates(g, k, candidates, plan, prune, threads);
  s.samples = static_cast<std::int64_t>(est.sample_count);

  // Rank by estimate, ties by ascending edge id; integer numerators keep the
  // comparison exact.
  std::vector<std::int32_t> rank(static_cast<std::size_t>(candidates.size()));
  std::iota(rank.begin(), rank.end(), 0);
  const auto edges = candidates.edges();
  std::sort(rank.begin(), rank.end(), [&](std::int32_t a, std::int32_t bdx) {
    if (est.numerator[a] != est.numerator[bdx]) return est.numerator[a] > est.numerator[bdx];
    return edges[a] < edges[bdx];
  });

  const auto take = static_cast<std::size_t>(std::min<std::int64_t>(b, candidates.size()));
  std::vector<EdgeId> chosen;
  chosen.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    chosen.push_back(edges[rank[i]]);
    s.scores.push_back(est.phi[rank[i]]);
  }
  s.edges = to_pairs(g, chosen);
  finalize(s, g, chosen, initial_nk, start);
  return s;
}

namespace {

Solution ranked_baseline(const char* tag, const Graph& g, int k, std::int64_t b,
                         const CandidateSet& candidates, std::span<const double> score) {
  const auto start = Clock::now();
  Solution s = make_base(tag, k, b);
  const std::int64_t initial_nk = kcore_size(g, k);
  if (candidates.empty() || initial_nk == 0) {
    s.core_empty = initial_nk == 0;
    s.wall_ms = elapsed_ms(start);
    return s;
  }

  const auto edges = candidates.edges();
  std::vector<std::int32_t> rank(static_cast<std::size_t>(candidates.size()));
  std::iota(rank.begin(), rank.end(), 0);
  std::sort(rank.begin(), rank.end(), [&](std::int32_t a, std::int32_t bdx) {
    if (score[a] != score[bdx]) return score[a] < score[bdx];
    return edges[a] < edges[bdx];
  });

  const auto take = static_cast<std::size_t>(std::min<std::int64_t>(b, candidates.size()));
  std::vector<EdgeId> chosen;
  for (std::size_t i = 0; i < take; ++i) {
    chosen.push_back(edges[rank[i]]);
    s.scores.push_back(score[rank[i]]);
  }
  s.edges = to_pairs(g, chosen);
  finalize(s, g, chosen, initial_nk, start);
  return s;
}

}  // namespace

Solution baseline_ld(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates) {
  require_budget(b);
  const CoreDecomposition cores = kcore_decompose(g);
  const CoreState core(g, cores, k);
  std::vector<double> score;
  score.reserve(static_cast<std::size_t>(candidates.size()));
  for (EdgeId e : candidates.edges()) {
    const Edge& ed = g.edge(e);
    score.push_back(static_cast<double>(core.degree(ed.u) + core.degree(ed.v)));
  }
  return ranked_baseline("LD", g, k, b, candidates, score);
}

Solution baseline_jd(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates) {
  require_budget(b);
  const CoreDecomposition cores = kcore_decompose(g);
  const CoreState core(g, cores, k);
  std::vector<double> score;
  score.reserve(static_cast<std::size_t>(candidates.size()));
  for (EdgeId e : candidates.edges()) {
    const Edge& ed = g.edge(e);
    // Common core neighbors via merge over sorted adjacency.
    std::int64_t common = 0;
    auto a = g.neighbors(ed.u);
    auto bn = g.neighbors(ed.v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < bn.size()) {
      if (a[i].node < bn[j].node) {
        ++i;
      } else if (a[i].node > bn[j].node) {
        ++j;
      } else {
        if (core.node_alive(a[i].node)) ++common;
        ++i;
        ++j;
      }
    }
    const std::int64_t denom = core.degree(ed.u) + core.degree(ed.v) - 2 - common;
    score.push_back(denom > 0 ? static_cast<double>(common) / static_cast<double>(denom) : 0.0);
  }
  return ranked_baseline("JD", g, k, b, candidates, score);
}

Solution baseline_rd(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                     std::uint64_t seed) {
  const auto start = Clock::now();
  require_budget(b);
  Solution s = make_base("RD", k, b);
  s.seed = seed;
  const std::int64_t initial_nk = kcore_size(g, k);
  if (candidates.empty() || initial_nk == 0) {
    s.core_empty = initial_nk == 0;
    s.wall_ms = elapsed_ms(start);
    return s;
  }

  std::vector<EdgeId> pool(candidates.edges().begin(), candidates.edges().end());
  const auto take = static_cast<std::size_t>(std::min<std::int64_t>(b, candidates.size()));
  auto rng = seeded_engine(seed);
  partial_shuffle(pool, take, rng);
  std::vector<EdgeId> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));

  s.edges = to_pairs(g, chosen);
  finalize(s, g, chosen, initial_nk, start);
  return s;
}

std::int64_t kcm_objective(const Graph& g, int k, std::span<const EdgeId> deleted) {
  return kcore_size(g, k) - kcore_size(g.without_edges(deleted), k);
}

}  // namespace corecut
