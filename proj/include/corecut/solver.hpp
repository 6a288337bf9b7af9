#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corecut/core.hpp"
#include "corecut/core_state.hpp"
#include "corecut/graph.hpp"

namespace corecut {

// Ordered candidate edge set, a subset of the k-core's edges. Candidates are
// kept sorted by edge id (which is the lexicographic order of the original
// endpoint pairs), so index-based tie-breaking is deterministic.
class CandidateSet {
 public:
  static CandidateSet all_core_edges(const Graph& g, const CoreDecomposition& cores, int k);
  // Validates that every pair is a graph edge with both endpoints in the
  // k-core; duplicates collapse. Throws naming the offending edge otherwise.
  static CandidateSet from_pairs(const Graph& g, const CoreDecomposition& cores, int k,
                                 std::span<const Edge> pairs);

  std::span<const EdgeId> edges() const { return edges_; }
  std::int64_t size() const { return static_cast<std::int64_t>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

 private:
  std::vector<EdgeId> edges_;
};

// Permutation-sampling parameters for the Shapley estimator. When `samples`
// is 0 the count is derived from (epsilon, ell) via sample_size(). With
// `exhaustive` set, every |candidates|! permutation is walked instead.
struct SamplingPlan {
  double epsilon = 0.05;
  int ell = 1;
  std::int64_t samples = 0;
  std::uint64_t seed = 42;
  bool exhaustive = false;
};

// Permutations needed so that every per-edge estimate is within epsilon * N_k
// of the exact value with probability at least 1 - 2*|candidates|^-ell:
// ceil((ell + 1) * ln(gamma_size) / (2 * epsilon^2)), at least 1.
std::int64_t sample_size(std::int64_t gamma_size, double epsilon, int ell);

struct Solution {
  std::string algorithm;
  int k = 0;
  std::int64_t budget = 0;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
  std::optional<int> ell;
  std::optional<std::int64_t> samples;
  std::vector<Edge> edges;     // ranked order
  std::vector<double> scores;  // aligned with edges; empty when undefined
  std::int64_t objective = 0;  // N_k(G) - N_k(G^B), recomputed from scratch
  double dn_percent = 0.0;
  bool core_empty = false;
  double wall_ms = 0.0;
};

// Per-candidate Shapley estimates. `phi[i] = numerator[i] / sample_count`;
// the integer numerators make rank comparisons and equality checks exact.
struct ShapleyEstimates {
  std::vector<double> phi;
  std::vector<std::uint64_t> numerator;
  std::uint64_t sample_count = 0;
};

// Greedy cut: b rounds of "probe every surviving candidate, delete the one
// demoting the most nodes". With `prune`, candidates with an endpoint inside
// an already-probed vulnerable set are skipped in the same round; the output
// is identical either way.
Solution greedy_cut(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                    bool prune = true);

ShapleyEstimates shapley_estimates(const Graph& g, int k, const CandidateSet& candidates,
                                   const SamplingPlan& plan, bool prune = true, int threads = 1);

// Shapley-value cut: estimates each candidate's average marginal collapse
// over sampled permutations and deletes the top b.
Solution shapley_cut(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                     const SamplingPlan& plan, bool prune = true, int threads = 1);

// Baselines: lowest endpoint-degree sum, lowest Jaccard coefficient, uniform
// random. Degrees and neighborhoods are taken within the initial k-core.
Solution baseline_ld(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates);
Solution baseline_jd(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates);
Solution baseline_rd(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                     std::uint64_t seed);

// N_k(G) - N_k(G^B) by scratch recomputation.
std::int64_t kcm_objective(const Graph& g, int k, std::span<const EdgeId> deleted);

}  // namespace corecut
