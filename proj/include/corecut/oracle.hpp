#pragma once

#include <cstdint>
#include <vector>

#include "corecut/graph.hpp"
#include "corecut/solver.hpp"

namespace corecut {

// Enumeration caps. The reference implementations refuse instances beyond
// these instead of silently sampling.
struct OracleBudget {
  std::int64_t max_gamma_for_shapley = 8;
  std::int64_t max_subsets_for_opt = 10'000'000;
};

// Fixed point of "remove any node with degree < k, rescan" over full scans.
// Returns the surviving nodes, ascending.
std::vector<NodeId> naive_kcore(const Graph& g, int k);

// Exhaustive search over all size-b candidate subsets; ties go to the
// lexicographically first subset (by edge id). Objectives are recomputed from
// scratch per subset.
Solution exact_kcm(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                   const OracleBudget& budget = {});

struct ExactShapley {
  std::vector<double> phi;               // per candidate, candidate order
  std::vector<std::uint64_t> numerator;  // phi = numerator / permutations
  std::uint64_t permutations = 0;
};

// Exact Shapley values by enumerating every |candidates|! permutation with
// the same walk evaluator the sampler uses.
ExactShapley exact_shapley(const Graph& g, int k, const CandidateSet& candidates,
                           const OracleBudget& budget = {});

// Top-b edges by exact Shapley value as a Solution (algorithm "EXACT_SV").
Solution exact_shapley_cut(const Graph& g, int k, std::int64_t b, const CandidateSet& candidates,
                           const OracleBudget& budget = {});

}  // namespace corecut
