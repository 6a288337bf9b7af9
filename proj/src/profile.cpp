#include "corecut/profile.hpp"

#include <algorithm>
#include <stdexcept>

#include "corecut/core.hpp"
#include "corecut/solver.hpp"

namespace corecut {

double dn_percent(const Graph& g, std::span<const Edge> deleted, int k) {
  const std::int64_t initial_nk = kcore_size(g, k);
  if (initial_nk == 0) return 0.0;
  const std::int64_t after = kcore_size(delete_edges(g, deleted), k);
  return 100.0 * static_cast<double>(initial_nk - after) / static_cast<double>(initial_nk);
}

std::string to_string(ProfileAlgorithm algorithm) {
  switch (algorithm) {
    case ProfileAlgorithm::kShapley: return "SV";
    case ProfileAlgorithm::kGreedy: return "GC";
    case ProfileAlgorithm::kLowDegree: return "LD";
    case ProfileAlgorithm::kLowJaccard: return "JD";
    case ProfileAlgorithm::kRandom: return "RD";
  }
  throw std::invalid_argument("unknown profile algorithm");
}

ProfileAlgorithm parse_profile_algorithm(const std::string& name) {
  if (name == "sv" || name == "SV") return ProfileAlgorithm::kShapley;
  if (name == "gc" || name == "GC") return ProfileAlgorithm::kGreedy;
  if (name == "ld" || name == "LD") return ProfileAlgorithm::kLowDegree;
  if (name == "jd" || name == "JD") return ProfileAlgorithm::kLowJaccard;
  if (name == "rd" || name == "RD") return ProfileAlgorithm::kRandom;
  throw std::invalid_argument("unknown profile algorithm '" + name + "'");
}

ProfileGrid resilience_profile(const Graph& g, std::vector<int> k_values,
                               std::vector<std::int64_t> b_values, ProfileAlgorithm algorithm,
                               const ProfileParams& params) {
  if (k_values.empty() || b_values.empty()) {
    throw std::invalid_argument("resilience_profile: k and budget lists must be nonempty");
  }
  if (!std::is_sorted(k_values.begin(), k_values.end()) ||
      std::adjacent_find(k_values.begin(), k_values.end()) != k_values.end()) {
    throw std::invalid_argument("resilience_profile: k values must be strictly ascending");
  }
  for (int k : k_values) {
    if (k < 1) throw std::invalid_argument("resilience_profile: k values must be >= 1");
  }
  for (std::size_t j = 1; j < b_values.size(); ++j) {
    if (b_values[j] <= b_values[j - 1]) {
      throw std::invalid_argument("resilience_profile: budgets must be strictly ascending");
    }
    if (j >= 2 && b_values[j] - b_values[j - 1] != b_values[1] - b_values[0]) {
      throw std::invalid_argument("resilience_profile: budgets must be uniformly spaced");
    }
  }
  if (b_values.front() < 0) throw std::invalid_argument("resilience_profile: budgets must be >= 0");

  ProfileGrid grid;
  grid.algorithm = to_string(algorithm);
  grid.seed = params.seed;
  grid.k_values = std::move(k_values);
  grid.b_values = std::move(b_values);

  const CoreDecomposition cores = kcore_decompose(g);

  for (const int k : grid.k_values) {
    const CandidateSet candidates = CandidateSet::all_core_edges(g, cores, k);
    const std::int64_t initial_nk = kcore_size(g, k);
    const std::int64_t max_b = std::min<std::int64_t>(grid.b_values.back(), candidates.size());

    std::vector<Edge> ranked;
    if (initial_nk > 0 && max_b >= 1) {
      Solution solved;
      switch (algorithm) {
        case ProfileAlgorithm::kShapley: {
          SamplingPlan plan;
          plan.epsilon = params.epsilon;
          plan.ell = params.ell;
          plan.samples = params.samples;
          plan.seed = params.seed;
          solved = shapley_cut(g, k, max_b, candidates, plan, params.prune, params.threads);
          break;
        }
        case ProfileAlgorithm::kGreedy:
          solved = greedy_cut(g, k, max_b, candidates, params.prune);
          break;
        case ProfileAlgorithm::kLowDegree:
          solved = baseline_ld(g, k, max_b, candidates);
          break;
        case ProfileAlgorithm::kLowJaccard:
          solved = baseline_jd(g, k, max_b, candidates);
          break;
        case ProfileAlgorithm::kRandom:
          solved = baseline_rd(g, k, max_b, candidates, params.seed);
          break;
      }
      ranked = solved.edges;
    }

    std::vector<double> row;
    row.reserve(grid.b_values.size());
    for (const std::int64_t b : grid.b_values) {
      if (initial_nk == 0 || b == 0) {
        row.push_back(0.0);
        continue;
      }
      const auto take = static_cast<std::size_t>(
          std::min<std::int64_t>(b, static_cast<std::int64_t>(ranked.size())));
      const std::span<const Edge> prefix(ranked.data(), take);
      row.push_back(dn_percent(g, prefix, k));
    }
    std::vector<double> delta(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      delta[j] = j == 0 ? row[j] : row[j] - row[j - 1];
    }
    grid.core_empty.push_back(initial_nk == 0 ? 1 : 0);
    grid.cells.push_back(std::move(row));
    grid.deltas.push_back(std::move(delta));
  }
  return grid;
}

}  // namespace corecut
