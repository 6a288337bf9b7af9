#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corecut/graph.hpp"

namespace corecut {

// Percentage of the k-core demoted by deleting B:
// 100 * (N_k(G) - N_k(G^B)) / N_k(G), or 0 for an empty k-core.
double dn_percent(const Graph& g, std::span<const Edge> deleted, int k);

enum class ProfileAlgorithm { kShapley, kGreedy, kLowDegree, kLowJaccard, kRandom };

std::string to_string(ProfileAlgorithm algorithm);
ProfileAlgorithm parse_profile_algorithm(const std::string& name);

struct ProfileParams {
  std::uint64_t seed = 42;
  double epsilon = 0.05;
  int ell = 1;
  std::int64_t samples = 0;  // 0 = derive from (epsilon, ell)
  bool prune = true;
  int threads = 1;
};

// DN(%) over a (k, budget) lattice. Cells for one k come from nested prefixes
// of a single max-budget solve, so they are non-decreasing in the budget.
// deltas[r][0] = cells[r][0]; deltas[r][j] = cells[r][j] - cells[r][j-1].
struct ProfileGrid {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::vector<int> k_values;
  std::vector<std::int64_t> b_values;
  std::vector<std::vector<double>> cells;
  std::vector<std::vector<double>> deltas;
  std::vector<std::uint8_t> core_empty;  // per k row
};

// k_values ascending; b_values ascending with a uniform step. Empty k-cores
// produce a flagged all-zero row.
ProfileGrid resilience_profile(const Graph& g, std::vector<int> k_values,
                               std::vector<std::int64_t> b_values, ProfileAlgorithm algorithm,
                               const ProfileParams& params = {});

}  // namespace corecut
