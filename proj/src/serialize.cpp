#include "corecut/serialize.hpp"

#include <algorithm>

namespace corecut {

Json solution_to_json(const Solution& solution, const Graph& g, bool include_timing) {
  Json j;
  j["algorithm"] = solution.algorithm;
  j["k"] = solution.k;
  j["b"] = solution.budget;
  j["seed"] = solution.seed;
  j["epsilon"] = solution.epsilon ? Json(*solution.epsilon) : Json(nullptr);
  j["ell"] = solution.ell ? Json(*solution.ell) : Json(nullptr);
  j["s"] = solution.samples ? Json(*solution.samples) : Json(nullptr);

  Json edges = Json::array();
  for (const Edge& e : solution.edges) {
    edges.push_back({g.original_id(e.u), g.original_id(e.v)});
  }
  j["edges"] = std::move(edges);
  j["objective"] = solution.objective;
  j["dn_percent"] = solution.dn_percent;

  Json scores = Json::object();
  for (std::size_t i = 0; i < solution.scores.size(); ++i) {
    const Edge& e = solution.edges[i];
    scores[std::to_string(g.original_id(e.u)) + "," + std::to_string(g.original_id(e.v))] =
        solution.scores[i];
  }
  j["per_edge_score"] = std::move(scores);
  if (solution.core_empty) j["warning"] = "k-core is empty";
  if (include_timing) j["wall_time_ms"] = solution.wall_ms;
  return j;
}

std::string solution_to_csv(const Solution& solution, const Graph& g) {
  std::string out = "u,v,score\n";
  for (std::size_t i = 0; i < solution.edges.size(); ++i) {
    const Edge& e = solution.edges[i];
    out += std::to_string(g.original_id(e.u));
    out += ',';
    out += std::to_string(g.original_id(e.v));
    out += ',';
    out += i < solution.scores.size() ? Json(solution.scores[i]).dump() : std::string();
    out += '\n';
  }
  return out;
}

std::string decomposition_to_csv(const Graph& g, const CoreDecomposition& cores) {
  std::string out = "node,core_number\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out += std::to_string(g.original_id(v));
    out += ',';
    out += std::to_string(cores.core_number[v]);
    out += '\n';
  }
  return out;
}

Json decomposition_summary(const Graph& g, const CoreDecomposition& cores) {
  Json j;
  j["n"] = g.node_count();
  j["m"] = g.edge_count();
  j["k_max"] = cores.k_max;
  Json per_k = Json::object();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cores.k_max) + 1, 0);
  for (int c : cores.core_number) ++counts[static_cast<std::size_t>(c)];
  std::int64_t running = 0;
  for (int k = cores.k_max; k >= 1; --k) {
    running += counts[static_cast<std::size_t>(k)];
    per_k[std::to_string(k)] = running;
  }
  // Ascending k for readability.
  Json ordered = Json::object();
  for (int k = 1; k <= cores.k_max; ++k) ordered[std::to_string(k)] = per_k[std::to_string(k)];
  j["N_k"] = std::move(ordered);
  return j;
}

std::string profile_to_csv(const ProfileGrid& grid) {
  std::string out = "k,b,dn_percent,delta_dn\n";
  for (std::size_t r = 0; r < grid.k_values.size(); ++r) {
    for (std::size_t j = 0; j < grid.b_values.size(); ++j) {
      out += std::to_string(grid.k_values[r]);
      out += ',';
      out += std::to_string(grid.b_values[j]);
      out += ',';
      out += Json(grid.cells[r][j]).dump();
      out += ',';
      out += Json(grid.deltas[r][j]).dump();
      out += '\n';
    }
  }
  return out;
}

Json profile_to_json(const ProfileGrid& grid) {
  Json j;
  j["algorithm"] = grid.algorithm;
  j["seed"] = grid.seed;
  j["k_values"] = grid.k_values;
  j["b_values"] = grid.b_values;
  j["cells"] = grid.cells;
  j["deltas"] = grid.deltas;
  Json flags = Json::array();
  for (std::uint8_t f : grid.core_empty) flags.push_back(f != 0);
  j["core_empty"] = std::move(flags);
  return j;
}

Json gadget_sidecar(const GadgetGraph& gadget, const Json& instance, const std::string& type) {
  Json j;
  j["type"] = type;
  j["instance"] = instance;
  Json roles = Json::array();
  for (NodeId v = 0; v < gadget.graph.node_count(); ++v) {
    const NodeRole& r = gadget.roles[v];
    Json entry;
    entry["node"] = gadget.graph.original_id(v);
    entry["role"] = std::string(1, r.role);
    entry["group"] = r.group;
    entry["pos"] = r.pos;
    roles.push_back(std::move(entry));
  }
  j["roles"] = std::move(roles);
  Json gamma = Json::array();
  for (EdgeId e : gadget.candidate_edges) {
    const auto [a, b] = gadget.graph.original_pair(e);
    gamma.push_back({a, b});
  }
  j["gamma"] = std::move(gamma);
  return j;
}

}  // namespace corecut
