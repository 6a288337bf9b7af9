#pragma once

#include <string>

#include <json.hpp>

#include "corecut/core.hpp"
#include "corecut/gadget.hpp"
#include "corecut/graph.hpp"
#include "corecut/profile.hpp"
#include "corecut/solver.hpp"

namespace corecut {

using Json = nlohmann::ordered_json;

// {algorithm, k, b, seed, epsilon, ell, s, edges, objective, dn_percent,
//  per_edge_score, [warning], [wall_time_ms]}. Edges use original ids.
Json solution_to_json(const Solution& solution, const Graph& g, bool include_timing = false);
std::string solution_to_csv(const Solution& solution, const Graph& g);

// "node,core_number" rows in ascending original id.
std::string decomposition_to_csv(const Graph& g, const CoreDecomposition& cores);
// {n, m, k_max, N_k per k}.
Json decomposition_summary(const Graph& g, const CoreDecomposition& cores);

// "k,b,dn_percent,delta_dn" rows, ascending k then b.
std::string profile_to_csv(const ProfileGrid& grid);
Json profile_to_json(const ProfileGrid& grid);

// {type, instance, roles, gamma} companion for an emitted gadget edge list.
Json gadget_sidecar(const GadgetGraph& gadget, const Json& instance, const std::string& type);

}  // namespace corecut
