// Python bindings for the corecut library. The module mirrors the CLI's
// operations: parsing, decomposition, the KCM solvers, exact oracles, gadget
// generators and the resilience profiler. Edges cross the boundary as
// (u, v) pairs in original identifiers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>

#include "corecut/core.hpp"
#include "corecut/core_state.hpp"
#include "corecut/gadget.hpp"
#include "corecut/graph.hpp"
#include "corecut/oracle.hpp"
#include "corecut/profile.hpp"
#include "corecut/serialize.hpp"
#include "corecut/solver.hpp"

namespace py = pybind11;
using namespace corecut;

namespace {

using OriginalEdge = std::pair<OriginalId, OriginalId>;

Edge to_internal(const Graph& g, const OriginalEdge& pair) {
  const auto u = g.find_node(pair.first);
  const auto v = g.find_node(pair.second);
  if (!u || !v) {
    throw std::invalid_argument("edge (" + std::to_string(pair.first) + ", " +
                                std::to_string(pair.second) + ") references an unknown node");
  }
  return make_edge(*u, *v);
}

std::vector<OriginalEdge> to_original(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<OriginalEdge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(g.original_id(e.u), g.original_id(e.v));
  return out;
}

CandidateSet resolve_candidates(const Graph& g, const CoreDecomposition& cores, int k,
                                const std::optional<std::vector<OriginalEdge>>& candidates) {
  if (!candidates) return CandidateSet::all_core_edges(g, cores, k);
  std::vector<Edge> pairs;
  pairs.reserve(candidates->size());
  for (const OriginalEdge& pair : *candidates) pairs.push_back(to_internal(g, pair));
  return CandidateSet::from_pairs(g, cores, k, pairs);
}

SamplingPlan make_plan(double epsilon, int ell, std::int64_t samples, std::uint64_t seed,
                       bool exhaustive) {
  SamplingPlan plan;
  plan.epsilon = epsilon;
  plan.ell = ell;
  plan.samples = samples;
  plan.seed = seed;
  plan.exhaustive = exhaustive;
  return plan;
}

}  // namespace

PYBIND11_MODULE(corecut, m) {
  m.doc() = "k-core decomposition and budgeted k-core minimization";

  py::class_<ParseReport>(m, "ParseReport")
      .def_readonly("duplicate_edges", &ParseReport::duplicate_edges)
      .def_readonly("self_loops", &ParseReport::self_loops);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
            std::vector<Edge> converted;
            converted.reserve(edges.size());
            for (const auto& [u, v] : edges) {
              if (u < 0 || v < 0 || u >= n || v >= n) {
                throw std::invalid_argument("edge endpoint outside 0..n-1");
              }
              converted.push_back(make_edge(u, v));
            }
            return Graph::from_edges(n, std::move(converted));
          },
          py::arg("n"), py::arg("edges"), "Build a graph over dense node ids 0..n-1.")
      .def_property_readonly("n", &Graph::node_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("node"))
      .def("original_id", &Graph::original_id, py::arg("node"))
      .def("edges", [](const Graph& g) { return to_original(g, {g.edges().begin(), g.edges().end()}); })
      .def("neighbors",
           [](const Graph& g, NodeId v) {
             std::vector<NodeId> out;
             for (const Neighbor& nb : g.neighbors(v)) out.push_back(nb.node);
             return out;
           },
           py::arg("node"))
      .def("to_edge_list", &Graph::to_edge_list)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.node_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def(
      "parse_edge_list",
      [](const std::string& text) {
        auto [g, report] = parse_edge_list(text);
        return py::make_tuple(std::move(g), report);
      },
      py::arg("text"), "Parse a 'u v' per line edge list; returns (graph, report).");

  m.def(
      "delete_edges",
      [](const Graph& g, const std::vector<OriginalEdge>& edges) {
        std::vector<Edge> internal;
        internal.reserve(edges.size());
        for (const OriginalEdge& pair : edges) internal.push_back(to_internal(g, pair));
        return delete_edges(g, internal);
      },
      py::arg("graph"), py::arg("edges"), "Copy of the graph without the given edges.");

  py::class_<CoreDecomposition>(m, "CoreDecomposition")
      .def_readonly("core_number", &CoreDecomposition::core_number)
      .def_readonly("k_max", &CoreDecomposition::k_max);

  m.def("decompose", &kcore_decompose, py::arg("graph"));

  py::class_<CoreSubgraph>(m, "CoreSubgraph")
      .def_readonly("k", &CoreSubgraph::k)
      .def_readonly("nodes", &CoreSubgraph::nodes)
      .def_property_readonly("n_k", &CoreSubgraph::n_k)
      .def_property_readonly("m_k", &CoreSubgraph::m_k);

  m.def("extract_kcore", py::overload_cast<const Graph&, int>(&extract_kcore), py::arg("graph"),
        py::arg("k"));
  m.def("kcore_size", &kcore_size, py::arg("graph"), py::arg("k"));

  m.def(
      "compute_vs",
      [](const Graph& g, int k, const OriginalEdge& edge) {
        CoreState state(g, k);
        const Edge e = to_internal(g, edge);
        const auto id = g.find_edge(e.u, e.v);
        if (!id) throw std::invalid_argument("edge is not in the graph");
        return state.compute_vs(*id);
      },
      py::arg("graph"), py::arg("k"), py::arg("edge"),
      "Nodes that leave the k-core when the edge is deleted.");

  py::class_<Solution>(m, "Solution")
      .def_readonly("algorithm", &Solution::algorithm)
      .def_readonly("k", &Solution::k)
      .def_readonly("budget", &Solution::budget)
      .def_readonly("seed", &Solution::seed)
      .def_readonly("epsilon", &Solution::epsilon)
      .def_readonly("ell", &Solution::ell)
      .def_readonly("samples", &Solution::samples)
      .def_readonly("objective", &Solution::objective)
      .def_readonly("dn_percent", &Solution::dn_percent)
      .def_readonly("scores", &Solution::scores)
      .def_readonly("core_empty", &Solution::core_empty)
      .def("__repr__", [](const Solution& s) {
        return "Solution(" + s.algorithm + ", objective=" + std::to_string(s.objective) + ")";
      });

  m.def("sample_size", &sample_size, py::arg("gamma_size"), py::arg("epsilon"), py::arg("ell"));

  // Solvers return (solution, edges) with edges in original ids so callers
  // do not need to hold the graph to interpret them.
  const auto solved = [](const Graph& g, Solution s) {
    auto edges = to_original(g, s.edges);
    return py::make_tuple(std::move(s), std::move(edges));
  };

  m.def(
      "greedy_cut",
      [solved](const Graph& g, int k, std::int64_t b,
               const std::optional<std::vector<OriginalEdge>>& candidates, bool prune) {
        const CoreDecomposition cores = kcore_decompose(g);
        return solved(g, greedy_cut(g, k, b, resolve_candidates(g, cores, k, candidates), prune));
      },
      py::arg("graph"), py::arg("k"), py::arg("b"), py::arg("candidates") = std::nullopt,
      py::arg("prune") = true);

  m.def(
      "shapley_cut",
      [solved](const Graph& g, int k, std::int64_t b,
               const std::optional<std::vector<OriginalEdge>>& candidates, double epsilon, int ell,
               std::int64_t samples, std::uint64_t seed, bool prune, int threads) {
        const CoreDecomposition cores = kcore_decompose(g);
        return solved(g, shapley_cut(g, k, b, resolve_candidates(g, cores, k, candidates),
                                     make_plan(epsilon, ell, samples, seed, false), prune, threads));
      },
      py::arg("graph"), py::arg("k"), py::arg("b"), py::arg("candidates") = std::nullopt,
      py::arg("epsilon") = 0.05, py::arg("ell") = 1, py::arg("samples") = 0, py::arg("seed") = 42,
      py::arg("prune") = true, py::arg("threads") = 1);

  m.def(
      "shapley_estimates",
      [](const Graph& g, int k, const std::optional<std::vector<OriginalEdge>>& candidates,
         double epsilon, int ell, std::int64_t samples, std::uint64_t seed, bool exhaustive,
         bool prune, int threads) {
        const CoreDecomposition cores = kcore_decompose(g);
        const CandidateSet set = resolve_candidates(g, cores, k, candidates);
        const ShapleyEstimates est = shapley_estimates(
            g, k, set, make_plan(epsilon, ell, samples, seed, exhaustive), prune, threads);
        std::vector<OriginalEdge> edges;
        for (EdgeId e : set.edges()) edges.push_back(g.original_pair(e));
        return py::make_tuple(std::move(edges), est.phi, est.sample_count);
      },
      py::arg("graph"), py::arg("k"), py::arg("candidates") = std::nullopt,
      py::arg("epsilon") = 0.05, py::arg("ell") = 1, py::arg("samples") = 0, py::arg("seed") = 42,
      py::arg("exhaustive") = false, py::arg("prune") = true, py::arg("threads") = 1,
      "Per-candidate Shapley estimates as (edges, phi, sample_count).");

  m.def(
      "baseline_ld",
      [solved](const Graph& g, int k, std::int64_t b,
               const std::optional<std::vector<OriginalEdge>>& candidates) {
        const CoreDecomposition cores = kcore_decompose(g);
        return solved(g, baseline_ld(g, k, b, resolve_candidates(g, cores, k, candidates)));
      },
      py::arg("graph"), py::arg("k"), py::arg("b"), py::arg("candidates") = std::nullopt);

  m.def(
      "baseline_jd",
      [solved](const Graph& g, int k, std::int64_t b,
               const std::optional<std::vector<OriginalEdge>>& candidates) {
        const CoreDecomposition cores = kcore_decompose(g);
        return solved(g, baseline_jd(g, k, b, resolve_candidates(g, cores, k, candidates)));
      },
      py::arg("graph"), py::arg("k"), py::arg("b"), py::arg("candidates") = std::nullopt);

  m.def(
      "baseline_rd",
      [solved](const Graph& g, int k, std::int64_t b,
               const std::optional<std::vector<OriginalEdge>>& candidates, std::uint64_t seed) {
        const CoreDecomposition cores = kcore_decompose(g);
        return solved(g, baseline_rd(g, k, b, resolve_candidates(g, cores, k, candidates), seed));
      },
      py::arg("graph"), py::arg("k"), py::arg("b"), py::arg("candidates") = std::nullopt,
      py::arg("seed") = 42);

  m.def(
      "exact_kcm",
      [solved](const Graph& g, int k, std::int64_t b,
               const std::optional<std::vector<OriginalEdge>>& candidates,
               std::int64_t max_subsets) {
        const CoreDecomposition cores = kcore_decompose(g);
        OracleBudget budget;
        budget.max_subsets_for_opt = max_subsets;
        return solved(g, exact_kcm(g, k, b, resolve_candidates(g, cores, k, candidates), budget));
      },
      py::arg("graph"), py::arg("k"), py::arg("b"), py::arg("candidates") = std::nullopt,
      py::arg("max_subsets") = 10'000'000);

  m.def(
      "exact_shapley",
      [](const Graph& g, int k, const std::optional<std::vector<OriginalEdge>>& candidates,
         std::int64_t max_gamma) {
        const CoreDecomposition cores = kcore_decompose(g);
        const CandidateSet set = resolve_candidates(g, cores, k, candidates);
        OracleBudget budget;
        budget.max_gamma_for_shapley = max_gamma;
        const ExactShapley exact = exact_shapley(g, k, set, budget);
        std::vector<OriginalEdge> edges;
        for (EdgeId e : set.edges()) edges.push_back(g.original_pair(e));
        return py::make_tuple(std::move(edges), exact.phi, exact.permutations);
      },
      py::arg("graph"), py::arg("k"), py::arg("candidates") = std::nullopt,
      py::arg("max_gamma") = 8, "Exact values as (edges, phi, permutations).");

  m.def(
      "dn_percent",
      [](const Graph& g, const std::vector<OriginalEdge>& edges, int k) {
        std::vector<Edge> internal;
        for (const OriginalEdge& pair : edges) internal.push_back(to_internal(g, pair));
        return dn_percent(g, internal, k);
      },
      py::arg("graph"), py::arg("edges"), py::arg("k"));

  py::class_<ProfileGrid>(m, "ProfileGrid")
      .def_readonly("algorithm", &ProfileGrid::algorithm)
      .def_readonly("seed", &ProfileGrid::seed)
      .def_readonly("k_values", &ProfileGrid::k_values)
      .def_readonly("b_values", &ProfileGrid::b_values)
      .def_readonly("cells", &ProfileGrid::cells)
      .def_readonly("deltas", &ProfileGrid::deltas)
      .def("to_csv", [](const ProfileGrid& grid) { return profile_to_csv(grid); });

  m.def(
      "resilience_profile",
      [](const Graph& g, const std::vector<int>& k_values,
         const std::vector<std::int64_t>& b_values, const std::string& algorithm,
         std::uint64_t seed, double epsilon, int ell, std::int64_t samples, bool prune,
         int threads) {
        ProfileParams params;
        params.seed = seed;
        params.epsilon = epsilon;
        params.ell = ell;
        params.samples = samples;
        params.prune = prune;
        params.threads = threads;
        return resilience_profile(g, k_values, b_values, parse_profile_algorithm(algorithm),
                                  params);
      },
      py::arg("graph"), py::arg("k_values"), py::arg("b_values"), py::arg("algorithm") = "sv",
      py::arg("seed") = 42, py::arg("epsilon") = 0.05, py::arg("ell") = 1, py::arg("samples") = 0,
      py::arg("prune") = true, py::arg("threads") = 1);

  py::class_<GadgetGraph>(m, "GadgetGraph")
      .def_readonly("graph", &GadgetGraph::graph)
      .def_property_readonly("gamma",
                             [](const GadgetGraph& gadget) {
                               std::vector<OriginalEdge> out;
                               for (EdgeId e : gadget.candidate_edges) {
                                 out.push_back(gadget.graph.original_pair(e));
                               }
                               return out;
                             })
      .def("label", &GadgetGraph::label, py::arg("node"))
      .def("node", &GadgetGraph::node, py::arg("role"), py::arg("group"), py::arg("pos"));

  m.def(
      "build_sk_gadget",
      [](std::int32_t n_items, const std::vector<std::vector<std::int32_t>>& subsets,
         std::int32_t x_block_size) {
        return build_sk_gadget(SkInstance{n_items, subsets}, x_block_size);
      },
      py::arg("n_items"), py::arg("subsets"), py::arg("x_block_size") = 4,
      "Subsets hold 0-based item indices.");

  m.def(
      "build_setcover_gadget",
      [](std::int32_t n_items, const std::vector<std::vector<std::int32_t>>& subsets) {
        return build_setcover_gadget(ScInstance{n_items, subsets});
      },
      py::arg("n_items"), py::arg("subsets"), "Subsets hold 0-based item indices.");

  m.def(
      "solution_to_json",
      [](const Solution& s, const Graph& g) { return solution_to_json(s, g).dump(2); },
      py::arg("solution"), py::arg("graph"));
}
