#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corecut/core_state.hpp"
#include "support/gen.hpp"

using namespace corecut;
using namespace corecut_test;

namespace {

std::vector<NodeId> core_nodes(const Graph& g, int k) {
  const CoreDecomposition cores = kcore_decompose(g);
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (cores.in_core(v, k)) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("deleting any 4-cycle edge collapses the whole 2-core") {
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CoreState state(g, 2);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(state.compute_vs(e).size() == 4);
  }
}

TEST_CASE("K4 at k=3 collapses entirely, K5 not at all") {
  const Graph g4 = complete(4);
  CoreState k4(g4, 3);
  CHECK(k4.compute_vs(0).size() == 4);

  const Graph g5 = complete(5);
  CoreState k5(g5, 3);
  for (EdgeId e = 0; e < 10; ++e) CHECK(k5.compute_vs(e).empty());
}

TEST_CASE("compute_vs leaves the state untouched and rejects dead edges") {
  const Graph g = two_quads();
  CoreState state(g, 3);
  const auto before = snapshot(state);
  const std::vector<NodeId> vs = state.compute_vs(*g.find_edge(0, 2));
  CHECK(vs == std::vector<NodeId>{0, 1, 2, 3});
  CHECK(snapshot(state) == before);

  state.local_update(*g.find_edge(0, 2));
  CHECK_THROWS_AS(state.compute_vs(*g.find_edge(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(state.local_update(*g.find_edge(0, 2)), std::invalid_argument);
}

TEST_CASE("compute_vs equals the before/after core difference on random graphs") {
  int probes = 0;
  for (std::uint64_t seed = 0; probes < 200; ++seed) {
    const Graph g = gnp(40, 0.12, seed);
    const CoreDecomposition cores = kcore_decompose(g);
    const int k = 2 + static_cast<int>(seed % 2);
    CoreState state(g, cores, k);
    if (state.alive_edge_count() == 0) continue;
    const auto ids = sample_core_edges(g, cores, k, 3, seed);
    for (const EdgeId e : ids) {
      const auto vs = state.compute_vs(e);
      const auto before = core_nodes(g, k);
      const std::vector<EdgeId> one{e};
      const auto after = core_nodes(g.without_edges(one), k);
      std::vector<NodeId> expected;
      std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                          std::back_inserter(expected));
      CHECK(vs == expected);
      ++probes;
    }
  }
}

TEST_CASE("local_update matches compute_vs and keeps components independent") {
  const Graph g = two_disjoint_squares();
  CoreState state(g, 2);
  const EdgeId e = *g.find_edge(0, 1);
  const auto predicted = state.compute_vs(e);
  const auto removed = state.local_update(e);
  CHECK(removed == predicted);
  CHECK(removed == std::vector<NodeId>{0, 1, 2, 3});
  for (NodeId v = 4; v < 8; ++v) CHECK(state.node_alive(v));
  CHECK(state.alive_node_count() == 4);
}

TEST_CASE("rollback restores the state bit for bit") {
  const Graph g = two_quads();
  CoreState state(g, 3);
  const auto before = snapshot(state);
  const auto mark = state.checkpoint();
  state.local_update(*g.find_edge(0, 2));
  CHECK(snapshot(state) != before);
  state.rollback(mark);
  CHECK(snapshot(state) == before);

  // Nested checkpoints unwind in order.
  const auto mark1 = state.checkpoint();
  state.local_update(*g.find_edge(0, 1));
  const auto mark2 = state.checkpoint();
  const auto mid = snapshot(state);
  state.local_update(*g.find_edge(6, 7));
  state.rollback(mark2);
  CHECK(snapshot(state) == mid);
  state.rollback(mark1);
  CHECK(snapshot(state) == before);
}

TEST_CASE("a deletion sequence tracks scratch recomputation exactly") {
  for (std::uint64_t seed = 300; seed < 340; ++seed) {
    const Graph g = gnp(50, 0.12, seed);
    const CoreDecomposition cores = kcore_decompose(g);
    const int k = 2 + static_cast<int>(seed % 2);
    CoreState state(g, cores, k);
    std::vector<EdgeId> deleted;
    auto rng = seeded_engine(seed);
    for (int step = 0; step < 5; ++step) {
      const auto alive = state.alive_edges();
      if (alive.empty()) break;
      const EdgeId e = alive[bounded(rng, alive.size())];
      state.local_update(e);
      deleted.push_back(e);

      const CoreSubgraph expected = extract_kcore(g.without_edges(deleted), k);
      CHECK(state.alive_node_count() == expected.n_k());
      CHECK(state.alive_nodes() == expected.nodes);
      // Surviving edge sets coincide as well.
      std::vector<EdgeId> expected_edges;
      const Graph reduced = g.without_edges(deleted);
      for (EdgeId id : expected.edges) {
        const Edge& ed = reduced.edge(id);
        expected_edges.push_back(*g.find_edge(ed.u, ed.v));
      }
      std::sort(expected_edges.begin(), expected_edges.end());
      CHECK(state.alive_edges() == expected_edges);
    }
  }
}

TEST_CASE("edge dominance: a neighbor inside the vulnerable set implies containment") {
  int checked = 0;
  for (std::uint64_t seed = 700; checked < 50; ++seed) {
    const Graph g = gnp(45, 0.12, seed);
    const CoreDecomposition cores = kcore_decompose(g);
    const int k = 2;
    CoreState state(g, cores, k);
    if (state.alive_edge_count() < 2) continue;
    const auto ids = sample_core_edges(g, cores, k, 6, seed);
    for (const EdgeId e : ids) {
      const auto z = state.compute_vs(e);
      if (z.empty()) continue;
      std::vector<char> in_z(static_cast<std::size_t>(g.node_count()), 0);
      for (NodeId x : z) in_z[x] = 1;
      for (const EdgeId other : state.alive_edges()) {
        if (other == e) continue;
        const Edge& ed = g.edge(other);
        if (!in_z[ed.u] && !in_z[ed.v]) continue;
        const auto z_other = state.compute_vs(other);
        CHECK(std::includes(z.begin(), z.end(), z_other.begin(), z_other.end()));
        ++checked;
      }
    }
  }
}
