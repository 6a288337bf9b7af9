#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corecut/core.hpp"
#include "corecut/oracle.hpp"
#include "support/gen.hpp"

using namespace corecut;
using namespace corecut_test;

TEST_CASE("K4 is a 3-core throughout") {
  const Graph g = complete(4);
  const CoreDecomposition cores = kcore_decompose(g);
  CHECK(cores.k_max == 3);
  for (int c : cores.core_number) CHECK(c == 3);
}

TEST_CASE("a star peels to core number 1 everywhere") {
  const Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const CoreDecomposition cores = kcore_decompose(g);
  CHECK(cores.k_max == 1);
  for (int c : cores.core_number) CHECK(c == 1);
  CHECK(extract_kcore(g, 2).n_k() == 0);
}

TEST_CASE("two triangles joined by a bridge are all core 2") {
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  const CoreDecomposition cores = kcore_decompose(g);
  const auto survivors = naive_kcore(g, 2);
  CHECK(survivors.size() == 6);
  for (NodeId v = 0; v < 6; ++v) CHECK(cores.core_number[v] == 2);
  CHECK(naive_kcore(g, 3).empty());
}

TEST_CASE("empty graph decomposes to k_max 0") {
  const Graph g;
  const CoreDecomposition cores = kcore_decompose(g);
  CHECK(cores.k_max == 0);
  CHECK(cores.core_number.empty());
}

TEST_CASE("extract_kcore on K4 and the star") {
  const Graph k4 = complete(4);
  const CoreSubgraph sub = extract_kcore(k4, 3);
  CHECK(sub.n_k() == 4);
  CHECK(sub.m_k() == 6);

  const Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(extract_kcore(star, 2).n_k() == 0);
}

TEST_CASE("extract_kcore rejects k < 1") {
  CHECK_THROWS_AS(extract_kcore(complete(3), 0), std::invalid_argument);
}

TEST_CASE("cores are nested and N_k is non-increasing") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = gnp(60, 0.1, seed);
    const CoreDecomposition cores = kcore_decompose(g);
    std::int64_t previous = g.node_count();
    for (int k = 1; k <= cores.k_max + 1; ++k) {
      const CoreSubgraph inner = extract_kcore(g, cores, k);
      CHECK(inner.n_k() <= previous);
      previous = inner.n_k();
      if (k > 1) {
        const CoreSubgraph outer = extract_kcore(g, cores, k - 1);
        CHECK(std::includes(outer.nodes.begin(), outer.nodes.end(), inner.nodes.begin(),
                            inner.nodes.end()));
      }
    }
  }
}

TEST_CASE("every k-core node keeps >= k neighbors inside, and the core is maximal") {
  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    const Graph g = gnp(50, 0.12, seed);
    const CoreDecomposition cores = kcore_decompose(g);
    for (int k = 1; k <= cores.k_max; ++k) {
      const CoreSubgraph sub = extract_kcore(g, cores, k);
      for (int d : sub.degree) CHECK(d >= k);
      // Any excluded node has < k neighbors inside the core.
      std::vector<char> inside(static_cast<std::size_t>(g.node_count()), 0);
      for (NodeId v : sub.nodes) inside[v] = 1;
      for (NodeId v = 0; v < g.node_count(); ++v) {
        if (inside[v]) continue;
        int into = 0;
        for (const Neighbor& nb : g.neighbors(v)) into += inside[nb.node] ? 1 : 0;
        CHECK(into < k);
      }
    }
  }
}

TEST_CASE("decomposition agrees with the naive oracle on random graphs") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const Graph g = gnp(5 + static_cast<NodeId>(seed % 120), 0.08, seed);
    const CoreDecomposition cores = kcore_decompose(g);
    for (int k = 1; k <= cores.k_max + 1; ++k) {
      const auto expected = naive_kcore(g, k);
      std::vector<NodeId> actual;
      for (NodeId v = 0; v < g.node_count(); ++v) {
        if (cores.in_core(v, k)) actual.push_back(v);
      }
      CHECK(actual == expected);
    }
  }
}
