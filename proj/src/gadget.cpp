#include "corecut/gadget.hpp"

#include <algorithm>
#include <stdexcept>

namespace corecut {

NodeId GadgetGraph::node(char role, std::int32_t group, std::int32_t pos) const {
  for (NodeId v = 0; v < static_cast<NodeId>(roles.size()); ++v) {
    const NodeRole& r = roles[v];
    if (r.role == role && r.group == group && r.pos == pos) return v;
  }
  throw std::invalid_argument(std::string("gadget has no node ") + role + "[" +
                              std::to_string(group) + "," + std::to_string(pos) + "]");
}

std::string GadgetGraph::label(NodeId v) const {
  const NodeRole& r = roles[v];
  return std::string(1, r.role) + "[" + std::to_string(r.group) + "," + std::to_string(r.pos) + "]";
}

namespace {

struct Builder {
  std::vector<Edge> edges;
  std::vector<NodeRole> roles;

  NodeId add_node(char role, std::int32_t group, std::int32_t pos) {
    roles.push_back({role, group, pos});
    return static_cast<NodeId>(roles.size() - 1);
  }

  void add_edge(NodeId a, NodeId b) { edges.push_back(make_edge(a, b)); }

  void add_cycle(const std::vector<NodeId>& nodes) {
    for (std::size_t t = 0; t < nodes.size(); ++t) add_edge(nodes[t], nodes[(t + 1) % nodes.size()]);
  }

  // 5-node anchor widget: a K4 on positions 2..5 plus Z1 attached to Z2, Z5.
  NodeId add_anchor(std::int32_t item) {
    NodeId z[6];
    for (std::int32_t p = 1; p <= 5; ++p) z[p] = add_node('Z', item, p);
    for (std::int32_t a = 2; a <= 5; ++a) {
      for (std::int32_t b = a + 1; b <= 5; ++b) add_edge(z[a], z[b]);
    }
    add_edge(z[1], z[2]);
    add_edge(z[1], z[5]);
    return z[1];
  }
};

void validate_items(std::int32_t n_items, const std::vector<std::vector<std::int32_t>>& subsets,
                    const char* what) {
  if (n_items < 1) throw std::invalid_argument(std::string(what) + ": needs at least one item");
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::int32_t u : subsets[i]) {
      if (u < 0 || u >= n_items) {
        throw std::invalid_argument(std::string(what) + ": subset " + std::to_string(i + 1) +
                                    " references item " + std::to_string(u + 1) + " outside 1.." +
                                    std::to_string(n_items));
      }
    }
  }
}

GadgetGraph finish(Builder&& b, std::vector<std::pair<NodeId, NodeId>> gamma_pairs) {
  GadgetGraph out;
  out.roles = std::move(b.roles);
  out.graph = Graph::from_edges(static_cast<NodeId>(out.roles.size()), std::move(b.edges));

  for (NodeId v = 0; v < out.graph.node_count(); ++v) {
    if (out.graph.degree(v) < 3) {
      throw std::invalid_argument("gadget construction leaves node " + out.label(v) +
                                  " with degree " + std::to_string(out.graph.degree(v)) +
                                  " < 3; the instance admits no valid reduction graph");
    }
  }
  for (const auto& [a, c] : gamma_pairs) {
    out.candidate_edges.push_back(*out.graph.find_edge(a, c));
  }
  std::sort(out.candidate_edges.begin(), out.candidate_edges.end());
  return out;
}

}  // namespace

GadgetGraph build_sk_gadget(const SkInstance& instance, std::int32_t x_block_size) {
  const auto m = static_cast<std::int32_t>(instance.subsets.size());
  if (m < 3) throw std::invalid_argument("sk gadget: needs at least 3 subsets (cycle length)");
  validate_items(instance.n_items, instance.subsets, "sk gadget");
  for (std::size_t i = 0; i < instance.subsets.size(); ++i) {
    if (instance.subsets[i].empty()) {
      throw std::invalid_argument("sk gadget: subset " + std::to_string(i + 1) + " is empty");
    }
  }
  if (x_block_size < 4 || x_block_size % 2 != 0) {
    throw std::invalid_argument("sk gadget: x_block_size must be even and >= 4");
  }

  Builder b;
  std::vector<std::vector<NodeId>> item_cycle(static_cast<std::size_t>(instance.n_items));
  std::vector<NodeId> anchor(static_cast<std::size_t>(instance.n_items));
  std::vector<std::pair<NodeId, NodeId>> gamma;

  for (std::int32_t j = 0; j < instance.n_items; ++j) {
    auto& cyc = item_cycle[j];
    for (std::int32_t t = 1; t <= m; ++t) cyc.push_back(b.add_node('Y', j + 1, t));
    b.add_cycle(cyc);
    gamma.emplace_back(cyc[0], cyc[1]);
    anchor[j] = b.add_anchor(j + 1);
  }

  for (std::int32_t i = 0; i < m; ++i) {
    const NodeId apex = b.add_node('X', i + 1, 1);
    // Block: an even cycle plus antipodal chords everywhere except one pair;
    // the two chordless nodes are the stubs the apex attaches to.
    std::vector<NodeId> block;
    for (std::int32_t t = 0; t < x_block_size; ++t) block.push_back(b.add_node('X', i + 1, t + 2));
    b.add_cycle(block);
    const std::int32_t half = x_block_size / 2;
    for (std::int32_t t = 1; t < half; ++t) b.add_edge(block[t], block[t + half]);
    b.add_edge(apex, block[0]);
    b.add_edge(apex, block[half]);

    std::vector<char> member(static_cast<std::size_t>(instance.n_items), 0);
    for (std::int32_t u : instance.subsets[i]) member[u] = 1;
    for (std::int32_t j = 0; j < instance.n_items; ++j) {
      if (member[j]) {
        b.add_edge(apex, item_cycle[j][i]);
      } else {
        b.add_edge(item_cycle[j][i], anchor[j]);
      }
    }
  }

  return finish(std::move(b), std::move(gamma));
}

GadgetGraph build_setcover_gadget(const ScInstance& instance) {
  const auto m = static_cast<std::int32_t>(instance.subsets.size());
  const std::int32_t n = instance.n_items;
  if (n < 3 || m < 3) {
    throw std::invalid_argument("set cover gadget: needs n >= 3 items and m >= 3 subsets");
  }
  validate_items(n, instance.subsets, "set cover gadget");

  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < instance.subsets.size(); ++i) {
    if (static_cast<std::int32_t>(instance.subsets[i].size()) >= n) {
      throw std::invalid_argument("set cover gadget: subset " + std::to_string(i + 1) +
                                  " contains every item (trivial cover)");
    }
    for (std::int32_t u : instance.subsets[i]) covered[u] = 1;
  }
  for (std::int32_t j = 0; j < n; ++j) {
    if (!covered[j]) {
      throw std::invalid_argument("set cover gadget: item " + std::to_string(j + 1) +
                                  " appears in no subset");
    }
  }

  Builder b;
  std::vector<std::vector<NodeId>> item_cycle(static_cast<std::size_t>(n));
  std::vector<NodeId> anchor(static_cast<std::size_t>(n));
  std::vector<std::vector<NodeId>> subset_cycle(static_cast<std::size_t>(m));
  std::vector<std::pair<NodeId, NodeId>> gamma;

  for (std::int32_t j = 0; j < n; ++j) {
    auto& cyc = item_cycle[j];
    for (std::int32_t t = 1; t <= m; ++t) cyc.push_back(b.add_node('Y', j + 1, t));
    b.add_cycle(cyc);
    anchor[j] = b.add_anchor(j + 1);
  }

  for (std::int32_t i = 0; i < m; ++i) {
    auto& xcyc = subset_cycle[i];
    for (std::int32_t t = 1; t <= n; ++t) xcyc.push_back(b.add_node('X', i + 1, t));
    b.add_cycle(xcyc);
    std::vector<NodeId> wcyc;
    for (std::int32_t t = 1; t <= n; ++t) wcyc.push_back(b.add_node('W', i + 1, t));
    b.add_cycle(wcyc);
    for (std::int32_t t = 0; t < n; ++t) b.add_edge(wcyc[t], xcyc[t]);
    gamma.emplace_back(wcyc[0], wcyc[1]);

    std::vector<char> member(static_cast<std::size_t>(n), 0);
    for (std::int32_t u : instance.subsets[i]) member[u] = 1;
    for (std::int32_t j = 0; j < n; ++j) {
      if (member[j]) {
        b.add_edge(xcyc[j], item_cycle[j][i]);
      } else {
        b.add_edge(item_cycle[j][i], anchor[j]);
      }
    }
  }

  return finish(std::move(b), std::move(gamma));
}

}  // namespace corecut
