#include "corecut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace corecut {

namespace {

void sort_and_dedup(std::vector<Edge>& edges, ParseReport* report) {
  std::size_t loops = 0;
  std::erase_if(edges, [&](const Edge& e) {
    if (e.u == e.v) {
      ++loops;
      return true;
    }
    return false;
  });
  std::sort(edges.begin(), edges.end());
  const auto dup_begin = std::unique(edges.begin(), edges.end());
  if (report != nullptr) {
    report->self_loops = loops;
    report->duplicate_edges = static_cast<std::size_t>(edges.end() - dup_begin);
  }
  edges.erase(dup_begin, edges.end());
}

}  // namespace

Graph Graph::from_edges(NodeId n, std::vector<Edge> edges) {
  Graph g;
  g.labels_.resize(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) g.labels_[v] = v;
  for (auto& e : edges) e = make_edge(e.u, e.v);
  sort_and_dedup(edges, nullptr);
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  const auto n = static_cast<std::size_t>(labels_.size());
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 1; v <= n; ++v) offsets_[v] += offsets_[v - 1];
  adjacency_.resize(static_cast<std::size_t>(offsets_[n]));
  std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    adjacency_[cursor[e.u]++] = {e.v, id};
    adjacency_[cursor[e.v]++] = {e.u, id};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

std::optional<NodeId> Graph::find_node(OriginalId original) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), original);
  if (it != labels_.end() && *it == original) {
    return static_cast<NodeId>(it - labels_.begin());
  }
  return std::nullopt;
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
  if (a == b) return std::nullopt;
  const auto span = neighbors(a);
  const auto it = std::lower_bound(span.begin(), span.end(), b,
                                   [](const Neighbor& nb, NodeId x) { return nb.node < x; });
  if (it != span.end() && it->node == b) return it->edge;
  return std::nullopt;
}

Graph Graph::without_edges(std::span<const EdgeId> remove) const {
  std::vector<char> drop(edges_.size(), 0);
  for (EdgeId id : remove) drop[static_cast<std::size_t>(id)] = 1;
  Graph g;
  g.labels_ = labels_;
  g.edges_.reserve(edges_.size() - remove.size());
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
    if (!drop[static_cast<std::size_t>(id)]) g.edges_.push_back(edges_[id]);
  }
  g.build_adjacency();
  return g;
}

std::string Graph::to_edge_list() const {
  std::string out;
  for (const Edge& e : edges_) {
    out += std::to_string(labels_[e.u]);
    out += ' ';
    out += std::to_string(labels_[e.v]);
    out += '\n';
  }
  return out;
}

std::pair<Graph, ParseReport> parse_edge_list(std::string_view text) {
  // UTF-8 BOM.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<std::pair<OriginalId, OriginalId>> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t i = 0;
    const auto skip_ws = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == line.size() || line[i] == '#' || line[i] == '%') continue;

    OriginalId ids[2];
    for (int t = 0; t < 2; ++t) {
      skip_ws();
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (start == i) {
        throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                 ": expected two node ids");
      }
      const char* first = line.data() + start;
      const char* last = line.data() + i;
      auto [p, ec] = std::from_chars(first, last, ids[t]);
      if (ec != std::errc{} || p != last || ids[t] < 0) {
        throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                 ": invalid node id '" + std::string(first, last) + "'");
      }
    }
    skip_ws();
    if (i != line.size()) {
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": trailing tokens after the two node ids");
    }
    raw.emplace_back(ids[0], ids[1]);
  }

  // Dense ids by ascending original id, so internal order mirrors original order.
  std::vector<OriginalId> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [a, b] : raw) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const auto to_internal = [&](OriginalId id) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), id) - labels.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) edges.push_back(make_edge(to_internal(a), to_internal(b)));

  Graph g;
  ParseReport report;
  sort_and_dedup(edges, &report);
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return {std::move(g), report};
}

Graph delete_edges(const Graph& g, std::span<const Edge> remove) {
  std::vector<EdgeId> ids;
  ids.reserve(remove.size());
  for (const Edge& e : remove) {
    const auto id = g.find_edge(e.u, e.v);
    if (!id) {
      throw std::runtime_error("delete_edges: edge (" + std::to_string(g.original_id(e.u)) + ", " +
                               std::to_string(g.original_id(e.v)) + ") is not in the graph");
    }
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return g.without_edges(ids);
}

}  // namespace corecut
