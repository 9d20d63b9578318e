#include "vdg/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace vdg {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
  if (n < 0) throw InvariantError("negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InvariantError("label count must match vertex count");
  Graph g;
  g.n_ = n;
  g.words_ = static_cast<std::size_t>((n + 63) / 64);
  g.adj_.assign(static_cast<std::size_t>(n), {});
  g.bits_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(g.words_, 0));
  g.labels_ = std::move(labels);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw InvariantError("edge endpoint out of range");
    if (u == v) throw InvariantError("loops are not allowed");
    if (g.adjacent(u, v)) throw InvariantError("duplicate edge");
    g.bits_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    g.bits_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.edge_count_ = edges.size();
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VdResult is_vd(const Graph& g) {
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g.neighbor_bits(x) == g.neighbor_bits(y)) return {false, {x, y}};
  return {};
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? parts.u : parts.w).push_back(v);
  return parts;
}

std::optional<int> distance(const Graph& g, int v, int w) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n || w < 0 || w >= n) throw InvariantError("vertex out of range");
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist[static_cast<std::size_t>(v)] = 0;
  std::deque<int> queue{v};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == w) return dist[static_cast<std::size_t>(x)];
    for (int y : g.neighbors(x))
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
  }
  return std::nullopt;
}

int common_neighbor_count(const Graph& g, int v, int w) {
  if (v == w) throw PreconditionError("common_neighbor_count requires distinct vertices");
  const auto& a = g.neighbor_bits(v);
  const auto& b = g.neighbor_bits(w);
  int count = 0;
  for (std::size_t i = 0; i < g.words(); ++i) count += std::popcount(a[i] & b[i]);
  return count;
}

bool has_odd_cycle(const Graph& g) { return !bipartition(g).has_value(); }

int component_count(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    ++components;
    std::deque<int> queue{root};
    seen[static_cast<std::size_t>(root)] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return g.vertex_count() <= 1 || component_count(g) == 1; }

namespace {

std::string vertex_name(const Graph& g, int v) {
  return g.has_labels() ? g.label(v) : std::to_string(v);
}

}  // namespace

Graph tensor_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g1.edges())
    for (auto [c, d] : g2.edges()) {
      edges.emplace_back(a * n2 + c, b * n2 + d);
      edges.emplace_back(a * n2 + d, b * n2 + c);
    }
  std::sort(edges.begin(), edges.end());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
  for (int a = 0; a < n1; ++a)
    for (int c = 0; c < n2; ++c)
      labels.push_back("(" + vertex_name(g1, a) + "," + vertex_name(g2, c) + ")");
  return Graph::from_edges(n1 * n2, edges, std::move(labels));
}

Graph bipartite_double(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, n + v);
    edges.emplace_back(v, n + u);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::string> labels;
  labels.reserve(2 * static_cast<std::size_t>(n));
  for (int layer = 0; layer <= 1; ++layer)
    for (int v = 0; v < n; ++v)
      labels.push_back("(" + vertex_name(g, v) + "," + std::to_string(layer) + ")");
  return Graph::from_edges(2 * n, edges, std::move(labels));
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted) {
    if (v < 0 || v >= g.vertex_count()) throw InvariantError("induced subgraph vertex out of range");
    out.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : sorted)
    for (int w : g.neighbors(v))
      if (v < w && out.old_to_new[static_cast<std::size_t>(w)] >= 0)
        edges.emplace_back(out.old_to_new[static_cast<std::size_t>(v)], out.old_to_new[static_cast<std::size_t>(w)]);
  std::sort(edges.begin(), edges.end());
  std::vector<std::string> labels;
  if (g.has_labels())
    for (int v : out.new_to_old) labels.push_back(g.label(v));
  out.graph = Graph::from_edges(static_cast<int>(sorted.size()), edges, std::move(labels));
  return out;
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("graph text: missing \"n m\" header");
  if (n < 0 || m < 0) throw ParseError("graph text: negative counts");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("graph text: truncated edge list");
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump();
}

Graph from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) throw ParseError("graph json: need \"n\" and \"edges\"");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return Graph::from_edges(j["n"].get<int>(), edges, std::move(labels));
}

std::string digest(const Graph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  for (auto [u, v] : g.edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  std::ostringstream out;
  out << "g" << g.vertex_count() << "-" << std::hex << h;
  return out.str();
}

}  // namespace vdg
