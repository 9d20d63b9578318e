#ifndef VDG_GRAPH_HPP
#define VDG_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vdg/common.hpp"

namespace vdg {

/// Immutable undirected simple graph. Vertices are dense 0-based indices;
/// adjacency is kept both as sorted neighbor lists and as bitset rows (the
/// bitsets drive common-neighbor counting and partition refinement). Optional
/// per-vertex labels carry the combinatorial object a vertex stands for.
class Graph {
 public:
  /// Builds from an edge list; rejects loops, out-of-range endpoints and
  /// duplicate edges. n = 0 is allowed.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  const std::vector<std::uint64_t>& neighbor_bits(int v) const { return bits_[static_cast<std::size_t>(v)]; }
  std::size_t words() const { return words_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Canonical edge list, ascending lexicographic with u < v.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<std::string> labels_;
};

/// Result of the vertex-determining test: ok, or a witness pair with equal
/// neighborhoods.
struct VdResult {
  bool vd = true;
  std::pair<int, int> witness{-1, -1};
};

/// true iff all distinct vertices have distinct neighbor sets.
VdResult is_vd(const Graph& g);

struct Bipartition {
  std::vector<int> u, w;  // sorted vertex lists
};

/// A 2-coloring when one exists (component roots go to the U side), otherwise
/// nullopt. For connected graphs the coloring is the unique one.
std::optional<Bipartition> bipartition(const Graph& g);

/// BFS distance; nullopt across components.
std::optional<int> distance(const Graph& g, int v, int w);

/// |N(v) ∩ N(w)|; rejects v == w.
int common_neighbor_count(const Graph& g, int v, int w);

bool has_odd_cycle(const Graph& g);

int component_count(const Graph& g);

bool is_connected(const Graph& g);

/// Tensor (direct) product; vertex (v1,v2) gets index v1*|V(g2)| + v2, and
/// (v1,v2) ~ (w1,w2) iff v1~w1 and v2~w2.
Graph tensor_product(const Graph& g1, const Graph& g2);

/// Bipartite double cover: layer 0 carries (v,0) at index v, layer 1 carries
/// (v,1) at index n+v; (v,0) ~ (w,1) iff v ~ w. Equal to tensor_product(g, K2)
/// up to the fixed index order.
Graph bipartite_double(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices outside s
  std::vector<int> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// Text format: first line "n m", then m lines "u v", ascending lexicographic.
std::string to_text(const Graph& g);
Graph from_text(const std::string& text);

/// JSON format carrying labels; round-trips bit-exactly.
std::string to_json(const Graph& g);
Graph from_json(const std::string& text);

/// FNV-1a digest of the canonical form, for report identification.
std::string digest(const Graph& g);

}  // namespace vdg

#endif  // VDG_GRAPH_HPP
