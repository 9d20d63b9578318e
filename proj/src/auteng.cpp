#include "vdg/auteng.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace vdg {

Coloring Coloring::unit(int n) {
  Coloring c;
  c.color.assign(static_cast<std::size_t>(n), 0);
  if (n > 0) {
    c.cells.emplace_back(static_cast<std::size_t>(n));
    std::iota(c.cells[0].begin(), c.cells[0].end(), 0);
  }
  return c;
}

bool Coloring::discrete() const {
  for (const auto& cell : cells)
    if (cell.size() > 1) return false;
  return true;
}

int Coloring::target_cell() const {
  int best = -1;
  std::size_t best_size = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() <= 1) continue;
    if (best < 0 || cells[i].size() < best_size) {
      best = static_cast<int>(i);
      best_size = cells[i].size();
    }
  }
  return best;
}

namespace {

void renumber(Coloring& c) {
  for (std::size_t i = 0; i < c.cells.size(); ++i)
    for (int v : c.cells[i]) c.color[static_cast<std::size_t>(v)] = static_cast<int>(i);
}

int count_into(const Graph& g, int v, const std::vector<std::uint64_t>& splitter_bits) {
  const auto& nb = g.neighbor_bits(v);
  int count = 0;
  for (std::size_t i = 0; i < nb.size(); ++i) count += std::popcount(nb[i] & splitter_bits[i]);
  return count;
}

}  // namespace

Coloring refine(const Graph& g, const Coloring& start) {
  Coloring c = start;
  const std::size_t words = g.words();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < c.cells.size() && !changed; ++s) {
      std::vector<std::uint64_t> splitter_bits(words, 0);
      for (int v : c.cells[s]) splitter_bits[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
      std::vector<std::vector<int>> next;
      next.reserve(c.cells.size());
      for (const auto& cell : c.cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // Group by neighbor count into the splitter, ascending count.
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(count_into(g, v, splitter_bits), v);
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> bucket{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(bucket));
            bucket = {};
            changed = true;
          }
          bucket.push_back(keyed[i].second);
        }
        next.push_back(std::move(bucket));
      }
      if (changed) c.cells = std::move(next);
    }
  }
  renumber(c);
  return c;
}

bool is_equitable(const Graph& g, const Coloring& c) {
  for (const auto& splitter : c.cells) {
    std::vector<std::uint64_t> bits(g.words(), 0);
    for (int v : splitter) bits[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    for (const auto& cell : c.cells) {
      if (cell.size() <= 1) continue;
      int expected = count_into(g, cell[0], bits);
      for (int v : cell)
        if (count_into(g, v, bits) != expected) return false;
    }
  }
  return true;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v && !g.adjacent(p(u), p(v))) return false;
  return true;  // bijections preserving all edges preserve non-edges too
}

namespace {

std::uint64_t node_invariant(const Graph& g, const Coloring& c) {
  // Hash of the cell-size sequence and the equitable quotient matrix; both
  // are label-independent, so equivalent nodes share the invariant.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
    h ^= h >> 29;
  };
  for (const auto& cell : c.cells) mix(cell.size());
  const std::size_t words = g.words();
  for (const auto& splitter : c.cells) {
    std::vector<std::uint64_t> bits(words, 0);
    for (int v : splitter) bits[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    for (const auto& cell : c.cells)
      mix(static_cast<std::uint64_t>(count_into(g, cell[0], bits)) + 0x9e3779b97f4a7c15ull);
  }
  return h;
}

Coloring individualize(const Coloring& c, int cell_index, int v) {
  Coloring out;
  out.color = c.color;
  out.cells.reserve(c.cells.size() + 1);
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    if (static_cast<int>(i) != cell_index) {
      out.cells.push_back(c.cells[i]);
      continue;
    }
    out.cells.push_back({v});
    std::vector<int> rest;
    for (int w : c.cells[i])
      if (w != v) rest.push_back(w);
    out.cells.push_back(std::move(rest));
  }
  for (std::size_t i = 0; i < out.cells.size(); ++i)
    for (int w : out.cells[i]) out.color[static_cast<std::size_t>(w)] = static_cast<int>(i);
  return out;
}

struct SearchState {
  const Graph& g;
  std::vector<Perm> generators;
  std::vector<int> first_leaf;              // cell position -> vertex
  std::vector<std::uint64_t> path_invariant;  // per depth, from the first path
  const AutOptions& options;

  explicit SearchState(const Graph& g_, const AutOptions& opt) : g(g_), options(opt) {}

  void check_deadline() {
    if (!options.deadline) return;
    if (std::chrono::steady_clock::now() > *options.deadline)
      throw TimeoutError("automorphism search exceeded its deadline");
  }

  // Orbit partition of the vertices under the found generators that fix every
  // vertex of `prefix` pointwise.
  std::vector<int> prefix_orbits(const std::vector<int>& prefix) const {
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const Perm& p : generators) {
      bool fixes = true;
      for (int v : prefix)
        if (p(v) != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(p(v));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  void search(const Coloring& node, std::vector<int>& prefix, std::size_t depth) {
    check_deadline();
    const std::uint64_t inv = node_invariant(g, node);
    if (depth < path_invariant.size()) {
      if (inv != path_invariant[depth]) return;  // cannot lead to a leaf equivalent to the first
    } else {
      path_invariant.push_back(inv);  // still on the first path
    }
    if (node.discrete()) {
      std::vector<int> leaf(node.cells.size());
      for (std::size_t i = 0; i < node.cells.size(); ++i) leaf[i] = node.cells[i][0];
      if (first_leaf.empty()) {
        first_leaf = std::move(leaf);
        return;
      }
      std::vector<int> images(leaf.size());
      for (std::size_t i = 0; i < leaf.size(); ++i)
        images[static_cast<std::size_t>(first_leaf[i])] = leaf[i];
      Perm candidate(std::move(images));
      if (!candidate.is_identity() && is_automorphism(g, candidate)) generators.push_back(candidate);
      return;
    }
    const int cell_index = node.target_cell();
    const std::vector<int> branch = node.cells[static_cast<std::size_t>(cell_index)];
    std::vector<int> branched;
    for (int v : branch) {
      // Orbit pruning: vertices equivalent to an earlier branch under the
      // prefix-fixing subgroup found so far explore isomorphic subtrees.
      if (!branched.empty()) {
        std::vector<int> orbit = prefix_orbits(prefix);
        bool skip = false;
        for (int w : branched)
          if (orbit[static_cast<std::size_t>(w)] == orbit[static_cast<std::size_t>(v)]) {
            skip = true;
            break;
          }
        if (skip) {
          branched.push_back(v);
          continue;
        }
      }
      prefix.push_back(v);
      Coloring child = refine(g, individualize(node, cell_index, v));
      search(child, prefix, depth + 1);
      prefix.pop_back();
      branched.push_back(v);
    }
  }
};

}  // namespace

PermGroup automorphism_group(const Graph& g, const AutOptions& options) {
  const int n = g.vertex_count();
  if (n == 0) return PermGroup::from_generators(0, {});
  SearchState state(g, options);
  Coloring root = refine(g, Coloring::unit(n));
  std::vector<int> prefix;
  state.search(root, prefix, 0);
  return PermGroup::from_generators(n, state.generators);
}

namespace {

void brute_backtrack(const Graph& g, std::vector<int>& image, std::vector<bool>& used,
                     std::size_t depth, std::vector<Perm>& out) {
  const int n = g.vertex_count();
  if (depth == static_cast<std::size_t>(n)) {
    out.emplace_back(image);
    return;
  }
  const int v = static_cast<int>(depth);
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    if (g.degree(v) != g.degree(w)) continue;
    bool consistent = true;
    for (int u = 0; u < v && consistent; ++u)
      consistent = g.adjacent(u, v) == g.adjacent(image[static_cast<std::size_t>(u)], w);
    if (!consistent) continue;
    image[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = true;
    brute_backtrack(g, image, used, depth + 1, out);
    used[static_cast<std::size_t>(w)] = false;
  }
}

}  // namespace

std::vector<Perm> automorphism_group_brute(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw PreconditionError("brute-force automorphism search capped at " + std::to_string(cap) + " vertices");
  if (n == 0) return {Perm(0)};
  if (n <= 8) {
    std::vector<Perm> out;
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    do {
      Perm p(image);
      if (is_automorphism(g, p)) out.push_back(std::move(p));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
  }
  std::vector<Perm> out;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  brute_backtrack(g, image, used, 0, out);
  return out;
}

Perm restrict_perm(const Perm& p, const std::vector<int>& part) {
  std::vector<int> sorted = part;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> position(static_cast<std::size_t>(p.degree()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) position[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  std::vector<int> images(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int target = p(sorted[i]);
    if (target < 0 || target >= p.degree() || position[static_cast<std::size_t>(target)] < 0)
      throw PreconditionError("permutation does not stabilize the part setwise");
    images[i] = position[static_cast<std::size_t>(target)];
  }
  return Perm(std::move(images));
}

}  // namespace vdg
