#ifndef VDG_AUTENG_HPP
#define VDG_AUTENG_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "vdg/graph.hpp"
#include "vdg/perm.hpp"

namespace vdg {

/// An ordered vertex partition. color[v] is the index of the cell holding v;
/// cells are listed in order with their members ascending.
struct Coloring {
  std::vector<int> color;
  std::vector<std::vector<int>> cells;

  static Coloring unit(int n);
  bool discrete() const;
  /// Index of the first smallest non-singleton cell, or -1 when discrete.
  int target_cell() const;
};

/// Coarsest equitable refinement of c (1-dimensional Weisfeiler-Leman).
/// Deterministic: split cells replace their parent in order of ascending
/// neighbor count toward the splitter.
Coloring refine(const Graph& g, const Coloring& c);

bool is_equitable(const Graph& g, const Coloring& c);

/// Checks {p(u),p(v)} is an edge exactly when {u,v} is.
bool is_automorphism(const Graph& g, const Perm& p);

struct AutOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Full automorphism group via individualization-refinement backtracking.
/// The generator set is deterministic for a fixed graph: the target cell is
/// the first smallest non-singleton cell, branch vertices are taken
/// ascending, and every emitted generator is verified edge-preserving.
PermGroup automorphism_group(const Graph& g, const AutOptions& options = {});

/// Exhaustive oracle: all adjacency-preserving permutations, by full n!
/// enumeration for n <= 8 and by image-assignment backtracking above that.
/// Throws when the vertex count exceeds the cap.
std::vector<Perm> automorphism_group_brute(const Graph& g, int cap = 10);

/// Restriction of p to a part it stabilizes setwise, re-indexed by position
/// in the sorted part. Throws PreconditionError when p moves the part.
Perm restrict_perm(const Perm& p, const std::vector<int>& part);

}  // namespace vdg

#endif  // VDG_AUTENG_HPP
