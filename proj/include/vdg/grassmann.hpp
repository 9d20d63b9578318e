#ifndef VDG_GRASSMANN_HPP
#define VDG_GRASSMANN_HPP

#include <vector>

#include "vdg/fq.hpp"
#include "vdg/graph.hpp"
#include "vdg/perm.hpp"

namespace vdg {

/// k-subspaces of F_q^n, adjacent iff their intersection has dimension k-1.
/// Requires 1 < k <= n/2 (k = 1 would be a complete graph). Vertex order and
/// labels follow enumerate_subspaces.
Graph grassmann_graph(long q, int n, int k);

/// k- and (k+1)-subspaces of F_q^n, adjacency = containment; k-side first.
/// Requires n >= 3 and 1 <= k <= n/2. Connected bipartite.
Graph doubled_grassmann(long q, int n, int k);

/// The orthogonal-complement involution as a vertex permutation: on
/// grassmann_graph(q, 2k, k) when n = 2k, or on doubled_grassmann(q, 2k+1, k)
/// when n = 2k+1 (where it swaps the two sides).
Perm perp_automorphism(long q, int n, int k);

/// A path between two k-subspaces inside doubled_grassmann(q, n, k), built by
/// basis-extension recursion: with j = k - dim(v1 ∩ v2) the result alternates
/// k- and (k+1)-subspaces along containment edges and has at most 2j edges.
/// Returned as subspaces; the first entry is v1, the last v2.
std::vector<SubspaceRep> connect_path(long q, int n, int k, const SubspaceRep& v1, const SubspaceRep& v2);

/// Vertex index of a subspace in the doubled_grassmann(q, n, k) order, or the
/// grassmann_graph order when only the k-side list is passed.
int subspace_vertex_index(const std::vector<SubspaceRep>& side_k,
                          const std::vector<SubspaceRep>& side_k1,
                          const SubspaceRep& s);

}  // namespace vdg

#endif  // VDG_GRASSMANN_HPP
