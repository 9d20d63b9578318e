#ifndef VDG_FAMILIES_HPP
#define VDG_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vdg/graph.hpp"
#include "vdg/perm.hpp"

namespace vdg {

/// A k-subset of [n] = {1..n}, strictly ascending 1-based elements.
struct KSubset {
  std::vector<int> elements;
};

std::uint64_t binomial(int n, int k);

/// Lexicographic rank of a k-subset among all k-subsets of [n].
std::uint64_t rank_subset(const KSubset& s, int n);
KSubset unrank_subset(std::uint64_t index, int n, int k);

/// Label like "{1,3,4}".
std::string subset_label(const KSubset& s);

/// k-subsets of [n], adjacent iff |v ∩ w| = k-1. Requires 1 <= k < n.
Graph johnson(int n, int k);

/// k-subsets of [n], adjacent iff disjoint. Requires 2k < n.
Graph kneser(int n, int k);

/// k-subsets then (n-k)-subsets of [n], adjacency = strict containment.
/// Requires n > 2k >= 2.
Graph bipartite_kneser(int n, int k);

/// k-subsets then (k+1)-subsets of [n], adjacency = containment.
/// Requires 1 <= k < n/2.
Graph bnk(int n, int k);

/// k-subsets then l-subsets of [n], adjacency = containment.
/// Requires 0 < k < l < n and k + l <= n.
Graph set_inclusion(int n, int k, int l);

Graph complete(int n);
Graph cycle(int n);

/// The complementation involution v -> [n] \ v on the vertex set of
/// set_inclusion(n, k, n-k); an automorphism swapping the two sides.
Perm complement_map(int n, int k);

enum class FamilyKind {
  johnson,
  kneser,
  bipartite_kneser,
  bnk,
  set_inclusion,
  complete,
  cycle,
  grassmann,
  doubled_grassmann,
};

/// Tagged description of a graph family instance, parsed from strings like
/// "johnson:5,2", "grassmann:2,4,2" or "doubled-grassmann:2,3,1"
/// (case-insensitive). Parameter ranges are validated when the graph is
/// built.
struct FamilySpec {
  FamilyKind kind;
  std::vector<long> params;  // (n,k), (n,k,l) or (q,n,k)

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

Graph build_family(const FamilySpec& spec);

}  // namespace vdg

#endif  // VDG_FAMILIES_HPP
