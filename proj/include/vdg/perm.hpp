#ifndef VDG_PERM_HPP
#define VDG_PERM_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vdg/common.hpp"

namespace vdg {

/// A permutation of {0..n-1}, stored as the image table (image of i at
/// position i).
class Perm {
 public:
  Perm() = default;
  /// Identity on n points.
  explicit Perm(int n);
  /// From an image table; throws InvariantError unless it is a bijection.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n) { return Perm(n); }
  /// From disjoint-cycle notation, e.g. {{0,1},{2,3,4}} on n points.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Smallest i with p(i) != i, or -1 for the identity.
  int first_moved_point() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

 private:
  std::vector<int> images_;
};

/// result(i) = p(q(i)); q is applied first. Throws on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

/// Permutation group given by generators, with a base and strong generating
/// set computed by a deterministic Schreier-Sims run (base points are always
/// the first moved point of the offending residue, so the chain is
/// reproducible bit-for-bit).
class PermGroup {
 public:
  /// Trivial group of degree 0; reassign via from_generators.
  PermGroup() = default;

  /// Empty generator list yields the trivial group of the given degree.
  static PermGroup from_generators(int degree, const std::vector<Perm>& gens);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<Perm>& strong_generators() const { return strong_gens_; }
  const Bigint& order() const { return order_; }

  /// Membership via sifting through the stabilizer chain.
  bool contains(const Perm& p) const;

  /// Subgroup fixing every listed point, computed by extending the base with
  /// the listed points and cutting the chain there.
  PermGroup pointwise_stabilizer(const std::vector<int>& points) const;

  /// All group elements; guarded against groups that are too large to list.
  std::vector<Perm> elements(std::size_t cap = 100000) const;

  /// Strong generators by chain level; level i generators fix base[0..i-1].
  std::vector<std::vector<Perm>> level_generators() const;

  std::string to_json() const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> gens;        // generators of the stabilizer of the previous base points
    std::vector<int> orbit;        // discovery order
    std::vector<int> where;        // point -> index into transversal, -1 if outside orbit
    std::vector<Perm> transversal; // u with u(base_point) = orbit[i]
  };

  void build(int degree, const std::vector<Perm>& gens, const std::vector<int>& seed_base);
  void recompute_orbit(Level& lv);
  // Sifts p through levels [from..); returns the residue and the level it stopped at.
  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const;
  void complete_level(std::size_t i);

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<Perm> strong_gens_;
  Bigint order_ = 1;
  std::vector<Level> levels_;
};

/// true iff p commutes with every generator of grp.
bool commutes(const Perm& p, const PermGroup& grp);

/// Setwise stabilizer of `part` in a group all of whose generators either fix
/// or swap `part` (the situation of one side of a connected bipartite graph).
/// Throws PreconditionError when some generator does neither. The resulting
/// subgroup has index 1 or 2.
PermGroup part_stabilizer(const PermGroup& grp, const std::vector<int>& part);

}  // namespace vdg

#endif  // VDG_PERM_HPP
