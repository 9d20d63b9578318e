#ifndef VDG_FQ_HPP
#define VDG_FQ_HPP

#include <memory>
#include <string>
#include <vector>

#include "vdg/common.hpp"

namespace vdg {

/// Description of F_q with q = p^m, elements encoded as integers 0..q-1 in
/// the polynomial basis (value = sum of c_i * p^i for the coefficient vector
/// c of the residue polynomial). The modulus is a monic irreducible of degree
/// m over F_p; it is irrelevant for m = 1.
struct FieldSpec {
  int p = 2;
  int m = 1;
  long q = 2;
  std::vector<int> modulus;  // length m+1, monic

  /// Builds from q, using the shipped moduli for q in {4, 8, 9}; prime q
  /// needs no modulus. Other prime powers need an explicit modulus.
  static FieldSpec from_order(long q);
  static FieldSpec from_modulus(int p, std::vector<int> modulus);

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p == b.p && a.m == b.m && a.modulus == b.modulus;
  }
};

/// Arithmetic tables for a FieldSpec.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  long q() const { return spec_.q; }
  int p() const { return spec_.p; }
  int m() const { return spec_.m; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[check(a)]; }
  int inv(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// a -> a^p, the generating field automorphism; fixes F_p pointwise.
  int frobenius(int a) const { return frob_[check(a)]; }
  int frobenius_power(int a, int s) const;

 private:
  std::size_t idx(int a, int b) const { return check(a) * static_cast<std::size_t>(spec_.q) + check(b); }
  std::size_t check(int a) const {
    if (a < 0 || a >= spec_.q) throw InvariantError("field element out of range");
    return static_cast<std::size_t>(a);
  }

  FieldSpec spec_;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
};

/// Dense matrix over F_q, row-major.
struct FqMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> data;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
  int& at(int r, int c) { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  int at(int r, int c) const { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
  friend bool operator<(const FqMatrix& a, const FqMatrix& b) { return a.data < b.data; }
};

/// In-place reduced row echelon form; returns the rank. Row space is
/// preserved; RREF is the canonical representative of the row space.
int rref(const Field& f, FqMatrix& mat);

/// A k-dimensional subspace of F_q^n, stored as the k x n RREF matrix of a
/// basis. Two values are equal iff they are the same subspace.
struct SubspaceRep {
  std::shared_ptr<const Field> field;
  int n = 0;
  int k = 0;
  FqMatrix rows;  // k x n, RREF, rank k

  static SubspaceRep from_rows(std::shared_ptr<const Field> field, int n, FqMatrix raw);
  std::string label() const;
  /// {"field": {p, m, modulus}, "n", "k", "rows"} with rows row-major.
  std::string to_json() const;

  friend bool operator==(const SubspaceRep& a, const SubspaceRep& b) {
    return a.n == b.n && a.k == b.k && a.rows == b.rows;
  }
  friend bool operator<(const SubspaceRep& a, const SubspaceRep& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.rows < b.rows;
  }
};

/// All k-subspaces of F_q^n in a deterministic order: lexicographic over
/// pivot-column sets, then over the free entries read row-major.
std::vector<SubspaceRep> enumerate_subspaces(const std::shared_ptr<const Field>& field, int n, int k);

/// Number of k-subspaces of an n-space over F_q, exact.
Bigint gaussian_binomial(int n, int k, long q);

int intersect_dim(const SubspaceRep& a, const SubspaceRep& b);
SubspaceRep sum_space(const SubspaceRep& a, const SubspaceRep& b);
/// Basis of the intersection as a subspace (Zassenhaus-style computation).
SubspaceRep intersect_space(const SubspaceRep& a, const SubspaceRep& b);

/// Orthogonal complement under the standard dot product; an
/// inclusion-reversing involution with dim(perp(a)) = n - dim(a).
SubspaceRep perp(const SubspaceRep& a);

/// Image of a under the semilinear map v -> frobenius^s(v) * M (row vectors,
/// frobenius applied entrywise). M must be invertible.
SubspaceRep apply_semilinear(const FqMatrix& M, int s, const SubspaceRep& a);

/// |PGammaL_n(F_q)| = m * prod_{i<n}(q^n - q^i) / (q - 1).
Bigint pgammal_order(int n, const FieldSpec& f);

}  // namespace vdg

#endif  // VDG_FQ_HPP
