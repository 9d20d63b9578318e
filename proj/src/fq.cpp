#include "vdg/fq.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace vdg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomial coefficient vectors over F_p, little-endian.
using Poly = std::vector<int>;

Poly poly_of(long value, int p) {
  Poly c;
  while (value > 0) {
    c.push_back(static_cast<int>(value % p));
    value /= p;
  }
  return c;
}

long value_of(const Poly& c, int p) {
  long v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

int deg(const Poly& c) {
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

Poly poly_mod(Poly a, const Poly& modulus, int p) {
  const int dm = deg(modulus);
  int da = deg(a);
  while (da >= dm) {
    // modulus is monic, so the leading coefficient divides out directly
    int factor = a[static_cast<std::size_t>(da)];
    for (int i = 0; i <= dm; ++i) {
      int pos = da - dm + i;
      a[static_cast<std::size_t>(pos)] =
          ((a[static_cast<std::size_t>(pos)] - factor * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
    }
    da = deg(a);
  }
  a.resize(static_cast<std::size_t>(dm > 0 ? dm : 1), 0);
  return a;
}

bool is_irreducible(const Poly& modulus, int p) {
  const int dm = deg(modulus);
  if (dm < 1) return false;
  // Trial division by every monic polynomial of degree 1..dm/2.
  for (int d = 1; 2 * d <= dm; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long low = 0; low < count; ++low) {
      Poly divisor = poly_of(low, p);
      divisor.resize(static_cast<std::size_t>(d) + 1, 0);
      divisor[static_cast<std::size_t>(d)] = 1;
      if (deg(poly_mod(modulus, divisor, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::from_order(long q) {
  if (q < 2) throw InvariantError("field order must be at least 2");
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (static_cast<long>(p) * p > q) {
      p = static_cast<int>(q);
      break;
    }
  }
  int m = 0;
  long rest = q;
  while (rest > 1) {
    if (rest % p != 0) throw InvariantError("field order must be a prime power");
    rest /= p;
    ++m;
  }
  if (m == 1) {
    FieldSpec spec;
    spec.p = p;
    spec.m = 1;
    spec.q = q;
    spec.modulus = {0, 1};
    return spec;
  }
  if (q == 4) return from_modulus(2, {1, 1, 1});      // x^2 + x + 1
  if (q == 8) return from_modulus(2, {1, 1, 0, 1});   // x^3 + x + 1
  if (q == 9) return from_modulus(3, {1, 0, 1});      // x^2 + 1
  throw InvariantError("no shipped modulus for q = " + std::to_string(q) + "; supply one explicitly");
}

FieldSpec FieldSpec::from_modulus(int p, std::vector<int> modulus) {
  if (!is_prime(p)) throw InvariantError("field characteristic must be prime");
  int d = deg(modulus);
  if (d < 1 || modulus[static_cast<std::size_t>(d)] != 1)
    throw InvariantError("modulus must be monic of degree >= 1");
  for (int c : modulus)
    if (c < 0 || c >= p) throw InvariantError("modulus coefficients must lie in 0..p-1");
  if (d > 1 && !is_irreducible(modulus, p))
    throw InvariantError("modulus is reducible over F_p");
  FieldSpec spec;
  spec.p = p;
  spec.m = d;
  spec.q = 1;
  for (int i = 0; i < d; ++i) spec.q *= p;
  spec.modulus = std::move(modulus);
  return spec;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const long q = spec_.q;
  if (q > 1024) throw InvariantError("field tables limited to q <= 1024");
  const int p = spec_.p;
  add_.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  mul_.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  neg_.resize(static_cast<std::size_t>(q));
  inv_.assign(static_cast<std::size_t>(q), -1);
  frob_.resize(static_cast<std::size_t>(q));
  for (long a = 0; a < q; ++a) {
    Poly pa = poly_of(a, p);
    for (long b = 0; b < q; ++b) {
      Poly pb = poly_of(b, p);
      Poly sum(std::max(pa.size(), pb.size()), 0);
      for (std::size_t i = 0; i < sum.size(); ++i) {
        int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
        sum[i] = x % p;
      }
      add_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) + static_cast<std::size_t>(b)] =
          static_cast<int>(value_of(sum, p));
      Poly prod = poly_mod(poly_mul(pa, pb, p), spec_.modulus, p);
      mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) + static_cast<std::size_t>(b)] =
          static_cast<int>(value_of(prod, p));
    }
  }
  for (long a = 0; a < q; ++a) {
    Poly pa = poly_of(a, p);
    for (auto& c : pa) c = (p - c) % p;
    neg_[static_cast<std::size_t>(a)] = static_cast<int>(value_of(pa, p));
  }
  for (long a = 1; a < q; ++a)
    for (long b = 1; b < q; ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) == 1) {
        inv_[static_cast<std::size_t>(a)] = static_cast<int>(b);
        break;
      }
  for (long a = 0; a < q; ++a) {
    int r = static_cast<int>(a);
    int out = r;
    for (int e = 1; e < p; ++e) out = mul(out, r);
    frob_[static_cast<std::size_t>(a)] = out;
  }
}

int Field::inv(int a) const {
  if (a == 0) throw PreconditionError("zero has no multiplicative inverse");
  return inv_[check(a)];
}

int Field::frobenius_power(int a, int s) const {
  int out = a;
  s = ((s % spec_.m) + spec_.m) % spec_.m;
  for (int i = 0; i < s; ++i) out = frobenius(out);
  return out;
}

int rref(const Field& f, FqMatrix& mat) {
  int pivot_row = 0;
  for (int col = 0; col < mat.cols && pivot_row < mat.rows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < mat.rows; ++r)
      if (mat.at(r, col) != 0) {
        found = r;
        break;
      }
    if (found < 0) continue;
    for (int c = 0; c < mat.cols; ++c) std::swap(mat.at(pivot_row, c), mat.at(found, c));
    int scale = f.inv(mat.at(pivot_row, col));
    for (int c = 0; c < mat.cols; ++c) mat.at(pivot_row, c) = f.mul(mat.at(pivot_row, c), scale);
    for (int r = 0; r < mat.rows; ++r) {
      if (r == pivot_row || mat.at(r, col) == 0) continue;
      int factor = mat.at(r, col);
      for (int c = 0; c < mat.cols; ++c)
        mat.at(r, c) = f.sub(mat.at(r, c), f.mul(factor, mat.at(pivot_row, c)));
    }
    ++pivot_row;
  }
  return pivot_row;
}

SubspaceRep SubspaceRep::from_rows(std::shared_ptr<const Field> field, int n, FqMatrix raw) {
  if (raw.cols != n) throw InvariantError("subspace row length must equal the ambient dimension");
  int rank = rref(*field, raw);
  FqMatrix rows(rank, n);
  std::copy(raw.data.begin(), raw.data.begin() + static_cast<std::ptrdiff_t>(rank) * n, rows.data.begin());
  SubspaceRep s;
  s.field = std::move(field);
  s.n = n;
  s.k = rank;
  s.rows = std::move(rows);
  return s;
}

std::string SubspaceRep::label() const {
  std::string out = "[";
  for (int r = 0; r < k; ++r) {
    if (r) out += ";";
    for (int c = 0; c < n; ++c) {
      if (c) out += ",";
      out += std::to_string(rows.at(r, c));
    }
  }
  return out + "]";
}

std::string SubspaceRep::to_json() const {
  nlohmann::json j;
  j["field"] = {{"p", field->p()}, {"m", field->m()}, {"modulus", field->spec().modulus}};
  j["n"] = n;
  j["k"] = k;
  j["rows"] = rows.data;
  return j.dump();
}

std::vector<SubspaceRep> enumerate_subspaces(const std::shared_ptr<const Field>& field, int n, int k) {
  if (k < 0 || k > n) throw InvariantError("subspace dimension out of range");
  std::vector<SubspaceRep> out;
  if (k == 0) {
    SubspaceRep zero;
    zero.field = field;
    zero.n = n;
    zero.k = 0;
    zero.rows = FqMatrix(0, n);
    out.push_back(std::move(zero));
    return out;
  }
  const long q = field->q();
  // Pivot-column k-subsets of {0..n-1} in lexicographic order.
  std::vector<int> pivots(static_cast<std::size_t>(k));
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::vector<std::pair<int, int>> free_cells;  // (row, col), row-major
    for (int r = 0; r < k; ++r)
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cells.emplace_back(r, c);
    std::vector<int> values(free_cells.size(), 0);
    while (true) {
      FqMatrix mat(k, n);
      for (int r = 0; r < k; ++r) mat.at(r, pivots[static_cast<std::size_t>(r)]) = 1;
      for (std::size_t i = 0; i < free_cells.size(); ++i)
        mat.at(free_cells[i].first, free_cells[i].second) = values[i];
      SubspaceRep s;
      s.field = field;
      s.n = n;
      s.k = k;
      s.rows = std::move(mat);
      out.push_back(std::move(s));
      // Counter over the free entries, last cell least significant.
      bool overflow = true;
      for (std::size_t pos = free_cells.size(); pos-- > 0;) {
        if (++values[pos] < q) {
          overflow = false;
          break;
        }
        values[pos] = 0;
      }
      if (overflow) break;
    }
    int i = k - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - (k - i)) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Bigint gaussian_binomial(int n, int k, long q) {
  if (q < 2) throw InvariantError("gaussian binomial requires q >= 2");
  if (k < 0 || k > n) throw InvariantError("gaussian binomial requires 0 <= k <= n");
  Bigint numerator = 1, denominator = 1;
  Bigint qn = 1, qk = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  for (int i = 0; i < k; ++i) qk *= q;
  Bigint qpow = 1;
  for (int i = 0; i < k; ++i) {
    numerator *= qn - qpow;
    denominator *= qk - qpow;
    qpow *= q;
  }
  Bigint result = numerator / denominator;
  if (result * denominator != numerator) throw InvariantError("gaussian binomial division was not exact");
  return result;
}

namespace {

FqMatrix stack(const SubspaceRep& a, const SubspaceRep& b) {
  FqMatrix mat(a.k + b.k, a.n);
  std::copy(a.rows.data.begin(), a.rows.data.end(), mat.data.begin());
  std::copy(b.rows.data.begin(), b.rows.data.end(), mat.data.begin() + static_cast<std::ptrdiff_t>(a.k) * a.n);
  return mat;
}

void check_compatible(const SubspaceRep& a, const SubspaceRep& b) {
  if (a.n != b.n || !(a.field->spec() == b.field->spec()))
    throw InvariantError("subspaces live in different ambient spaces");
}

}  // namespace

int intersect_dim(const SubspaceRep& a, const SubspaceRep& b) {
  check_compatible(a, b);
  FqMatrix mat = stack(a, b);
  int rank = rref(*a.field, mat);
  return a.k + b.k - rank;
}

SubspaceRep sum_space(const SubspaceRep& a, const SubspaceRep& b) {
  check_compatible(a, b);
  return SubspaceRep::from_rows(a.field, a.n, stack(a, b));
}

SubspaceRep intersect_space(const SubspaceRep& a, const SubspaceRep& b) {
  check_compatible(a, b);
  // Zassenhaus: row-reduce [A|A; B|0]; rows with zero left half carry an
  // intersection basis in their right half.
  const Field& f = *a.field;
  const int n = a.n;
  FqMatrix big(a.k + b.k, 2 * n);
  for (int r = 0; r < a.k; ++r)
    for (int c = 0; c < n; ++c) {
      big.at(r, c) = a.rows.at(r, c);
      big.at(r, n + c) = a.rows.at(r, c);
    }
  for (int r = 0; r < b.k; ++r)
    for (int c = 0; c < n; ++c) big.at(a.k + r, c) = b.rows.at(r, c);
  rref(f, big);
  FqMatrix inter(a.k + b.k, n);
  int count = 0;
  for (int r = 0; r < big.rows; ++r) {
    bool left_zero = true;
    for (int c = 0; c < n && left_zero; ++c) left_zero = big.at(r, c) == 0;
    bool right_zero = true;
    for (int c = 0; c < n && right_zero; ++c) right_zero = big.at(r, n + c) == 0;
    if (left_zero && !right_zero) {
      for (int c = 0; c < n; ++c) inter.at(count, c) = big.at(r, n + c);
      ++count;
    }
  }
  inter.rows = count;
  inter.data.resize(static_cast<std::size_t>(count) * static_cast<std::size_t>(n));
  return SubspaceRep::from_rows(a.field, n, std::move(inter));
}

SubspaceRep perp(const SubspaceRep& a) {
  const Field& f = *a.field;
  const int n = a.n, k = a.k;
  // Pivot columns of the RREF rows.
  std::vector<int> pivots;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c)
      if (a.rows.at(r, c) != 0) {
        pivots.push_back(c);
        break;
      }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  FqMatrix basis(n - k, n);
  int row = 0;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    basis.at(row, free_col) = 1;
    for (int r = 0; r < k; ++r)
      basis.at(row, pivots[static_cast<std::size_t>(r)]) = f.neg(a.rows.at(r, free_col));
    ++row;
  }
  return SubspaceRep::from_rows(a.field, n, std::move(basis));
}

SubspaceRep apply_semilinear(const FqMatrix& M, int s, const SubspaceRep& a) {
  const Field& f = *a.field;
  const int n = a.n;
  if (M.rows != n || M.cols != n) throw InvariantError("semilinear matrix must be n x n");
  FqMatrix probe = M;
  if (rref(f, probe) != n) throw PreconditionError("semilinear matrix is singular");
  FqMatrix image(a.k, n);
  for (int r = 0; r < a.k; ++r)
    for (int c = 0; c < n; ++c) {
      int acc = 0;
      for (int t = 0; t < n; ++t)
        acc = f.add(acc, f.mul(f.frobenius_power(a.rows.at(r, t), s), M.at(t, c)));
      image.at(r, c) = acc;
    }
  return SubspaceRep::from_rows(a.field, n, std::move(image));
}

Bigint pgammal_order(int n, const FieldSpec& f) {
  if (n < 2) throw InvariantError("pgammal_order requires n >= 2");
  Bigint qn = 1;
  for (int i = 0; i < n; ++i) qn *= f.q;
  Bigint out = 1;
  Bigint qpow = 1;
  for (int i = 0; i < n; ++i) {
    out *= qn - qpow;
    qpow *= f.q;
  }
  out /= f.q - 1;
  out *= f.m;
  return out;
}

}  // namespace vdg
