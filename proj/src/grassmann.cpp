#include "vdg/grassmann.hpp"

#include <algorithm>
#include <map>

namespace vdg {

namespace {

std::shared_ptr<const Field> make_field(long q) {
  return std::make_shared<Field>(FieldSpec::from_order(q));
}

std::vector<std::string> subspace_labels(const std::vector<SubspaceRep>& list) {
  std::vector<std::string> out;
  out.reserve(list.size());
  for (const auto& s : list) out.push_back(s.label());
  return out;
}

}  // namespace

Graph grassmann_graph(long q, int n, int k) {
  if (k <= 1 || 2 * k > n) throw InvariantError("grassmann_graph requires 1 < k <= n/2");
  auto field = make_field(q);
  auto verts = enumerate_subspaces(field, n, k);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (intersect_dim(verts[i], verts[j]) == k - 1)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::from_edges(static_cast<int>(verts.size()), edges, subspace_labels(verts));
}

Graph doubled_grassmann(long q, int n, int k) {
  if (n < 3 || k < 1 || 2 * k > n) throw InvariantError("doubled_grassmann requires n >= 3 and 1 <= k <= n/2");
  auto field = make_field(q);
  auto side_k = enumerate_subspaces(field, n, k);
  auto side_k1 = enumerate_subspaces(field, n, k + 1);
  const int offset = static_cast<int>(side_k.size());
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < side_k.size(); ++i)
    for (std::size_t j = 0; j < side_k1.size(); ++j)
      if (intersect_dim(side_k[i], side_k1[j]) == k)  // v subset of w
        edges.emplace_back(static_cast<int>(i), offset + static_cast<int>(j));
  std::sort(edges.begin(), edges.end());
  auto labels = subspace_labels(side_k);
  auto more = subspace_labels(side_k1);
  labels.insert(labels.end(), more.begin(), more.end());
  return Graph::from_edges(offset + static_cast<int>(side_k1.size()), edges, std::move(labels));
}

int subspace_vertex_index(const std::vector<SubspaceRep>& side_k,
                          const std::vector<SubspaceRep>& side_k1,
                          const SubspaceRep& s) {
  if (s.k == (side_k.empty() ? -1 : side_k.front().k)) {
    auto it = std::find(side_k.begin(), side_k.end(), s);
    if (it != side_k.end()) return static_cast<int>(it - side_k.begin());
  }
  auto it = std::find(side_k1.begin(), side_k1.end(), s);
  if (it != side_k1.end()) return static_cast<int>(side_k.size()) + static_cast<int>(it - side_k1.begin());
  throw InvariantError("subspace not found in vertex list");
}

Perm perp_automorphism(long q, int n, int k) {
  auto field = make_field(q);
  if (n == 2 * k) {
    if (k <= 1) throw InvariantError("perp_automorphism on a Grassmann graph requires k > 1");
    auto verts = enumerate_subspaces(field, n, k);
    std::map<FqMatrix, int> where;
    for (std::size_t i = 0; i < verts.size(); ++i) where[verts[i].rows] = static_cast<int>(i);
    std::vector<int> images(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) images[i] = where.at(perp(verts[i]).rows);
    return Perm(std::move(images));
  }
  if (n == 2 * k + 1) {
    auto side_k = enumerate_subspaces(field, n, k);
    auto side_k1 = enumerate_subspaces(field, n, k + 1);
    const int offset = static_cast<int>(side_k.size());
    std::map<FqMatrix, int> where_k, where_k1;
    for (std::size_t i = 0; i < side_k.size(); ++i) where_k[side_k[i].rows] = static_cast<int>(i);
    for (std::size_t i = 0; i < side_k1.size(); ++i) where_k1[side_k1[i].rows] = static_cast<int>(i);
    std::vector<int> images(side_k.size() + side_k1.size());
    for (std::size_t i = 0; i < side_k.size(); ++i)
      images[i] = offset + where_k1.at(perp(side_k[i]).rows);
    for (std::size_t i = 0; i < side_k1.size(); ++i)
      images[side_k.size() + i] = where_k.at(perp(side_k1[i]).rows);
    return Perm(std::move(images));
  }
  throw InvariantError("perp_automorphism requires n = 2k or n = 2k+1");
}

namespace {

// Rows of `space` that extend `base` to a basis of `space`, chosen greedily in
// RREF row order so the construction is deterministic.
std::vector<std::vector<int>> extend_basis(const Field& f, const SubspaceRep& base, const SubspaceRep& space) {
  const int n = space.n;
  std::vector<std::vector<int>> extension;
  FqMatrix probe(base.k + space.k, n);
  std::copy(base.rows.data.begin(), base.rows.data.end(), probe.data.begin());
  int used = base.k;
  int current_rank = base.k;
  for (int r = 0; r < space.k; ++r) {
    for (int c = 0; c < n; ++c) probe.at(used, c) = space.rows.at(r, c);
    FqMatrix copy = probe;
    copy.rows = used + 1;
    copy.data.resize(static_cast<std::size_t>(used + 1) * static_cast<std::size_t>(n));
    int rank = rref(f, copy);
    if (rank > current_rank) {
      std::vector<int> row(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = space.rows.at(r, c);
      extension.push_back(std::move(row));
      current_rank = rank;
      ++used;
    }
  }
  return extension;
}

SubspaceRep span_of(const std::shared_ptr<const Field>& field, int n,
                    const std::vector<std::vector<int>>& vectors) {
  FqMatrix mat(static_cast<int>(vectors.size()), n);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (int c = 0; c < n; ++c) mat.at(static_cast<int>(r), c) = vectors[r][static_cast<std::size_t>(c)];
  return SubspaceRep::from_rows(field, n, std::move(mat));
}

void connect_rec(long q, int n, int k, const SubspaceRep& v1, const SubspaceRep& v2,
                 std::vector<SubspaceRep>& path) {
  // Invariant: `path` ends with v1; this appends the rest of a v1..v2 walk.
  const int j = k - intersect_dim(v1, v2);
  if (j == 0) return;
  if (j == 1) {
    path.push_back(sum_space(v1, v2));
    path.push_back(v2);
    return;
  }
  const Field& f = *v1.field;
  SubspaceRep w = intersect_space(v1, v2);
  auto c_vecs = extend_basis(f, w, v1);
  auto d_vecs = extend_basis(f, w, v2);
  // s = <basis of w, c_1, d_2, ..., d_j>: meets v2 in dimension k-1 and v1 in
  // dimension k-j+1, so one recursive step plus a two-edge hop finishes.
  std::vector<std::vector<int>> s_vectors;
  for (int r = 0; r < w.k; ++r) {
    std::vector<int> row(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = w.rows.at(r, c);
    s_vectors.push_back(std::move(row));
  }
  s_vectors.push_back(c_vecs.front());
  for (std::size_t i = 1; i < d_vecs.size(); ++i) s_vectors.push_back(d_vecs[i]);
  SubspaceRep s = span_of(v1.field, n, s_vectors);
  if (s.k != k) throw InvariantError("path construction produced a degenerate pivot subspace");
  connect_rec(q, n, k, v1, s, path);
  connect_rec(q, n, k, s, v2, path);
}

}  // namespace

std::vector<SubspaceRep> connect_path(long q, int n, int k, const SubspaceRep& v1, const SubspaceRep& v2) {
  if (v1.k != k || v2.k != k) throw InvariantError("connect_path endpoints must have dimension k");
  if (v1.n != n || v2.n != n) throw InvariantError("connect_path ambient dimension mismatch");
  std::vector<SubspaceRep> path{v1};
  connect_rec(q, n, k, v1, v2, path);
  return path;
}

}  // namespace vdg
