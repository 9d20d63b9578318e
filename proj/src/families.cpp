#include "vdg/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "vdg/grassmann.hpp"

namespace vdg {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

void check_subset(const KSubset& s, int n) {
  int prev = 0;
  for (int e : s.elements) {
    if (e <= prev || e > n) throw InvariantError("subset must be strictly ascending within 1..n");
    prev = e;
  }
}

std::vector<std::uint64_t> subset_masks(int n, int k) {
  // All k-subsets of [n] as bit masks (bit i-1 = element i), lexicographic by
  // ascending element list.
  std::vector<std::uint64_t> masks;
  masks.reserve(binomial(n, k));
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  if (k == 0) return {std::uint64_t{0}};
  while (true) {
    std::uint64_t m = 0;
    for (int e : pick) m |= std::uint64_t{1} << (e - 1);
    masks.push_back(m);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return masks;
}

std::string mask_label(std::uint64_t m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if ((m >> i) & 1) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

Graph subset_graph(int n, int k, const auto& adjacent_rule) {
  auto masks = subset_masks(n, k);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  labels.reserve(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    labels.push_back(mask_label(masks[i]));
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (adjacent_rule(masks[i], masks[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return Graph::from_edges(static_cast<int>(masks.size()), edges, std::move(labels));
}

}  // namespace

std::uint64_t rank_subset(const KSubset& s, int n) {
  check_subset(s, n);
  const int k = static_cast<int>(s.elements.size());
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int c = prev + 1; c < s.elements[static_cast<std::size_t>(i)]; ++c)
      rank += binomial(n - c, k - 1 - i);
    prev = s.elements[static_cast<std::size_t>(i)];
  }
  return rank;
}

KSubset unrank_subset(std::uint64_t index, int n, int k) {
  if (k < 0 || k > n || index >= binomial(n, k)) throw InvariantError("subset rank out of range");
  KSubset s;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int c = prev + 1;; ++c) {
      std::uint64_t block = binomial(n - c, k - 1 - i);
      if (index < block) {
        s.elements.push_back(c);
        prev = c;
        break;
      }
      index -= block;
    }
  }
  return s;
}

std::string subset_label(const KSubset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.elements[i]);
  }
  return out + "}";
}

Graph johnson(int n, int k) {
  if (n > 63 || k < 1 || k >= n) throw InvariantError("johnson requires 1 <= k < n <= 63");
  return subset_graph(n, k, [k](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a & b) == k - 1;
  });
}

Graph kneser(int n, int k) {
  if (n > 63 || k < 1 || 2 * k >= n) throw InvariantError("kneser requires 1 <= k < n/2, n <= 63");
  return subset_graph(n, k, [](std::uint64_t a, std::uint64_t b) { return (a & b) == 0; });
}

Graph set_inclusion(int n, int k, int l) {
  if (n > 63 || k <= 0 || k >= l || l >= n || k + l > n)
    throw InvariantError("set_inclusion requires 0 < k < l < n and k + l <= n");
  auto small = subset_masks(n, k);
  auto large = subset_masks(n, l);
  const int offset = static_cast<int>(small.size());
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (std::uint64_t m : small) labels.push_back(mask_label(m));
  for (std::uint64_t m : large) labels.push_back(mask_label(m));
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j < large.size(); ++j)
      if ((small[i] & large[j]) == small[i])
        edges.emplace_back(static_cast<int>(i), offset + static_cast<int>(j));
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(offset + static_cast<int>(large.size()), edges, std::move(labels));
}

Graph bipartite_kneser(int n, int k) {
  if (k < 1 || 2 * k >= n) throw InvariantError("bipartite_kneser requires n > 2k >= 2");
  return set_inclusion(n, k, n - k);
}

Graph bnk(int n, int k) {
  if (k < 1 || 2 * k >= n) throw InvariantError("bnk requires 1 <= k < n/2");
  return set_inclusion(n, k, k + 1);
}

Graph complete(int n) {
  if (n < 1) throw InvariantError("complete requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("{" + std::to_string(i) + "}");
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph cycle(int n) {
  if (n < 3) throw InvariantError("cycle requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

Perm complement_map(int n, int k) {
  if (k < 1 || 2 * k >= n || n > 63) throw InvariantError("complement_map requires n > 2k >= 2");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  auto complement_rank = [&](std::uint64_t m) {
    KSubset s;
    std::uint64_t c = full & ~m;
    for (int i = 0; i < n; ++i)
      if ((c >> i) & 1) s.elements.push_back(i + 1);
    return rank_subset(s, n);
  };
  auto small = subset_masks(n, k);
  auto large = subset_masks(n, n - k);
  const int count = static_cast<int>(small.size());
  std::vector<int> images(small.size() + large.size());
  for (int i = 0; i < count; ++i)
    images[static_cast<std::size_t>(i)] = count + static_cast<int>(complement_rank(small[static_cast<std::size_t>(i)]));
  for (std::size_t j = 0; j < large.size(); ++j)
    images[small.size() + j] = static_cast<int>(complement_rank(large[j]));
  return Perm(std::move(images));
}

FamilySpec FamilySpec::parse(const std::string& text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto colon = lower.find(':');
  std::string name = colon == std::string::npos ? lower : lower.substr(0, colon);
  FamilySpec spec;
  std::size_t expected = 0;
  if (name == "johnson") { spec.kind = FamilyKind::johnson; expected = 2; }
  else if (name == "kneser") { spec.kind = FamilyKind::kneser; expected = 2; }
  else if (name == "bipartite-kneser") { spec.kind = FamilyKind::bipartite_kneser; expected = 2; }
  else if (name == "bnk") { spec.kind = FamilyKind::bnk; expected = 2; }
  else if (name == "set-inclusion") { spec.kind = FamilyKind::set_inclusion; expected = 3; }
  else if (name == "complete") { spec.kind = FamilyKind::complete; expected = 1; }
  else if (name == "cycle") { spec.kind = FamilyKind::cycle; expected = 1; }
  else if (name == "grassmann") { spec.kind = FamilyKind::grassmann; expected = 3; }
  else if (name == "doubled-grassmann") { spec.kind = FamilyKind::doubled_grassmann; expected = 3; }
  else throw ParseError("unknown family kind: \"" + name + "\"");

  if (colon != std::string::npos) {
    std::istringstream in(lower.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t pos = 0;
      long value = 0;
      try {
        value = std::stol(item, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad family parameter: \"" + item + "\"");
      }
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw ParseError("bad family parameter: \"" + item + "\"");
      spec.params.push_back(value);
    }
  }
  if (spec.params.size() != expected)
    throw ParseError("family \"" + name + "\" takes " + std::to_string(expected) + " parameter(s)");
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string name;
  switch (kind) {
    case FamilyKind::johnson: name = "johnson"; break;
    case FamilyKind::kneser: name = "kneser"; break;
    case FamilyKind::bipartite_kneser: name = "bipartite-kneser"; break;
    case FamilyKind::bnk: name = "bnk"; break;
    case FamilyKind::set_inclusion: name = "set-inclusion"; break;
    case FamilyKind::complete: name = "complete"; break;
    case FamilyKind::cycle: name = "cycle"; break;
    case FamilyKind::grassmann: name = "grassmann"; break;
    case FamilyKind::doubled_grassmann: name = "doubled-grassmann"; break;
  }
  std::string out = name + ":";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out;
}

Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto as_int = [](long v) {
    if (v < 0 || v > 1'000'000) throw InvariantError("family parameter out of range");
    return static_cast<int>(v);
  };
  switch (spec.kind) {
    case FamilyKind::johnson: return johnson(as_int(p[0]), as_int(p[1]));
    case FamilyKind::kneser: return kneser(as_int(p[0]), as_int(p[1]));
    case FamilyKind::bipartite_kneser: return bipartite_kneser(as_int(p[0]), as_int(p[1]));
    case FamilyKind::bnk: return bnk(as_int(p[0]), as_int(p[1]));
    case FamilyKind::set_inclusion: return set_inclusion(as_int(p[0]), as_int(p[1]), as_int(p[2]));
    case FamilyKind::complete: return complete(as_int(p[0]));
    case FamilyKind::cycle: return cycle(as_int(p[0]));
    case FamilyKind::grassmann: return grassmann_graph(as_int(p[0]), as_int(p[1]), as_int(p[2]));
    case FamilyKind::doubled_grassmann: return doubled_grassmann(as_int(p[0]), as_int(p[1]), as_int(p[2]));
  }
  throw InvariantError("unreachable family kind");
}

}  // namespace vdg
