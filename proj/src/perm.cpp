#include "vdg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vdg {

Perm::Perm(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      throw InvariantError("image table is not a bijection on {0..n-1}");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i];
      int to = c[(i + 1) % c.size()];
      if (from < 0 || from >= n) throw InvariantError("cycle point out of range");
      img[static_cast<std::size_t>(from)] = to;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Perm(std::move(inv));
}

int Perm::first_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return i;
  return -1;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw InvariantError("compose: degree mismatch");
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) img[static_cast<std::size_t>(i)] = p(q(i));
  return Perm(std::move(img));
}

PermGroup PermGroup::from_generators(int degree, const std::vector<Perm>& gens) {
  PermGroup g;
  g.build(degree, gens, {});
  return g;
}

void PermGroup::build(int degree, const std::vector<Perm>& gens, const std::vector<int>& seed_base) {
  degree_ = degree;
  for (const Perm& p : gens) {
    if (p.degree() != degree) throw InvariantError("group generators must share one degree");
    if (p.is_identity()) continue;
    if (std::find(gens_.begin(), gens_.end(), p) == gens_.end()) gens_.push_back(p);
  }
  for (int b : seed_base) {
    if (b < 0 || b >= degree) throw InvariantError("base point out of range");
    levels_.emplace_back();
    levels_.back().base_point = b;
  }
  if (levels_.empty() && !gens_.empty()) {
    levels_.emplace_back();
    levels_.back().base_point = gens_.front().first_moved_point();
  }
  if (!levels_.empty()) {
    levels_.front().gens = gens_;
    // Seeded base points start with the full generator set restricted down the
    // chain; complete_level distributes residues as it runs.
    for (std::size_t i = 1; i < levels_.size(); ++i) {
      for (const Perm& p : levels_[i - 1].gens) {
        bool fixes = true;
        for (std::size_t j = 0; j < i; ++j) fixes = fixes && p(levels_[j].base_point) == levels_[j].base_point;
        if (fixes) levels_[i].gens.push_back(p);
      }
    }
    for (std::size_t i = levels_.size(); i-- > 0;) complete_level(i);
  }
  order_ = 1;
  base_.clear();
  strong_gens_.clear();
  for (const Level& lv : levels_) {
    base_.push_back(lv.base_point);
    order_ *= static_cast<long>(lv.orbit.size());
    for (const Perm& p : lv.gens)
      if (std::find(strong_gens_.begin(), strong_gens_.end(), p) == strong_gens_.end())
        strong_gens_.push_back(p);
  }
}

void PermGroup::recompute_orbit(Level& lv) {
  lv.orbit.clear();
  lv.where.assign(static_cast<std::size_t>(degree_), -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.where[static_cast<std::size_t>(lv.base_point)] = 0;
  lv.transversal.push_back(Perm(degree_));
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    int x = lv.orbit[head];
    for (const Perm& s : lv.gens) {
      int y = s(x);
      if (lv.where[static_cast<std::size_t>(y)] < 0) {
        lv.where[static_cast<std::size_t>(y)] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(y);
        lv.transversal.push_back(compose(s, lv.transversal[head]));
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int x = p(lv.base_point);
    int idx = lv.where[static_cast<std::size_t>(x)];
    if (idx < 0) return {std::move(p), i};
    p = compose(lv.transversal[static_cast<std::size_t>(idx)].inverse(), p);
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::complete_level(std::size_t i) {
  bool dirty = true;
  while (dirty) {
    dirty = false;
    recompute_orbit(levels_[i]);
    Level& lv = levels_[i];
    for (std::size_t oi = 0; oi < lv.orbit.size() && !dirty; ++oi) {
      const Perm& u = lv.transversal[oi];
      for (const Perm& s : lv.gens) {
        int y = s(lv.orbit[oi]);
        const Perm& uy = lv.transversal[static_cast<std::size_t>(lv.where[static_cast<std::size_t>(y)])];
        Perm schreier = compose(uy.inverse(), compose(s, u));
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          levels_.emplace_back();
          levels_.back().base_point = residue.first_moved_point();
        }
        for (std::size_t l = i + 1; l <= j && l < levels_.size(); ++l)
          levels_[l].gens.push_back(residue);
        for (std::size_t l = std::min(j, levels_.size() - 1); l > i; --l) complete_level(l);
        dirty = true;
        break;
      }
    }
  }
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw InvariantError("contains: degree mismatch");
  if (p.is_identity()) return true;
  if (levels_.empty()) return false;
  auto [residue, level] = strip(p, 0);
  (void)level;
  return residue.is_identity();
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& points) const {
  std::vector<int> seed;
  for (int x : points) {
    if (x < 0 || x >= degree_) throw InvariantError("stabilizer point out of range");
    if (std::find(seed.begin(), seed.end(), x) == seed.end()) seed.push_back(x);
  }
  PermGroup chain;
  chain.build(degree_, gens_, seed);
  // Generators at level |seed| of the re-based chain fix all listed points.
  std::vector<Perm> sub;
  if (seed.size() < chain.levels_.size()) sub = chain.levels_[seed.size()].gens;
  return PermGroup::from_generators(degree_, sub);
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  if (order_ > Bigint(cap)) throw InvariantError("group too large to enumerate");
  std::vector<Perm> out{Perm(degree_)};
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[i].transversal.size());
    for (const Perm& u : levels_[i].transversal)
      for (const Perm& tail : out) next.push_back(compose(u, tail));
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<Perm>> PermGroup::level_generators() const {
  std::vector<std::vector<Perm>> out;
  out.reserve(levels_.size());
  for (const Level& lv : levels_) out.push_back(lv.gens);
  return out;
}

std::string PermGroup::to_json() const {
  nlohmann::json j;
  j["degree"] = degree_;
  j["order"] = order_.str();
  nlohmann::json gens = nlohmann::json::array();
  for (const Perm& p : gens_) gens.push_back(p.images());
  j["generators"] = gens;
  return j.dump();
}

bool commutes(const Perm& p, const PermGroup& grp) {
  for (const Perm& g : grp.generators())
    if (compose(p, g) != compose(g, p)) return false;
  return true;
}

PermGroup part_stabilizer(const PermGroup& grp, const std::vector<int>& part) {
  std::vector<bool> in_part(static_cast<std::size_t>(grp.degree()), false);
  for (int v : part) in_part[static_cast<std::size_t>(v)] = true;

  auto classify = [&](const Perm& g) {
    bool fixes = true, swaps = true;
    for (int v = 0; v < grp.degree(); ++v) {
      const bool from = in_part[static_cast<std::size_t>(v)];
      const bool to = in_part[static_cast<std::size_t>(g(v))];
      if (from != to) fixes = false;
      if (from == to) swaps = false;
    }
    if (fixes) return 0;
    if (swaps) return 1;
    throw PreconditionError("generator neither fixes nor swaps the part; input is not one side of a connected bipartite graph");
  };

  std::vector<Perm> fixing, swapping;
  for (const Perm& g : grp.generators())
    (classify(g) == 0 ? fixing : swapping).push_back(g);
  if (swapping.empty()) return PermGroup::from_generators(grp.degree(), grp.generators());

  // Schreier generators for the index-2 kernel with transversal {id, g0}.
  // The fixing generators and the g0*h products alone can generate a proper
  // subgroup when every given generator swaps, so the conjugates and the
  // h*g0^-1 products are included as well.
  const Perm& g0 = swapping.front();
  Perm g0inv = g0.inverse();
  std::vector<Perm> gens = fixing;
  for (const Perm& h : swapping) gens.push_back(compose(g0, h));
  for (const Perm& h : fixing) gens.push_back(compose(g0, compose(h, g0inv)));
  for (const Perm& h : swapping) gens.push_back(compose(h, g0inv));
  PermGroup sub = PermGroup::from_generators(grp.degree(), gens);
  if (sub.order() != grp.order() && sub.order() * 2 != grp.order())
    throw InvariantError("part stabilizer does not have index 1 or 2");
  return sub;
}

}  // namespace vdg
