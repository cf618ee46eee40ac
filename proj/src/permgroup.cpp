#include "psu4/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

namespace psu4 {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

bool is_identity(const Permutation& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != x) return false;
  return true;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t y : p) {
    if (y >= p.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = x;
  return out;
}

PermutationAction::PermutationAction(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != degree_) throw GroupError("generator has the wrong degree");
    if (!is_permutation(g)) throw GroupError("generator is not a permutation");
  }
}

Permutation induce(const PrimeField& f, const Matrix& m, std::span<const ProjectivePoint> points,
                   const PointIndex& index) {
  Permutation p(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vector image = f.reduce(m * points[i].coords);
    const auto normal = normalize(f, image);
    const auto j = normal ? index.find(*normal) : std::nullopt;
    if (!j) throw GroupError("matrix maps point " + std::to_string(i) + " outside the point set");
    p[i] = *j;
  }
  if (!is_permutation(p)) throw GroupError("matrix does not act bijectively on the point set");
  return p;
}

PermutationAction induce(const PrimeField& f, std::span<const Matrix> matrices,
                         std::span<const ProjectivePoint> points) {
  const PointIndex index(points);
  std::vector<Permutation> gens;
  gens.reserve(matrices.size());
  for (const auto& m : matrices) gens.push_back(induce(f, m, points, index));
  return PermutationAction(points.size(), std::move(gens));
}

std::vector<std::size_t> orbit(const PermutationAction& action, std::size_t seed) {
  if (seed >= action.degree()) throw GroupError("seed out of range");
  std::vector<bool> seen(action.degree(), false);
  std::vector<std::size_t> out{seed};
  seen[seed] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : action.generators()) {
      const std::size_t y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> orbits(const PermutationAction& action) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> done(action.degree(), false);
  for (std::size_t x = 0; x < action.degree(); ++x) {
    if (done[x]) continue;
    auto o = orbit(action, x);
    for (std::size_t y : o) done[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool is_transitive(const PermutationAction& action) {
  return action.degree() <= 1 || orbit(action, 0).size() == action.degree();
}

StabilizerChain::StabilizerChain(const PermutationAction& action,
                                 std::vector<std::size_t> base_prefix)
    : degree_(action.degree()) {
  for (const auto& g : action.generators())
    if (!is_identity(g)) top_generators_.push_back(g);
  for (std::size_t b : base_prefix) {
    if (b >= degree_) throw GroupError("base point out of range");
    if (std::find(base_.begin(), base_.end(), b) == base_.end()) add_level(b);
  }
  // Every generator must move some base point.
  for (const auto& g : top_generators_) {
    const bool moves = std::any_of(base_.begin(), base_.end(),
                                   [&](std::size_t b) { return g[b] != b; });
    if (!moves) {
      for (std::size_t x = 0; x < degree_; ++x) {
        if (g[x] != x) {
          add_level(x);
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : top_generators_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j) fixes = fixes && g[base_[j]] == base_[j];
      if (fixes) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  // Schreier generators of level i must sift through levels i+1.. .
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t level = i - 1;
    bool extended = false;
    const Level& lv = levels_[level];
    for (std::size_t beta = 0; beta < degree_ && !extended; ++beta) {
      if (lv.transversal[beta].empty()) continue;
      for (std::size_t s = 0; s < levels_[level].generators.size() && !extended; ++s) {
        const Level& cur = levels_[level];
        const Permutation& gen = cur.generators[s];
        const Permutation& u = cur.transversal[beta];
        const Permutation& w = cur.transversal[gen[beta]];
        Permutation schreier = compose(compose(u, gen), inverse(w));
        if (is_identity(schreier)) continue;
        auto [h, stop] = strip(std::move(schreier), level + 1);
        if (stop == levels_.size() && is_identity(h)) continue;
        if (stop == levels_.size()) {
          for (std::size_t x = 0; x < degree_; ++x) {
            if (h[x] != x) {
              add_level(x);
              break;
            }
          }
        }
        for (std::size_t l = level + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(h);
          rebuild_orbit(levels_[l]);
        }
        i = stop + 1;
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

void StabilizerChain::add_level(std::size_t point) {
  base_.push_back(point);
  levels_.push_back(Level{point, {}, {}});
  rebuild_orbit(levels_.back());
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.transversal.assign(degree_, Permutation{});
  level.transversal[level.point] = identity_permutation(degree_);
  std::deque<std::size_t> queue{level.point};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& g : level.generators) {
      const std::size_t y = g[x];
      if (level.transversal[y].empty()) {
        level.transversal[y] = compose(level.transversal[x], g);
        queue.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const std::size_t beta = g[levels_[l].point];
    if (levels_[l].transversal[beta].empty()) return {std::move(g), l};
    g = compose(g, inverse(levels_[l].transversal[beta]));
  }
  return {std::move(g), levels_.size()};
}

const std::vector<Permutation>& StabilizerChain::strong_generators(std::size_t level) const {
  if (level < levels_.size()) return levels_[level].generators;
  static const std::vector<Permutation> none;
  return none;
}

std::vector<std::size_t> StabilizerChain::basic_orbit(std::size_t level) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < degree_; ++y)
    if (!levels_.at(level).transversal[y].empty()) out.push_back(y);
  return out;
}

Integer StabilizerChain::order() const {
  Integer n = 1;
  for (std::size_t l = 0; l < levels_.size(); ++l) n *= basic_orbit(l).size();
  return n;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.size() != degree_ || !is_permutation(g)) return false;
  auto [h, stop] = strip(g, 0);
  return stop == levels_.size() && is_identity(h);
}

Integer group_order(const PermutationAction& action) {
  if (action.degree() > 10000) throw GroupError("degree above 10^4");
  return StabilizerChain(action).order();
}

PermutationAction set_action(const PermutationAction& action,
                             const std::vector<std::vector<std::size_t>>& sets) {
  std::map<std::vector<std::size_t>, std::size_t> lookup;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto s = sets[i];
    std::sort(s.begin(), s.end());
    lookup.emplace(std::move(s), i);
  }
  std::vector<Permutation> gens;
  for (std::size_t gi = 0; gi < action.generators().size(); ++gi) {
    const auto& g = action.generators()[gi];
    Permutation p(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::vector<std::size_t> image;
      image.reserve(sets[i].size());
      for (std::size_t x : sets[i]) image.push_back(g.at(x));
      std::sort(image.begin(), image.end());
      const auto it = lookup.find(image);
      if (it == lookup.end()) {
        throw GroupError("generator " + std::to_string(gi) + " maps set " + std::to_string(i) +
                         " outside the family");
      }
      p[i] = it->second;
    }
    gens.push_back(std::move(p));
  }
  return PermutationAction(sets.size(), std::move(gens));
}

PermutationAction block_action(const PermutationAction& action, const IncidenceStructure& d) {
  if (action.degree() != d.num_points()) throw GroupError("action degree differs from v");
  return set_action(action, d.blocks());
}

bool is_flag_transitive(const PermutationAction& action, const IncidenceStructure& d,
                        const PermutationAction& blocks) {
  if (action.degree() != d.num_points() || blocks.degree() != d.num_blocks() ||
      action.generators().size() != blocks.generators().size()) {
    throw GroupError("point and block actions do not match the design");
  }
  const auto& pg = action.generators();
  const auto& bg = blocks.generators();
  for (std::size_t i = 0; i < pg.size(); ++i) {
    for (std::size_t b = 0; b < d.num_blocks(); ++b) {
      for (std::size_t x : d.block(b)) {
        if (!d.incident(pg[i][x], bg[i][b])) {
          throw GroupError("generator " + std::to_string(i) + " does not preserve incidence");
        }
      }
    }
  }
  const auto all = flags(d);
  if (all.empty()) return false;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  std::vector<std::pair<std::size_t, std::size_t>> queue{all.front()};
  seen[all.front()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t g = 0; g < pg.size(); ++g) {
      const std::pair<std::size_t, std::size_t> image{pg[g][queue[i].first], bg[g][queue[i].second]};
      if (seen.emplace(image, true).second) queue.push_back(image);
    }
  }
  return queue.size() == all.size();
}

bool is_flag_transitive(const PermutationAction& action, const IncidenceStructure& d) {
  return is_flag_transitive(action, d, block_action(action, d));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(identity_permutation(n)) {}
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

// Finest block system in which 0 and beta share a block; returns the block of 0.
std::vector<std::size_t> minimal_block(const PermutationAction& action, std::size_t beta) {
  UnionFind uf(action.degree());
  std::deque<std::pair<std::size_t, std::size_t>> queue{{0, beta}};
  uf.parent[beta] = 0;
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& g : action.generators()) {
      const std::size_t c = uf.find(g[a]);
      const std::size_t e = uf.find(g[b]);
      if (c != e) {
        uf.parent[std::max(c, e)] = std::min(c, e);
        queue.emplace_back(c, e);
      }
    }
  }
  std::vector<std::size_t> block;
  const std::size_t root = uf.find(0);
  for (std::size_t x = 0; x < action.degree(); ++x)
    if (uf.find(x) == root) block.push_back(x);
  return block;
}

}  // namespace

PrimitivityResult primitivity(const PermutationAction& action) {
  PrimitivityResult out;
  if (!is_transitive(action)) return out;
  out.status = Primitivity::Primitive;
  for (std::size_t beta = 1; beta < action.degree(); ++beta) {
    auto block = minimal_block(action, beta);
    if (block.size() < action.degree()) {
      out.status = Primitivity::Imprimitive;
      out.block = std::move(block);
      return out;
    }
  }
  return out;
}

bool is_primitive(const PermutationAction& action) {
  const auto r = primitivity(action);
  if (r.status == Primitivity::NotTransitive) throw GroupError("NOT_TRANSITIVE");
  return r.status == Primitivity::Primitive;
}

std::vector<std::size_t> stabilizer_orbit_sizes(const PermutationAction& action, std::size_t point) {
  if (point >= action.degree()) throw GroupError("point out of range");
  const StabilizerChain chain(action, {point});
  const PermutationAction stabilizer(action.degree(), chain.strong_generators(1));
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits(stabilizer)) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::size_t rank(const PermutationAction& action) {
  if (action.degree() == 0) return 0;
  return stabilizer_orbit_sizes(action, 0).size();
}

std::vector<Matrix> design_generators(DesignKind kind) {
  std::vector<Matrix> out;
  if (kind == DesignKind::Pg33) {
    const PrimeField f(3);
    const Matrix j = symplectic_gram(4, f);
    for (const auto& u : projective_points(4, f)) out.push_back(transvection(f, j, u.coords));
    return out;
  }
  const auto space = QuadraticSpace::design_space();
  for (const auto& x : projective_points(5, space.field()))
    if (space.form(x.coords) != 0) out.push_back(reflection(space, x.coords));
  return out;
}

PermutationAction design_action(const GeometricDesign& design) {
  const auto gens = design_generators(design.kind);
  return induce(design.field, gens, design.points);
}

}  // namespace psu4
