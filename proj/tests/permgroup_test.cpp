#include <gtest/gtest.h>

#include <random>

#include "psu4/permgroup.hpp"

namespace psu4 {
namespace {

Permutation cycle(std::size_t n, std::vector<std::size_t> points) {
  Permutation p = identity_permutation(n);
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  return p;
}

// Brute-force closure, for small groups only.
std::size_t closure_size(const PermutationAction& a) {
  std::set<Permutation> seen{identity_permutation(a.degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : a.generators()) {
      auto h = compose(queue[i], g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return seen.size();
}

TEST(Permgroup, Basics) {
  const auto c = cycle(5, {0, 1, 2});
  EXPECT_EQ(compose(c, inverse(c)), identity_permutation(5));
  EXPECT_TRUE(is_identity(identity_permutation(3)));
  EXPECT_THROW(PermutationAction(3, {Permutation{0, 0, 1}}), GroupError);
}

TEST(Permgroup, Orbits) {
  const PermutationAction none(4);
  EXPECT_EQ(orbit(none, 2), std::vector<std::size_t>{2});
  const PermutationAction three(5, {cycle(5, {0, 1, 2})});
  EXPECT_EQ(orbit(three, 1), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(orbits(three).size(), 3u);
  EXPECT_FALSE(is_transitive(three));
}

TEST(Permgroup, OrdersOfKnownGroups) {
  EXPECT_EQ(group_order(PermutationAction(5)), 1);
  const PermutationAction s5(5, {cycle(5, {0, 1}), cycle(5, {0, 1, 2, 3, 4})});
  EXPECT_EQ(group_order(s5), 120);
  const PermutationAction a5(5, {cycle(5, {0, 1, 2}), cycle(5, {0, 1, 2, 3, 4})});
  EXPECT_EQ(group_order(a5), 60);
  const PermutationAction s8(8, {cycle(8, {0, 1}), cycle(8, {0, 1, 2, 3, 4, 5, 6, 7})});
  EXPECT_EQ(group_order(s8), 40320);
  // Direct product of two disjoint 3-cycles and a transposition.
  const PermutationAction prod(8, {cycle(8, {0, 1, 2}), cycle(8, {3, 4, 5}), cycle(8, {6, 7})});
  EXPECT_EQ(group_order(prod), 18);
}

TEST(Permgroup, OrderMatchesClosureOnRandomGroups) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6;
    std::vector<Permutation> gens;
    for (int g = 0; g < 2; ++g) {
      Permutation p = identity_permutation(n);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    const PermutationAction a(n, gens);
    EXPECT_EQ(group_order(a), closure_size(a));
    const StabilizerChain chain(a);
    for (const auto& g : gens) EXPECT_TRUE(chain.contains(g));
  }
}

TEST(Permgroup, OrderInvariantUnderAugmentation) {
  const auto g = build_geometric(DesignKind::Minus45);
  const auto a = design_action(g);
  auto gens = a.generators();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5; ++i)
    gens.push_back(compose(gens[rng() % gens.size()], gens[rng() % gens.size()]));
  std::shuffle(gens.begin(), gens.end(), rng);
  EXPECT_EQ(group_order(PermutationAction(a.degree(), gens)), group_order(a));
}

TEST(Permgroup, Primitivity) {
  const PermutationAction c4(4, {cycle(4, {0, 1, 2, 3})});
  const auto r = primitivity(c4);
  EXPECT_EQ(r.status, Primitivity::Imprimitive);
  EXPECT_EQ(r.block, (std::vector<std::size_t>{0, 2}));
  EXPECT_FALSE(is_primitive(c4));
  const PermutationAction c7(7, {cycle(7, {0, 1, 2, 3, 4, 5, 6})});
  EXPECT_TRUE(is_primitive(c7));
  const PermutationAction split(4, {cycle(4, {0, 1})});
  EXPECT_EQ(primitivity(split).status, Primitivity::NotTransitive);
  EXPECT_THROW(is_primitive(split), GroupError);
}

TEST(Permgroup, RegularActionSubdegrees) {
  const PermutationAction c5(5, {cycle(5, {0, 1, 2, 3, 4})});
  EXPECT_EQ(stabilizer_orbit_sizes(c5, 0), std::vector<std::size_t>(5, 1));
}

TEST(Permgroup, InduceProjective) {
  const auto g = build_geometric(DesignKind::Menon36);
  const PointIndex index(g.points);
  EXPECT_TRUE(is_identity(induce(g.field, Matrix::Identity(5, 5), g.points, index)));
  EXPECT_TRUE(is_identity(induce(g.field, Matrix(2 * Matrix::Identity(5, 5)), g.points, index)));
  Matrix swap = Matrix::Zero(5, 5);
  swap(0, 4) = swap(4, 0) = swap(1, 1) = swap(2, 2) = swap(3, 3) = 1;
  EXPECT_THROW(induce(g.field, swap, g.points, index), GroupError);
}

TEST(Permgroup, ReflectionFixedPoints) {
  const auto g = build_geometric(DesignKind::Menon36);
  const auto space = QuadraticSpace::design_space();
  const PointIndex index(g.points);
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const auto p = induce(g.field, reflection(space, g.points[i].coords), g.points, index);
    EXPECT_TRUE(is_identity(compose(p, p)));
    std::size_t fixed = 0;
    for (std::size_t x = 0; x < p.size(); ++x) fixed += p[x] == x;
    EXPECT_EQ(fixed, g.structure.block(i).size() + 1);
  }
}

struct Expected {
  DesignKind kind;
  bool complement;
  std::vector<std::size_t> subdegrees;
};

TEST(Permgroup, DesignActions) {
  const std::vector<Expected> cases{
      {DesignKind::Menon36, false, {1, 15, 20}},
      {DesignKind::Minus45, false, {1, 12, 32}},
      {DesignKind::Higman40, true, {1, 12, 27}},
  };
  for (const auto& e : cases) {
    const auto g = build_geometric(e.kind);
    const auto a = design_action(g);
    const auto d = e.complement ? complement(g.structure) : g.structure;
    EXPECT_TRUE(is_transitive(a));
    EXPECT_TRUE(is_primitive(a));
    EXPECT_EQ(stabilizer_orbit_sizes(a, 0), e.subdegrees);
    EXPECT_EQ(stabilizer_orbit_sizes(a, 7), e.subdegrees);
    const Integer order = group_order(a);
    EXPECT_TRUE(order == 25920 || order == 51840) << order;
    EXPECT_TRUE(is_flag_transitive(a, d));
    EXPECT_EQ(order % flags(d).size(), 0);
  }
}

TEST(Permgroup, FortyPointBaseDesignsAreNotFlagTransitive) {
  for (auto kind : {DesignKind::Higman40, DesignKind::Pg33}) {
    const auto g = build_geometric(kind);
    EXPECT_FALSE(is_flag_transitive(design_action(g), g.structure));
    EXPECT_TRUE(is_flag_transitive(design_action(g), complement(g.structure)));
  }
  EXPECT_EQ(group_order(design_action(build_geometric(DesignKind::Pg33))), 25920);
}

TEST(Permgroup, IdentityIsNotFlagTransitive) {
  const auto d = build(DesignKind::Menon36);
  const PermutationAction id(36, {identity_permutation(36)});
  EXPECT_FALSE(is_flag_transitive(id, d));
}

TEST(Permgroup, IncompatibleBlockAction) {
  const auto d = build(DesignKind::Menon36);
  const PermutationAction swap(36, {cycle(36, {0, 1})});
  EXPECT_THROW(block_action(swap, d), GroupError);
}

}  // namespace
}  // namespace psu4
