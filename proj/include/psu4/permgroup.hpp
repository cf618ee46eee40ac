#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psu4/designs.hpp"
#include "psu4/exactmath.hpp"
#include "psu4/geometry.hpp"

namespace psu4 {

/// p[x] is the image of x. Products apply the left factor first.
using Permutation = std::vector<std::size_t>;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Permutation identity_permutation(std::size_t n);
bool is_identity(const Permutation& p);
bool is_permutation(const Permutation& p);
/// x -> b[a[x]].
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

class PermutationAction {
 public:
  explicit PermutationAction(std::size_t degree, std::vector<Permutation> generators = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
};

/// x -> normal form of M x, looked up in `points`. Throws GroupError when a
/// point is mapped outside the list.
Permutation induce(const PrimeField& f, const Matrix& m, std::span<const ProjectivePoint> points,
                   const PointIndex& index);
PermutationAction induce(const PrimeField& f, std::span<const Matrix> matrices,
                         std::span<const ProjectivePoint> points);

/// Sorted orbit of seed.
std::vector<std::size_t> orbit(const PermutationAction& action, std::size_t seed);
/// All orbits, each sorted, ordered by smallest element.
std::vector<std::vector<std::size_t>> orbits(const PermutationAction& action);
bool is_transitive(const PermutationAction& action);

/// Deterministic Schreier-Sims. New base points are the smallest point moved
/// by the element that needs them.
class StabilizerChain {
 public:
  StabilizerChain(const PermutationAction& action, std::vector<std::size_t> base_prefix = {});

  const std::vector<std::size_t>& base() const { return base_; }
  std::size_t length() const { return levels_.size(); }
  /// Generators of the stabilizer of base[0..level-1].
  const std::vector<Permutation>& strong_generators(std::size_t level) const;
  std::vector<std::size_t> basic_orbit(std::size_t level) const;
  Integer order() const;
  bool contains(const Permutation& g) const;

 private:
  struct Level {
    std::size_t point;
    std::vector<Permutation> generators;
    // transversal[y] maps point to y; empty when y is outside the orbit.
    std::vector<Permutation> transversal;
  };

  void rebuild_orbit(Level& level) const;
  // Returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void add_level(std::size_t point);

  std::size_t degree_;
  std::vector<std::size_t> base_;
  std::vector<Level> levels_;
  std::vector<Permutation> top_generators_;
};

Integer group_order(const PermutationAction& action);

/// Action on a family of sets induced by a point action. Throws GroupError
/// when some image is not in the family.
PermutationAction set_action(const PermutationAction& action,
                             const std::vector<std::vector<std::size_t>>& sets);
PermutationAction block_action(const PermutationAction& action, const IncidenceStructure& d);

/// Orbit of the first flag under (point, block) pairs of generators.
bool is_flag_transitive(const PermutationAction& action, const IncidenceStructure& d,
                        const PermutationAction& blocks);
bool is_flag_transitive(const PermutationAction& action, const IncidenceStructure& d);

enum class Primitivity { Primitive, Imprimitive, NotTransitive };

struct PrimitivityResult {
  Primitivity status = Primitivity::NotTransitive;
  /// Block containing 0 of a nontrivial system when imprimitive.
  std::vector<std::size_t> block;
};

PrimitivityResult primitivity(const PermutationAction& action);
/// Throws GroupError on an intransitive action.
bool is_primitive(const PermutationAction& action);

/// Sorted orbit sizes of the stabilizer of `point`.
std::vector<std::size_t> stabilizer_orbit_sizes(const PermutationAction& action, std::size_t point);
std::size_t rank(const PermutationAction& action);

/// Reflections in all anisotropic points of the design space for the three
/// orthogonal kinds; symplectic transvections for pg33.
std::vector<Matrix> design_generators(DesignKind kind);
PermutationAction design_action(const GeometricDesign& design);

}  // namespace psu4
