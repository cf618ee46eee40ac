#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psu4/geometry.hpp"
#include "psu4/params.hpp"

namespace psu4 {

using SizeParams = DesignParams<std::size_t>;

/// Points 0..v-1 and a list of blocks, each stored as sorted point indices.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Sorts every block; throws std::invalid_argument on an out-of-range or
  /// repeated point.
  IncidenceStructure(std::size_t v, std::vector<std::vector<std::size_t>> blocks);

  std::size_t num_points() const { return v_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t i) const { return blocks_[i]; }
  bool incident(std::size_t point, std::size_t block) const {
    return incidence_[block * v_ + point];
  }

  /// v x b 0/1 matrix N.
  MatX<int> incidence_matrix() const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.v_ == b.v_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t v_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<bool> incidence_;
};

enum class DesignKind { Menon36, Minus45, Higman40, Pg33 };

std::string_view kind_name(DesignKind kind);
std::optional<DesignKind> parse_kind(std::string_view name);

/// A constructed design together with the projective points it lives on.
struct GeometricDesign {
  DesignKind kind;
  IncidenceStructure structure;
  PrimeField field;
  std::vector<ProjectivePoint> points;
};

/// menon36 / minus45 / higman40: square-type, nonsquare-type and isotropic
/// points of QuadraticSpace::design_space(), block i = perp of point i.
/// pg33: points and hyperplanes of PG(3,3).
GeometricDesign build_geometric(DesignKind kind);
IncidenceStructure build(DesignKind kind);

struct VerificationFailure {
  std::string axiom;
  std::size_t first = 0;
  std::size_t second = 0;
  std::string detail;
};

struct Verification {
  std::optional<SizeParams> params;
  std::optional<VerificationFailure> failure;

  explicit operator bool() const { return params.has_value(); }
};

/// Checks b = v, constant block size, constant replication, N N^T and
/// N^T N off-diagonals constant, and 2 < k < v-1.
Verification verify_symmetric(const IncidenceStructure& d);

IncidenceStructure complement(const IncidenceStructure& d);

/// Incident (point, block) pairs in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> flags(const IncidenceStructure& d);

/// Point x becomes perm[x]; block order is kept.
IncidenceStructure relabel(const IncidenceStructure& d, const std::vector<std::size_t>& perm);

/// True when perm (points of a -> points of b) carries the blocks of a onto
/// the blocks of b.
bool is_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                    const std::vector<std::size_t>& perm);

struct IsomorphismResult {
  bool isomorphic = false;
  /// Validated point bijection when isomorphic.
  std::vector<std::size_t> witness;
};

/// Backtracking over point images with colour refinement on the incidence
/// structure and the pair relation |intersection of blocks through x and y|.
IsomorphismResult are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b);

class DesignParseError : public std::runtime_error {
 public:
  DesignParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// "v b" then one line per block with sorted zero-based indices.
void write_design(std::ostream& os, const IncidenceStructure& d);
std::string to_design_text(const IncidenceStructure& d);
IncidenceStructure read_design(std::istream& is);

}  // namespace psu4
