#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "psu4/exactmath.hpp"

namespace psu4 {

/// Raised when the stabilizer data of a case line fails the index identity
/// v * |H0| = |X|. Always a catalog bug.
class CatalogError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// q = q0^r with r an odd prime (line 7 only).
struct Subfield {
  std::uint64_t q0 = 0;
  unsigned r = 0;

  friend bool operator==(const Subfield&, const Subfield&) = default;
};

/// One line of the maximal-subgroup table for socle PSU_4(q), bound to a
/// concrete q. Lines are numbered 1..16.
struct SubgroupCase {
  int line = 0;
  std::string_view structure_label;
  bool parabolic = false;
  std::optional<Subfield> subfield;

  friend bool operator==(const SubgroupCase&, const SubgroupCase&) = default;
};

constexpr int kFirstLine = 1;
constexpr int kLastLine = 16;

/// gcd(4, q+1).
std::uint64_t unitary_d(const PrimePower& q);

/// |PSU_4(q)| = q^6 (q^2-1)(q^3+1)(q^4-1) / gcd(4,q+1).
Integer socle_order(const PrimePower& q);

/// |Out(PSU_4(q))| = 2a gcd(4,q+1).
Integer out_order(const PrimePower& q);

std::string_view structure_label(int line);
bool is_applicable(int line, const PrimePower& q);

/// Applicable lines at q in ascending order; line 7 once per (q0, r).
std::vector<SubgroupCase> cases_for(const PrimePower& q);
/// The variants of one line at q (empty when not applicable).
std::vector<SubgroupCase> cases_for(int line, const PrimePower& q);

/// Order of the written structure at SU level, before dividing by d.
Integer su_level_order(const SubgroupCase& c, const PrimePower& q);
/// |H0| = su_level_order / d; throws CatalogError when inexact.
Integer h0_order(const SubgroupCase& c, const PrimePower& q);
/// v = |X| / |H0|; throws CatalogError when inexact.
Integer point_count(const SubgroupCase& c, const PrimePower& q);
/// 2a gcd(4,q+1) |H0|: every admissible k divides this.
Integer k_divisor_bound(const SubgroupCase& c, const PrimePower& q);

struct SubdegreeData {
  /// Some subdegree of G divides each listed value.
  std::vector<Integer> divisors;
  /// The listed value bounds a p-power subdegree (parabolic lines); the
  /// sieve then uses gcd(D, v-1) in place of D.
  bool prime_power_subdegree = false;
};

SubdegreeData subdegree_divisors(const SubgroupCase& c, const PrimePower& q);

}  // namespace psu4
