#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "psu4/exactmath.hpp"

namespace psu4 {

struct KBoundRow {
  std::uint64_t q = 0;
  Integer v;
  Integer k_bound;

  friend bool operator==(const KBoundRow&, const KBoundRow&) = default;
};

struct PrimeCap {
  std::uint64_t p = 0;
  unsigned a_max = 0;

  friend bool operator==(const PrimeCap&, const PrimeCap&) = default;
};

struct MBoundRow {
  std::uint64_t q = 0;
  Integer v;
  /// Strict upper bound on the multiplier m.
  Integer m_bound;

  friend bool operator==(const MBoundRow&, const MBoundRow&) = default;
};

/// Recomputed bound tables, ids 3, 4, 6, 7, 8 and 9.
struct BoundTables {
  /// q satisfying q^6(q-1)^2(q^2+1)(q^2-q+1) < 13824 a^2 (q+1)^6.
  std::vector<std::uint64_t> table3_q;
  std::vector<KBoundRow> table3;
  std::vector<PrimeCap> table4;
  std::vector<PrimeCap> table6;
  std::vector<MBoundRow> table7;
  std::vector<PrimeCap> table8;
  /// line (11..16) -> prime q passing the cube prefilter.
  std::map<int, std::vector<std::uint64_t>> table9;
};

BoundTables bound_tables();

std::vector<std::uint64_t> table3_q_values();
std::vector<KBoundRow> table3();
std::vector<PrimeCap> table4();
std::vector<PrimeCap> table6();
std::vector<MBoundRow> table7();
std::vector<PrimeCap> table8();
std::map<int, std::vector<std::uint64_t>> table9();

struct TableCheck {
  int id = 0;
  std::string text;
  bool matches = false;
  std::vector<std::string> differences;
  /// Known divergences reported without failing the check.
  std::vector<std::string> annotations;
};

const std::vector<int>& table_ids();
bool is_table_id(int id);

/// Recomputes one table and compares it with the embedded reference content.
/// Throws std::invalid_argument for an unknown id.
TableCheck check_table(int id);

}  // namespace psu4
