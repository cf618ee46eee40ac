#pragma once

#include <compare>

#include "psu4/exactmath.hpp"

namespace psu4 {

/// Parameters (v, k, lambda) of a symmetric design.
template <typename Int>
struct DesignParams {
  Int v{};
  Int k{};
  Int lambda{};

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
  friend std::strong_ordering operator<=>(const DesignParams&, const DesignParams&) = default;
};

/// k(k-1) = lambda(v-1), 2 < k < v-1, lambda v < k^2 and 4 lambda (v-1) + 1 square.
template <typename Int>
bool satisfies_symmetric_identities(const DesignParams<Int>& d) {
  const Integer v(d.v), k(d.k), lambda(d.lambda);
  if (v < 4 || lambda < 1) return false;
  if (k * (k - 1) != lambda * (v - 1)) return false;
  if (!(2 < k && k < v - 1)) return false;
  if (!(lambda * v < k * k)) return false;
  return is_perfect_square(4 * lambda * (v - 1) + 1);
}

/// (v, v-k, v-2k+lambda).
template <typename Int>
DesignParams<Int> complement(const DesignParams<Int>& d) {
  return {d.v, d.v - d.k, d.v - 2 * d.k + d.lambda};
}

}  // namespace psu4
