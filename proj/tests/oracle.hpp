#pragma once

// Independent reference implementations used as test oracles. They share no
// code with the library beyond the Integer type.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "psu4/exactmath.hpp"

namespace psu4::oracle {

inline bool is_square_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

/// All k in 3..v-2 passing the sieve conditions, by direct enumeration.
/// Requires v <= 10^6.
inline std::set<std::uint64_t> brute_force_k(std::uint64_t v, const Integer& k_bound,
                                             const std::vector<Integer>& subdegrees,
                                             std::uint64_t p, bool parabolic) {
  std::set<std::uint64_t> out;
  if (!parabolic && std::gcd(p, v - 1) != 1) return out;
  for (std::uint64_t k = 3; k + 2 <= v; ++k) {
    if (k_bound % k != 0) continue;
    const std::uint64_t num = k * (k - 1);
    if (num % (v - 1) != 0) continue;
    const std::uint64_t lambda = num / (v - 1);
    if (lambda == 0 || lambda >= k) continue;
    if (lambda * v >= k * k) continue;
    if (!is_square_u64(4 * lambda * (v - 1) + 1)) continue;
    bool ok = true;
    for (const auto& d : subdegrees) {
      Integer dd = d;
      if (parabolic) dd = boost::multiprecision::gcd(dd, Integer(v - 1));
      if ((Integer(lambda) * dd) % k != 0) ok = false;
    }
    if (ok) out.insert(k);
  }
  return out;
}

}  // namespace psu4::oracle
