#include "psu4/catalog.hpp"

#include <array>
#include <numeric>
#include <string>

namespace psu4 {

namespace {

struct LineInfo {
  std::string_view label;
  bool parabolic;
};

constexpr std::array<LineInfo, 16> kLines{{
    {"^E_q^{1+4}:SU_2(q):(q^2-1)", true},
    {"^E_q^4:SL_2(q^2):(q-1)", true},
    {"^GU_3(q)", false},
    {"^(q+1)^3:S_4", false},
    {"^SU_2(q)^2:(q+1).2", false},
    {"^SL_2(q^2).(q-1).2", false},
    {"^SU_4(q0)", false},
    {"^Sp_4(q).gcd(2,q+1)", false},
    {"^SO_4^+(q).d", false},
    {"^SO_4^-(q).d", false},
    {"^(4o2^{1+4}).S_6", false},
    {"^(4o2^{1+4}).A_6", false},
    {"^d o 2.PSL_2(7)", false},
    {"^d o 2.A_7", false},
    {"^4_2.PSL_3(4)", false},
    {"^d o 2.PSU_4(2)", false},
}};

const LineInfo& info(int line) {
  if (line < kFirstLine || line > kLastLine)
    throw std::out_of_range("catalog line must be in 1..16");
  return kLines[static_cast<std::size_t>(line - 1)];
}

bool is_odd_prime(unsigned r) { return r > 2 && is_prime(std::uint64_t{r}); }

Integer su4_order(const Integer& q) {
  return pow(q, 6) * (pow(q, 2) - 1) * (pow(q, 3) + 1) * (pow(q, 4) - 1);
}

// Orders of the almost-quasisimple pieces of lines 11-16.
constexpr std::uint64_t kCentralProduct4o2_1_4 = 64;
constexpr std::uint64_t kOrderS6 = 720;
constexpr std::uint64_t kOrderA6 = 360;
constexpr std::uint64_t kOrderPSL27 = 168;
constexpr std::uint64_t kOrderA7 = 2520;
constexpr std::uint64_t kOrderPSL34 = 20160;
constexpr std::uint64_t kOrderPSU42 = 25920;

}  // namespace

std::uint64_t unitary_d(const PrimePower& q) { return std::gcd<std::uint64_t>(4, q.q + 1); }

Integer socle_order(const PrimePower& q) {
  return su4_order(Integer(q.q)) / unitary_d(q);
}

Integer out_order(const PrimePower& q) { return Integer(2 * q.a * unitary_d(q)); }

std::string_view structure_label(int line) { return info(line).label; }

bool is_applicable(int line, const PrimePower& q) {
  const std::uint64_t p = q.p;
  const bool prime_field = q.a == 1;
  switch (line) {
    case 1: case 2: case 3: case 4: case 8:
      return true;
    case 5: return q.q >= 3;
    case 6: return q.q >= 4;
    case 7:
      for (unsigned r = 3; r <= q.a; ++r)
        if (q.a % r == 0 && is_odd_prime(r)) return true;
      return false;
    case 9: return q.q >= 5 && q.q % 2 == 1;
    case 10: return q.q % 2 == 1;
    case 11: return prime_field && p % 8 == 7;
    case 12: return prime_field && p % 8 == 3;
    case 13: return prime_field && (p % 7 == 3 || p % 7 == 5 || p % 7 == 6) && p != 3;
    case 14: return prime_field && (p % 7 == 3 || p % 7 == 5 || p % 7 == 6);
    case 15: return q.q == 3;
    case 16: return prime_field && p % 6 == 5;
    default: throw std::out_of_range("catalog line must be in 1..16");
  }
}

std::vector<SubgroupCase> cases_for(int line, const PrimePower& q) {
  std::vector<SubgroupCase> out;
  if (!is_applicable(line, q)) return out;
  const LineInfo& li = info(line);
  if (line != 7) {
    out.push_back({line, li.label, li.parabolic, std::nullopt});
    return out;
  }
  for (unsigned r = 3; r <= q.a; ++r) {
    if (q.a % r != 0 || !is_odd_prime(r)) continue;
    const auto q0 = PrimePower::make(q.p, q.a / r).q;
    out.push_back({line, li.label, li.parabolic, Subfield{q0, r}});
  }
  return out;
}

std::vector<SubgroupCase> cases_for(const PrimePower& q) {
  std::vector<SubgroupCase> out;
  for (int line = kFirstLine; line <= kLastLine; ++line) {
    auto part = cases_for(line, q);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Integer su_level_order(const SubgroupCase& c, const PrimePower& pq) {
  const Integer q(pq.q);
  const Integer d(unitary_d(pq));
  const Integer c2(std::gcd<std::uint64_t>(2, pq.q + 1));
  const Integer d_o_2 = d > 2 ? d : Integer(2);
  switch (c.line) {
    case 1: return pow(q, 6) * pow(q * q - 1, 2);
    case 2: return pow(q, 6) * (pow(q, 4) - 1) * (q - 1);
    case 3: return pow(q, 3) * (q * q - 1) * (pow(q, 3) + 1) * (q + 1);
    case 4: return 24 * pow(q + 1, 3);
    case 5: return 2 * q * q * pow(q * q - 1, 2) * (q + 1);
    case 6: return 2 * q * q * (pow(q, 4) - 1) * (q - 1);
    case 7:
      if (!c.subfield) throw CatalogError("line 7 requires a subfield decomposition");
      return su4_order(Integer(c.subfield->q0));
    case 8: return c2 * pow(q, 4) * (q * q - 1) * (pow(q, 4) - 1);
    case 9: return d * q * q * pow(q * q - 1, 2);
    case 10: return d * q * q * (pow(q, 4) - 1);
    case 11: return Integer(kCentralProduct4o2_1_4 * kOrderS6);
    case 12: return Integer(kCentralProduct4o2_1_4 * kOrderA6);
    case 13: return d_o_2 * kOrderPSL27;
    case 14: return d_o_2 * kOrderA7;
    case 15: return Integer(4 * kOrderPSL34);
    case 16: return d_o_2 * kOrderPSU42;
    default: throw std::out_of_range("catalog line must be in 1..16");
  }
}

Integer h0_order(const SubgroupCase& c, const PrimePower& q) {
  const Integer su = su_level_order(c, q);
  const std::uint64_t d = unitary_d(q);
  if (su % d != 0) {
    throw CatalogError("line " + std::to_string(c.line) + " at q=" + std::to_string(q.q) +
                       ": SU-level order not divisible by d");
  }
  return su / d;
}

Integer point_count(const SubgroupCase& c, const PrimePower& q) {
  const Integer x = socle_order(q);
  const Integer h0 = h0_order(c, q);
  if (x % h0 != 0) {
    throw CatalogError("line " + std::to_string(c.line) + " at q=" + std::to_string(q.q) +
                       ": |H0| does not divide |X|");
  }
  return x / h0;
}

Integer k_divisor_bound(const SubgroupCase& c, const PrimePower& q) {
  return out_order(q) * h0_order(c, q);
}

SubdegreeData subdegree_divisors(const SubgroupCase& c, const PrimePower& pq) {
  const Integer q(pq.q);
  switch (c.line) {
    case 1:
    case 2:
      return {{pow(q, 6)}, true};
    case 3: return {{(q + 1) * (pow(q, 3) + 1)}, false};
    case 5: return {{2 * pow(q * q - 1, 2)}, false};
    case 6: return {{2 * (pow(q, 4) - 1)}, false};
    default: return {};
  }
}

}  // namespace psu4
