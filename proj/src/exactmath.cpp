#include "psu4/exactmath.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace psu4 {

namespace {

constexpr std::uint64_t kTrialLimit = 1u << 14;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1u) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool fits_u64(const Integer& n) {
  return n <= std::numeric_limits<u64>::max();
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialLimit);
  return primes;
}

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

u64 rho_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Integer rho_big(const Integer& n) {
  if ((n & 1) == 0) return Integer(2);
  for (unsigned c = 1;; ++c) {
    auto f = [&](const Integer& x) -> Integer { return (x * x + c) % n; };
    Integer y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * (x > y ? Integer(x - y) : Integer(y - x))) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? Integer(x - ys) : Integer(ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = fits_u64(n) ? Integer(rho_u64(n.convert_to<u64>())) : rho_big(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

PrimePower PrimePower::make(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw std::invalid_argument("PrimePower: base is not prime");
  if (a < 1) throw std::invalid_argument("PrimePower: exponent must be >= 1");
  u64 q = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (q > (std::numeric_limits<u64>::max() >> 1) / p)
      throw std::overflow_error("PrimePower: p^a exceeds 63 bits");
    q *= p;
  }
  return PrimePower{p, a, q};
}

Factorization::Factorization(std::vector<PrimeFactor> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& l, const auto& r) { return l.prime < r.prime; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0 || factors_[i].prime < 2)
      throw std::invalid_argument("Factorization: invalid prime factor");
    if (i > 0 && factors_[i].prime == factors_[i - 1].prime)
      throw std::invalid_argument("Factorization: repeated prime");
  }
}

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& f : factors_) v *= pow(f.prime, f.exponent);
  return v;
}

Integer Factorization::divisor_count() const {
  Integer n = 1;
  for (const auto& f : factors_) n *= f.exponent + 1;
  return n;
}

Factorization operator*(const Factorization& lhs, const Factorization& rhs) {
  std::map<Integer, unsigned> merged;
  for (const auto& f : lhs.factors_) merged[f.prime] += f.exponent;
  for (const auto& f : rhs.factors_) merged[f.prime] += f.exponent;
  std::vector<PrimeFactor> out;
  out.reserve(merged.size());
  for (auto& [p, e] : merged) out.push_back({p, e});
  return Factorization(std::move(out));
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(n.convert_to<u64>());
  for (u64 p : kWitnesses) {
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    Integer x = boost::multiprecision::powm(Integer(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::map<Integer, unsigned> found;
  Integer rest = n;
  for (u64 p : small_primes()) {
    if (Integer(p) * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++found[Integer(p)];
    }
  }
  if (rest > 1) split(rest, found);
  std::vector<PrimeFactor> out;
  out.reserve(found.size());
  for (auto& [p, e] : found) out.push_back({p, e});
  return Factorization(std::move(out));
}

Factorization factorize_product(std::span<const Integer> terms) {
  Factorization result;
  for (const auto& t : terms) result = result * factorize(t);
  return result;
}

std::vector<Integer> divisors(const Factorization& f) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimePower> prime_powers_up_to(std::uint64_t q_max) {
  std::vector<PrimePower> out;
  for (u64 p : primes_up_to(q_max)) {
    u64 q = p;
    for (unsigned a = 1;; ++a) {
      out.push_back(PrimePower{p, a, q});
      if (q > q_max / p) break;
      q *= p;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimePower> prime_powers(std::uint64_t p_max, unsigned a_max) {
  std::vector<PrimePower> out;
  for (u64 p : primes_up_to(p_max)) {
    for (unsigned a = 1; a <= a_max; ++a) out.push_back(PrimePower::make(p, a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace psu4
