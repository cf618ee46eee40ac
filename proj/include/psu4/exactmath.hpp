#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace psu4 {

using Integer = boost::multiprecision::cpp_int;

/// A prime power q = p^a with p prime and a >= 1.
struct PrimePower {
  std::uint64_t p = 2;
  unsigned a = 1;
  std::uint64_t q = 2;

  /// Validates primality of p and that p^a fits in 63 bits.
  static PrimePower make(std::uint64_t p, unsigned a);

  friend auto operator<=>(const PrimePower& lhs, const PrimePower& rhs) {
    return lhs.q <=> rhs.q;
  }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct PrimeFactor {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimeFactor> factors);

  const std::vector<PrimeFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  Integer value() const;
  /// Number of divisors, prod (e_i + 1).
  Integer divisor_count() const;

  /// Factorization of the product of two factored values.
  friend Factorization operator*(const Factorization& lhs,
                                 const Factorization& rhs);
  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimeFactor> factors_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned exponent);

/// Deterministic below 3.3e24; strong probable prime test beyond.
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Trial division, then Pollard-Brent rho on the cofactor.
Factorization factorize(const Integer& n);
/// Factorization of a product, factoring each term on its own.
Factorization factorize_product(std::span<const Integer> terms);

/// All divisors in ascending order.
std::vector<Integer> divisors(const Factorization& f);

bool is_perfect_square(const Integer& n);

/// Every p^a <= q_max, sorted by value.
std::vector<PrimePower> prime_powers_up_to(std::uint64_t q_max);
/// Every p^a with p <= p_max and a <= a_max, sorted by value.
std::vector<PrimePower> prime_powers(std::uint64_t p_max, unsigned a_max);

/// Primes up to n (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace psu4
