#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mobkit/error.hpp"

namespace mobkit {

using BigInt = mpz_class;
using Rational = mpq_class;

namespace arith {

// Largest input accepted by trial-division factorization.
inline const BigInt kFactorizeCap{"1000000000000"};

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer together with its prime factorization. Primes are
// strictly increasing, exponents >= 1, and the list is empty iff n == 1.
class Factorization {
public:
  Factorization(BigInt n, std::vector<PrimePower> factors);

  const BigInt& value() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  bool is_squarefree() const;
  bool is_prime() const;
  // True iff n = p^e with e >= 1.
  bool is_prime_power() const;

private:
  BigInt n_;
  std::vector<PrimePower> factors_;
};

// Deterministic trial division up to sqrt(n). Throws DomainError for n < 1
// and CapError for n > kFactorizeCap.
Factorization factorize(const BigInt& n);

int mobius(const BigInt& n);
int mobius(const Factorization& f);

BigInt euler_phi(const BigInt& n);
BigInt euler_phi(const Factorization& f);

// Ascending, duplicate-free.
std::vector<BigInt> divisors(const BigInt& n);
std::vector<BigInt> divisors(const Factorization& f);

// sum_{d | n} mu(n/d) f(d). Throws DomainError if a divisor of n is missing.
BigInt mobius_invert_additive(const std::map<BigInt, BigInt>& f_values, const BigInt& n);

// Group operations used by the multiplicative inversion. Specialized for
// Rational here and for IntPolynomial in intpoly.hpp.
template <class T>
struct MultiplicativeOps;

template <>
struct MultiplicativeOps<Rational> {
  static Rational one() { return Rational(1); }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static Rational div_exact(const Rational& a, const Rational& b) {
    if (b == 0) throw DomainError("inexact division: divisor is zero");
    return a / b;
  }
};

// prod_{d | n} f(d)^{mu(n/d)}. All mu = +1 factors are multiplied first, then
// each mu = -1 factor is divided out exactly, so polynomial intermediates stay
// integral. Throws DomainError on a missing divisor or an inexact division.
template <class T>
T mobius_invert_multiplicative(const std::map<BigInt, T>& f_values, const BigInt& n) {
  using Ops = MultiplicativeOps<T>;
  const auto ds = divisors(n);
  std::vector<const T*> numer;
  std::vector<const T*> denom;
  for (const auto& d : ds) {
    auto it = f_values.find(d);
    if (it == f_values.end()) {
      throw DomainError("missing value for divisor " + d.get_str() + " of " + n.get_str());
    }
    const BigInt cofactor = n / d;
    switch (mobius(cofactor)) {
      case 1: numer.push_back(&it->second); break;
      case -1: denom.push_back(&it->second); break;
      default: break;
    }
  }
  T acc = Ops::one();
  for (const T* v : numer) acc = Ops::mul(acc, *v);
  for (const T* v : denom) acc = Ops::div_exact(acc, *v);
  return acc;
}

}  // namespace arith
}  // namespace mobkit
