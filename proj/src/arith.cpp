#include "mobkit/arith.hpp"

#include <algorithm>

namespace mobkit::arith {

Factorization::Factorization(BigInt n, std::vector<PrimePower> factors)
    : n_(std::move(n)), factors_(std::move(factors)) {
  BigInt product = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& pp = factors_[i];
    if (pp.exponent < 1) throw InternalError("factorization exponent < 1");
    if (i > 0 && !(factors_[i - 1].prime < pp.prime)) {
      throw InternalError("factorization primes not strictly increasing");
    }
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    product *= power;
  }
  if (product != n_) throw InternalError("factorization product mismatch");
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool Factorization::is_prime() const {
  return factors_.size() == 1 && factors_.front().exponent == 1;
}

bool Factorization::is_prime_power() const { return factors_.size() == 1; }

Factorization factorize(const BigInt& n) {
  if (n < 1) throw DomainError("factorize: n must be >= 1, got " + n.get_str());
  if (n > kFactorizeCap) {
    throw CapError("factorize: n = " + n.get_str() + " exceeds trial-division cap " +
                   kFactorizeCap.get_str());
  }
  // Below the cap n fits in 64 bits.
  std::uint64_t rest = n.get_ui();
  if constexpr (sizeof(unsigned long) < 8) {
    rest = std::stoull(n.get_str());
  }
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.push_back({BigInt(static_cast<unsigned long>(p)), e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel.
  for (std::uint64_t p = 5; p * p <= rest; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (rest > 1) out.push_back({BigInt(static_cast<unsigned long>(rest)), 1});
  return Factorization(n, std::move(out));
}

int mobius(const Factorization& f) {
  if (!f.is_squarefree()) return 0;
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

int mobius(const BigInt& n) { return mobius(factorize(n)); }

BigInt euler_phi(const Factorization& f) {
  // n / prod p * prod (p - 1)
  BigInt result = f.value();
  for (const auto& pp : f.factors()) {
    result /= pp.prime;
    result *= pp.prime - 1;
  }
  return result;
}

BigInt euler_phi(const BigInt& n) { return euler_phi(factorize(n)); }

std::vector<BigInt> divisors(const Factorization& f) {
  const auto& fs = f.factors();
  std::vector<unsigned> digit(fs.size(), 0);
  std::vector<BigInt> out;
  // Mixed-radix counter over exponent vectors.
  while (true) {
    BigInt d = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), fs[i].prime.get_mpz_t(), digit[i]);
      d *= power;
    }
    out.push_back(std::move(d));
    std::size_t i = 0;
    while (i < fs.size() && digit[i] == fs[i].exponent) {
      digit[i] = 0;
      ++i;
    }
    if (i == fs.size()) break;
    ++digit[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) { return divisors(factorize(n)); }

BigInt mobius_invert_additive(const std::map<BigInt, BigInt>& f_values, const BigInt& n) {
  BigInt sum = 0;
  for (const auto& d : divisors(n)) {
    auto it = f_values.find(d);
    if (it == f_values.end()) {
      throw DomainError("missing value for divisor " + d.get_str() + " of " + n.get_str());
    }
    const int mu = mobius(BigInt(n / d));
    if (mu != 0) sum += mu * it->second;
  }
  return sum;
}

}  // namespace mobkit::arith
