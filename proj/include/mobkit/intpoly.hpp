#pragma once

#include <string>
#include <vector>

#include "mobkit/arith.hpp"

namespace mobkit {

// Dense polynomial over Z, coefficients in ascending degree. The zero
// polynomial is the empty vector; otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1);
  // x^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  // Undefined for the zero polynomial; throws InternalError if asked.
  std::size_t degree() const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Coefficient of x^k, zero beyond the degree.
  BigInt coeff(std::size_t k) const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  BigInt evaluate(const BigInt& x) const;

  // Descending degree, e.g. "x^2 - x + 1".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// Raised by poly_divexact when the divisor does not divide exactly.
class InexactDivision : public DomainError {
public:
  InexactDivision(IntPolynomial quotient, IntPolynomial remainder);
  const IntPolynomial& quotient() const { return quotient_; }
  const IntPolynomial& remainder() const { return remainder_; }

private:
  IntPolynomial quotient_;
  IntPolynomial remainder_;
};

namespace intpoly {

// Schoolbook product. Zero coefficients of either operand are skipped, so
// multiplying by a sparse factor like x^d - 1 costs O(deg).
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// q with q * b == a. Throws DomainError if b is zero and InexactDivision
// (carrying the remainder) if b does not divide a over Z.
IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b);

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}. An inexact step is an
// InternalError.
IntPolynomial cyclotomic(const BigInt& n);

// prod_{d | n} Phi_d == x^n - 1.
bool verify_product_identity(const BigInt& n);

}  // namespace intpoly

namespace arith {

template <>
struct MultiplicativeOps<IntPolynomial> {
  static IntPolynomial one() { return IntPolynomial::constant(1); }
  static IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
    return intpoly::poly_mul(a, b);
  }
  static IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b) {
    return intpoly::poly_divexact(a, b);
  }
};

}  // namespace arith
}  // namespace mobkit
