#include "mobkit/intpoly.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace mobkit {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<BigInt> v(n + 1);
  v[n] += 1;
  v[0] -= 1;
  return IntPolynomial(std::move(v));
}

std::size_t IntPolynomial::degree() const {
  if (is_zero()) throw InternalError("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw InternalError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigInt IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || k == 0) out += magnitude.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  return intpoly::poly_mul(a, b);
}

InexactDivision::InexactDivision(IntPolynomial quotient, IntPolynomial remainder)
    : DomainError("inexact polynomial division, remainder " + remainder.to_string()),
      quotient_(std::move(quotient)),
      remainder_(std::move(remainder)) {}

namespace intpoly {

namespace {

// Nonzero terms of p as (degree, coefficient index).
std::vector<std::size_t> support(const IntPolynomial& p) {
  std::vector<std::size_t> idx;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) idx.push_back(i);
  }
  return idx;
}

std::size_t to_size(const BigInt& n, const char* what) {
  if (n < 1 || !n.fits_ulong_p()) {
    throw DomainError(std::string(what) + ": n must be a positive machine-size integer");
  }
  return n.get_ui();
}

}  // namespace

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  // Iterate the sparser operand's support in the outer loop.
  const bool a_outer = support(a).size() <= support(b).size();
  const auto& outer = a_outer ? ac : bc;
  const auto& inner = a_outer ? bc : ac;
  const auto inner_support = support(a_outer ? b : a);
  std::vector<BigInt> v(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (outer[i] == 0) continue;
    for (std::size_t j : inner_support) {
      mpz_addmul(v[i + j].get_mpz_t(), outer[i].get_mpz_t(), inner[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("poly_divexact: division by the zero polynomial");
  if (a.is_zero()) return {};
  std::vector<BigInt> rem = a.coeffs();
  const std::size_t db = b.degree();
  if (rem.size() - 1 < db) throw InexactDivision({}, a);
  const BigInt& lead = b.leading();
  const auto& bc = b.coeffs();
  std::vector<std::size_t> lower;  // nonzero terms of b below the leading one
  for (std::size_t j = 0; j < db; ++j) {
    if (bc[j] != 0) lower.push_back(j);
  }
  std::vector<BigInt> quot(rem.size() - db);
  BigInt r;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top == 0) continue;
    mpz_tdiv_qr(quot[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) {
      // Not divisible over Z; report what is left at this point.
      std::vector<BigInt> q_part(quot.begin(), quot.end());
      q_part[k] = 0;
      throw InexactDivision(IntPolynomial(std::move(q_part)), IntPolynomial(rem));
    }
    for (std::size_t j : lower) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), bc[j].get_mpz_t());
    }
    rem[k + db] = 0;
  }
  IntPolynomial remainder(std::move(rem));
  if (!remainder.is_zero()) throw InexactDivision(IntPolynomial(std::move(quot)), remainder);
  return IntPolynomial(std::move(quot));
}

IntPolynomial cyclotomic(const BigInt& n) {
  to_size(n, "cyclotomic");
  std::map<BigInt, IntPolynomial> factors;
  for (const auto& d : arith::divisors(n)) {
    factors.emplace(d, IntPolynomial::x_pow_minus_one(d.get_ui()));
  }
  try {
    return arith::mobius_invert_multiplicative(factors, n);
  } catch (const InexactDivision& e) {
    throw InternalError("cyclotomic(" + n.get_str() + "): inexact division, " + e.what());
  }
}

bool verify_product_identity(const BigInt& n) {
  const std::size_t size = to_size(n, "verify_product_identity");
  IntPolynomial prod = IntPolynomial::constant(1);
  for (const auto& d : arith::divisors(n)) prod = poly_mul(prod, cyclotomic(d));
  return prod == IntPolynomial::x_pow_minus_one(size);
}

}  // namespace intpoly
}  // namespace mobkit
