#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mobkit/arith.hpp"

namespace mobkit::finfield {

using Residue = std::uint32_t;
// Coefficients over F_p in ascending degree.
using Rep = std::vector<Residue>;

inline constexpr std::uint64_t kFieldCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMaterializeCap = std::uint64_t{1} << 16;

// F_q = F_p[x]/(h) for a monic irreducible h of degree m. Immutable; shared
// by all elements and polynomials built over it.
//
// Ordering convention used everywhere in this module: an element is ordered
// by its representative coefficient vector compared from the constant term
// upward, so index(a) = a_0 p^{m-1} + a_1 p^{m-2} + ... + a_{m-1}.
// Polynomials compare by degree first, then by coefficients from the
// constant term upward.
class FieldSpec {
public:
  // Validates that p is prime, h is monic of degree m >= 1 over F_p and
  // irreducible, and that p^m <= kFieldCap.
  FieldSpec(std::uint64_t p, Rep modulus);

  std::uint64_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  // Monic, size m + 1.
  const Rep& modulus() const { return modulus_; }

  Rep zero() const { return Rep(m_, 0); }
  Rep one() const;
  Rep embed(std::uint64_t residue) const;
  Rep from_index(std::uint64_t index) const;
  std::uint64_t index(const Rep& a) const;

  Rep add(const Rep& a, const Rep& b) const;
  Rep sub(const Rep& a, const Rep& b) const;
  Rep neg(const Rep& a) const;
  Rep mul(const Rep& a, const Rep& b) const;
  // Extended Euclid against the modulus. Throws DomainError on zero.
  Rep inv(const Rep& a) const;
  bool is_zero(const Rep& a) const;

  bool same_as(const FieldSpec& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

  std::string describe() const;

private:
  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  Rep modulus_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

// F_p with modulus h = x.
FieldPtr prime_field(std::uint64_t p);

// F_{p^m} with the lexicographically least monic irreducible modulus.
FieldPtr make_field(std::uint64_t p, unsigned m);

// F_p[x]/(h) for a caller-chosen h (ascending coefficients, monic).
FieldPtr make_field_with_modulus(std::uint64_t p, Rep modulus);

class FqElement {
public:
  FqElement(FieldPtr field, Rep rep);

  static FqElement zero(const FieldPtr& f) { return {f, f->zero()}; }
  static FqElement one(const FieldPtr& f) { return {f, f->one()}; }
  static FqElement from_index(const FieldPtr& f, std::uint64_t index) {
    return {f, f->from_index(index)};
  }
  // The class of x in F_p[x]/(h). For m = 1 (h = x) this is zero.
  static FqElement generator_of_representation(const FieldPtr& f);

  const FieldPtr& field() const { return field_; }
  const Rep& rep() const { return rep_; }
  std::uint64_t index() const { return field_->index(rep_); }
  bool is_zero() const { return field_->is_zero(rep_); }
  bool is_one() const { return rep_ == field_->one(); }

  FqElement inverse() const;
  FqElement pow(const BigInt& exponent) const;
  // Multiplicative order; throws DomainError for zero.
  std::uint64_t order() const;

  std::string to_string() const;

  friend bool operator==(const FqElement& a, const FqElement& b);
  friend bool operator<(const FqElement& a, const FqElement& b);
  friend FqElement operator+(const FqElement& a, const FqElement& b);
  friend FqElement operator-(const FqElement& a, const FqElement& b);
  friend FqElement operator-(const FqElement& a);
  friend FqElement operator*(const FqElement& a, const FqElement& b);
  friend FqElement operator/(const FqElement& a, const FqElement& b);

private:
  FieldPtr field_;
  Rep rep_;
};

// Polynomial over F_q, ascending degree; empty coefficient list is zero.
class FqPolynomial {
public:
  explicit FqPolynomial(FieldPtr field) : field_(std::move(field)) {}
  FqPolynomial(FieldPtr field, std::vector<FqElement> coeffs);

  static FqPolynomial constant(const FqElement& c);
  static FqPolynomial x(const FieldPtr& field);
  // Monic of degree n whose lower coefficients are given by `index`
  // read in base q with c_0 most significant. index < q^n enumerates all
  // monic degree-n polynomials in lexicographic order.
  static FqPolynomial monic_from_index(const FieldPtr& field, unsigned n, std::uint64_t index);

  const FieldPtr& field() const { return field_; }
  const std::vector<FqElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Undefined for zero; throws InternalError.
  std::size_t degree() const;
  const FqElement& leading() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  FqPolynomial monic() const;
  FqElement evaluate(const FqElement& x) const;

  // Descending degree with each coefficient printed via FqElement::to_string.
  std::string to_string() const;

  friend bool operator==(const FqPolynomial& a, const FqPolynomial& b);
  friend FqPolynomial operator+(const FqPolynomial& a, const FqPolynomial& b);
  friend FqPolynomial operator-(const FqPolynomial& a, const FqPolynomial& b);
  friend FqPolynomial operator*(const FqPolynomial& a, const FqPolynomial& b);

private:
  void normalize();
  FieldPtr field_;
  std::vector<FqElement> coeffs_;
};

// Degree first, then coefficients from the constant term upward.
bool lex_less(const FqPolynomial& a, const FqPolynomial& b);

struct DivMod {
  FqPolynomial quotient;
  FqPolynomial remainder;
};
DivMod divmod(const FqPolynomial& a, const FqPolynomial& b);
FqPolynomial mod(const FqPolynomial& a, const FqPolynomial& b);
// Monic gcd; gcd(0, 0) = 0.
FqPolynomial gcd(FqPolynomial a, FqPolynomial b);
FqPolynomial powmod(const FqPolynomial& base, const BigInt& exponent, const FqPolynomial& modulus);

// f divides x^{q^n} - x, and gcd(f, x^{q^{n/l}} - x) is constant for every
// prime l | n, where n = deg f. Powers of x are formed by iterated Frobenius
// (square-and-multiply by q) modulo f. Throws DomainError for constant f.
bool is_irreducible(const FqPolynomial& f);

// (1/n) sum_{d | n} mu(n/d) q^d. Throws DomainError if q is not a prime power.
BigInt count_irreducible(const BigInt& q, const BigInt& n);

// All monic irreducibles of degree n in lexicographic order; q^n <= kEnumerationCap.
std::vector<FqPolynomial> enumerate_irreducible(const FieldPtr& field, unsigned n);

// prod_{d | n} prod_{deg f = d} f == x^{q^n} - x, materialized; q^n <= kMaterializeCap.
bool verify_xqn_factorization(const FieldPtr& field, unsigned n);

// Smallest element (in index order) of multiplicative order q - 1.
FqElement find_generator(const FieldPtr& field);

// Field isomorphism a -> b determined by the image theta of the class of x.
class FieldIsomorphism {
public:
  FieldIsomorphism(FieldPtr source, FieldPtr target, FqElement theta);
  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  const FqElement& theta() const { return theta_; }
  // sum a_i omega^i  |->  sum a_i theta^i
  FqElement apply(const FqElement& x) const;

private:
  FieldPtr source_;
  FieldPtr target_;
  FqElement theta_;
  std::vector<FqElement> basis_images_;
};

// Scans b in index order for a root theta of a's modulus, then checks the
// induced map on 100 random pairs (multiplicative and additive). Throws DomainError if a.q != b.q.
FieldIsomorphism find_isomorphism(const FieldPtr& a, const FieldPtr& b);

}  // namespace mobkit::finfield
