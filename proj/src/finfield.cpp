#include "mobkit/finfield.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace mobkit::finfield {

namespace {

using Wide = std::uint64_t;
using PolyP = std::vector<Wide>;  // dense over F_p, ascending, trimmed

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Wide inv_mod(Wide a, Wide p) {
  // Extended Euclid on integers.
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - t * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - t * s1};
  }
  if (r0 != 1) throw DomainError("residue not invertible");
  const std::int64_t pi = static_cast<std::int64_t>(p);
  return static_cast<Wide>(((s0 % pi) + pi) % pi);
}

// a = q*b + r over F_p; b nonzero and trimmed.
void divmod_p(const PolyP& a, const PolyP& b, Wide p, PolyP& quot, PolyP& rem) {
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, 0);
  const Wide lead_inv = inv_mod(b.back(), p);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Wide c = rem[k + b.size() - 1] * lead_inv % p;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[k + j] = (rem[k + j] + p - c * b[j] % p) % p;
    }
  }
  trim(rem);
  trim(quot);
}

PolyP mul_p(const PolyP& a, const PolyP& b, Wide p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

PolyP sub_p(const PolyP& a, const PolyP& b, Wide p) {
  PolyP out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  trim(out);
  return out;
}

void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (a != b && !a->same_as(*b)) {
    throw DomainError("operands belong to different fields: " + a->describe() + " vs " +
                      b->describe());
  }
}

std::uint64_t checked_power(std::uint64_t base, unsigned exponent, std::uint64_t cap,
                            const char* what) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (result > cap / base) {
      throw CapError(std::string(what) + ": q^n exceeds cap " + std::to_string(cap));
    }
    result *= base;
  }
  if (result > cap) throw CapError(std::string(what) + ": exceeds cap " + std::to_string(cap));
  return result;
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  const auto f = arith::factorize(BigInt(static_cast<unsigned long>(n)));
  for (const auto& pp : f.factors()) {
    out.push_back(pp.prime.get_ui());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec::FieldSpec(std::uint64_t p, Rep modulus) : p_(p), modulus_(std::move(modulus)) {
  if (p < 2 || p > kFieldCap || !arith::factorize(BigInt(static_cast<unsigned long>(p))).is_prime()) {
    throw DomainError("p = " + std::to_string(p) + " is not a prime within the field cap");
  }
  if (modulus_.size() < 2) throw DomainError("modulus must have degree >= 1");
  if (modulus_.back() != 1) throw DomainError("modulus must be monic");
  for (Residue c : modulus_) {
    if (c >= p) throw DomainError("modulus coefficient " + std::to_string(c) + " not reduced mod p");
  }
  m_ = static_cast<unsigned>(modulus_.size() - 1);
  q_ = checked_power(p, m_, kFieldCap, "field size");
  if (m_ > 1) {
    auto base = prime_field(p);
    std::vector<FqElement> coeffs;
    for (Residue c : modulus_) coeffs.push_back(FqElement(base, base->embed(c)));
    if (!is_irreducible(FqPolynomial(base, std::move(coeffs)))) {
      throw DomainError("modulus is reducible over F_" + std::to_string(p));
    }
  }
}

Rep FieldSpec::one() const { return embed(1); }

Rep FieldSpec::embed(std::uint64_t residue) const {
  Rep r(m_, 0);
  r[0] = static_cast<Residue>(residue % p_);
  return r;
}

Rep FieldSpec::from_index(std::uint64_t index) const {
  if (index >= q_) throw DomainError("element index out of range");
  Rep r(m_, 0);
  for (std::size_t i = m_; i-- > 0;) {
    r[i] = static_cast<Residue>(index % p_);
    index /= p_;
  }
  return r;
}

std::uint64_t FieldSpec::index(const Rep& a) const {
  std::uint64_t idx = 0;
  for (Residue c : a) idx = idx * p_ + c;
  return idx;
}

Rep FieldSpec::add(const Rep& a, const Rep& b) const {
  Rep r(m_);
  for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<Residue>((Wide{a[i]} + b[i]) % p_);
  return r;
}

Rep FieldSpec::sub(const Rep& a, const Rep& b) const {
  Rep r(m_);
  for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<Residue>((Wide{a[i]} + p_ - b[i]) % p_);
  return r;
}

Rep FieldSpec::neg(const Rep& a) const { return sub(zero(), a); }

Rep FieldSpec::mul(const Rep& a, const Rep& b) const {
  std::vector<Wide> t(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) t[i + j] = (t[i + j] + Wide{a[i]} * b[j]) % p_;
  }
  // Reduce by the monic modulus from the top.
  for (std::size_t k = t.size(); k-- > m_;) {
    const Wide c = t[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      t[k - m_ + j] = (t[k - m_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
    t[k] = 0;
  }
  Rep r(m_);
  for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<Residue>(t[i]);
  return r;
}

Rep FieldSpec::inv(const Rep& a) const {
  if (is_zero(a)) throw DomainError("zero has no multiplicative inverse");
  PolyP r0(modulus_.begin(), modulus_.end());
  PolyP r1(a.begin(), a.end());
  trim(r1);
  PolyP s0, s1{1};
  PolyP quot, rem;
  while (!r1.empty()) {
    divmod_p(r0, r1, p_, quot, rem);
    PolyP s2 = sub_p(s0, mul_p(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  if (r0.size() != 1) throw InternalError("inverse: modulus shares a factor with element");
  const Wide scale = inv_mod(r0[0], p_);
  Rep out(m_, 0);
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = static_cast<Residue>(s0[i] * scale % p_);
  return out;
}

bool FieldSpec::is_zero(const Rep& a) const {
  return std::all_of(a.begin(), a.end(), [](Residue c) { return c == 0; });
}

std::string FieldSpec::describe() const {
  std::string h;
  for (std::size_t k = modulus_.size(); k-- > 0;) {
    if (modulus_[k] == 0) continue;
    if (!h.empty()) h += " + ";
    if (modulus_[k] != 1 || k == 0) h += std::to_string(modulus_[k]);
    if (k >= 1) h += "x";
    if (k >= 2) h += "^" + std::to_string(k);
  }
  return "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) + "[x]/(" + h + ")";
}

FieldPtr prime_field(std::uint64_t p) { return std::make_shared<const FieldSpec>(p, Rep{0, 1}); }

FieldPtr make_field(std::uint64_t p, unsigned m) {
  if (m < 1) throw DomainError("extension degree m must be >= 1");
  auto base = prime_field(p);
  const std::uint64_t count = checked_power(p, m, kFieldCap, "make_field");
  if (m == 1) return base;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const auto candidate = FqPolynomial::monic_from_index(base, m, idx);
    if (!is_irreducible(candidate)) continue;
    Rep h;
    for (const auto& c : candidate.coeffs()) h.push_back(c.rep()[0]);
    return std::make_shared<const FieldSpec>(p, std::move(h));
  }
  throw InternalError("no irreducible polynomial of degree " + std::to_string(m) + " over F_" +
                      std::to_string(p));
}

FieldPtr make_field_with_modulus(std::uint64_t p, Rep modulus) {
  return std::make_shared<const FieldSpec>(p, std::move(modulus));
}

// ---------------------------------------------------------------- FqElement

FqElement::FqElement(FieldPtr field, Rep rep) : field_(std::move(field)), rep_(std::move(rep)) {
  if (!field_) throw DomainError("element without a field");
  if (rep_.size() != field_->m()) throw DomainError("element representative has wrong length");
  for (Residue c : rep_) {
    if (c >= field_->p()) throw DomainError("element coefficient not reduced mod p");
  }
}

FqElement FqElement::generator_of_representation(const FieldPtr& f) {
  if (f->m() == 1) return zero(f);
  Rep r(f->m(), 0);
  r[1] = 1;
  return {f, std::move(r)};
}

bool operator==(const FqElement& a, const FqElement& b) {
  require_same(a.field_, b.field_);
  return a.rep_ == b.rep_;
}

bool operator<(const FqElement& a, const FqElement& b) {
  require_same(a.field_, b.field_);
  return a.rep_ < b.rep_;  // constant term most significant
}

FqElement operator+(const FqElement& a, const FqElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_->add(a.rep_, b.rep_)};
}

FqElement operator-(const FqElement& a, const FqElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_->sub(a.rep_, b.rep_)};
}

FqElement operator-(const FqElement& a) { return {a.field_, a.field_->neg(a.rep_)}; }

FqElement operator*(const FqElement& a, const FqElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.rep_, b.rep_)};
}

FqElement operator/(const FqElement& a, const FqElement& b) { return a * b.inverse(); }

FqElement FqElement::inverse() const { return {field_, field_->inv(rep_)}; }

FqElement FqElement::pow(const BigInt& exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rep result = field_->one();
  Rep base = rep_;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = field_->mul(result, result);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = field_->mul(result, base);
  }
  return {field_, std::move(result)};
}

std::uint64_t FqElement::order() const {
  if (is_zero()) throw DomainError("zero has no multiplicative order");
  std::uint64_t ord = field_->q() - 1;
  for (std::uint64_t l : (ord > 1 ? distinct_primes(ord) : std::vector<std::uint64_t>{})) {
    while (ord % l == 0 && pow(BigInt(static_cast<unsigned long>(ord / l))).is_one()) ord /= l;
  }
  return ord;
}

std::string FqElement::to_string() const {
  if (field_->m() == 1) return std::to_string(rep_[0]);
  std::string out;
  for (std::size_t k = rep_.size(); k-- > 0;) {
    if (rep_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (rep_[k] != 1 || k == 0) out += std::to_string(rep_[k]);
    if (k >= 1) out += "w";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------- FqPolynomial

FqPolynomial::FqPolynomial(FieldPtr field, std::vector<FqElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same(field_, c.field());
  normalize();
}

void FqPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FqPolynomial FqPolynomial::constant(const FqElement& c) { return {c.field(), {c}}; }

FqPolynomial FqPolynomial::x(const FieldPtr& field) {
  return {field, {FqElement::zero(field), FqElement::one(field)}};
}

FqPolynomial FqPolynomial::monic_from_index(const FieldPtr& field, unsigned n, std::uint64_t index) {
  std::vector<FqElement> coeffs(n + 1, FqElement::zero(field));
  coeffs[n] = FqElement::one(field);
  for (std::size_t k = n; k-- > 0;) {
    coeffs[k] = FqElement::from_index(field, index % field->q());
    index /= field->q();
  }
  if (index != 0) throw DomainError("monic_from_index: index >= q^n");
  return {field, std::move(coeffs)};
}

std::size_t FqPolynomial::degree() const {
  if (is_zero()) throw InternalError("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

const FqElement& FqPolynomial::leading() const {
  if (is_zero()) throw InternalError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FqPolynomial FqPolynomial::monic() const {
  if (is_zero()) return *this;
  const FqElement scale = leading().inverse();
  std::vector<FqElement> c;
  c.reserve(coeffs_.size());
  for (const auto& e : coeffs_) c.push_back(e * scale);
  return {field_, std::move(c)};
}

FqElement FqPolynomial::evaluate(const FqElement& x) const {
  require_same(field_, x.field());
  FqElement acc = FqElement::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string FqPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    const bool compound = cs.find_first_of(" ^") != std::string::npos;
    if (k == 0) {
      out += cs;
    } else {
      if (!c.is_one()) out += compound ? "(" + cs + ")" : cs;
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

bool operator==(const FqPolynomial& a, const FqPolynomial& b) {
  require_same(a.field_, b.field_);
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].rep() != b.coeffs_[i].rep()) return false;
  }
  return true;
}

FqPolynomial operator+(const FqPolynomial& a, const FqPolynomial& b) {
  require_same(a.field_, b.field_);
  std::vector<FqElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), FqElement::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = c[i] + a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
  return {a.field_, std::move(c)};
}

FqPolynomial operator-(const FqPolynomial& a, const FqPolynomial& b) {
  require_same(a.field_, b.field_);
  std::vector<FqElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), FqElement::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = c[i] + a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] - b.coeffs_[i];
  return {a.field_, std::move(c)};
}

FqPolynomial operator*(const FqPolynomial& a, const FqPolynomial& b) {
  require_same(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return FqPolynomial(a.field_);
  const auto& f = *a.field_;
  std::vector<Rep> acc(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] = f.add(acc[i + j], f.mul(a.coeffs_[i].rep(), b.coeffs_[j].rep()));
    }
  }
  std::vector<FqElement> c;
  c.reserve(acc.size());
  for (auto& r : acc) c.emplace_back(a.field_, std::move(r));
  return {a.field_, std::move(c)};
}

bool lex_less(const FqPolynomial& a, const FqPolynomial& b) {
  require_same(a.field(), b.field());
  if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto& x = a.coeffs()[i].rep();
    const auto& y = b.coeffs()[i].rep();
    if (x != y) return x < y;
  }
  return false;
}

DivMod divmod(const FqPolynomial& a, const FqPolynomial& b) {
  require_same(a.field(), b.field());
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto& field = a.field();
  std::vector<FqElement> rem = a.coeffs();
  const std::size_t db = b.degree();
  if (a.is_zero() || a.degree() < db) return {FqPolynomial(field), a};
  std::vector<FqElement> quot(rem.size() - db, FqElement::zero(field));
  const FqElement lead_inv = b.leading().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const FqElement c = rem[k + db] * lead_inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - c * b.coeffs()[j];
  }
  return {FqPolynomial(field, std::move(quot)), FqPolynomial(field, std::move(rem))};
}

FqPolynomial mod(const FqPolynomial& a, const FqPolynomial& b) { return divmod(a, b).remainder; }

FqPolynomial gcd(FqPolynomial a, FqPolynomial b) {
  require_same(a.field(), b.field());
  while (!b.is_zero()) {
    FqPolynomial r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FqPolynomial powmod(const FqPolynomial& base, const BigInt& exponent, const FqPolynomial& modulus) {
  if (exponent < 0) throw DomainError("powmod: negative exponent");
  FqPolynomial result = mod(FqPolynomial::constant(FqElement::one(base.field())), modulus);
  const FqPolynomial b = mod(base, modulus);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(result * result, modulus);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mod(result * b, modulus);
  }
  return result;
}

// ------------------------------------------------------------ irreducibles

bool is_irreducible(const FqPolynomial& f) {
  if (f.is_zero() || f.degree() < 1) {
    throw DomainError("is_irreducible: input must have degree >= 1");
  }
  const auto& field = f.field();
  const FqPolynomial g = f.monic();
  const std::size_t n = g.degree();
  const BigInt q(static_cast<unsigned long>(field->q()));
  const FqPolynomial x_mod = mod(FqPolynomial::x(field), g);
  // frob[k] = x^{q^k} mod g
  std::vector<FqPolynomial> frob{x_mod};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[n] == x_mod)) return false;
  for (std::uint64_t l : (n > 1 ? distinct_primes(n) : std::vector<std::uint64_t>{})) {
    const FqPolynomial d = gcd(g, frob[n / l] - x_mod);
    if (d.degree() != 0) return false;
  }
  return true;
}

BigInt count_irreducible(const BigInt& q, const BigInt& n) {
  if (q < 2 || !arith::factorize(q).is_prime_power()) {
    throw DomainError("count_irreducible: q = " + q.get_str() + " is not a prime power");
  }
  if (n < 1 || !n.fits_ulong_p()) throw DomainError("count_irreducible: n must be >= 1");
  BigInt total = 0;
  for (const auto& d : arith::divisors(n)) {
    const int mu = arith::mobius(BigInt(n / d));
    if (mu == 0) continue;
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), q.get_mpz_t(), d.get_ui());
    total += mu * power;
  }
  if (!mpz_divisible_p(total.get_mpz_t(), n.get_mpz_t())) {
    throw InternalError("count_irreducible: sum not divisible by n");
  }
  return total / n;
}

std::vector<FqPolynomial> enumerate_irreducible(const FieldPtr& field, unsigned n) {
  if (n < 1) throw DomainError("enumerate_irreducible: n must be >= 1");
  const std::uint64_t count = checked_power(field->q(), n, kEnumerationCap, "enumerate_irreducible");
  std::vector<FqPolynomial> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto f = FqPolynomial::monic_from_index(field, n, idx);
    // Zero constant term means x | f.
    if (n > 1 && f.coeffs()[0].is_zero()) continue;
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

bool verify_xqn_factorization(const FieldPtr& field, unsigned n) {
  if (n < 1) throw DomainError("verify_xqn_factorization: n must be >= 1");
  const std::uint64_t qn = checked_power(field->q(), n, kMaterializeCap, "verify_xqn_factorization");
  FqPolynomial product = FqPolynomial::constant(FqElement::one(field));
  for (const auto& d : arith::divisors(BigInt(n))) {
    for (const auto& f : enumerate_irreducible(field, static_cast<unsigned>(d.get_ui()))) {
      product = product * f;
    }
  }
  std::vector<FqElement> target(qn + 1, FqElement::zero(field));
  target[qn] = FqElement::one(field);
  target[1] = target[1] - FqElement::one(field);
  return product == FqPolynomial(field, std::move(target));
}

FqElement find_generator(const FieldPtr& field) {
  const std::uint64_t order = field->q() - 1;
  const auto primes = order > 1 ? distinct_primes(order) : std::vector<std::uint64_t>{};
  for (std::uint64_t idx = 1; idx < field->q(); ++idx) {
    const auto g = FqElement::from_index(field, idx);
    if (g.is_zero()) continue;
    const bool generates = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t l) {
      return !g.pow(BigInt(static_cast<unsigned long>(order / l))).is_one();
    });
    if (generates) return g;
  }
  throw InternalError("no generator found in " + field->describe());
}

// ---------------------------------------------------------- isomorphisms

FieldIsomorphism::FieldIsomorphism(FieldPtr source, FieldPtr target, FqElement theta)
    : source_(std::move(source)), target_(std::move(target)), theta_(std::move(theta)) {
  require_same(target_, theta_.field());
  if (source_->q() != target_->q()) throw DomainError("fields of different cardinality");
  FqElement power = FqElement::one(target_);
  for (unsigned i = 0; i < source_->m(); ++i) {
    basis_images_.push_back(power);
    power = power * theta_;
  }
}

FqElement FieldIsomorphism::apply(const FqElement& x) const {
  require_same(source_, x.field());
  FqElement acc = FqElement::zero(target_);
  for (unsigned i = 0; i < source_->m(); ++i) {
    acc = acc + FqElement(target_, target_->embed(x.rep()[i])) * basis_images_[i];
  }
  return acc;
}

FieldIsomorphism find_isomorphism(const FieldPtr& a, const FieldPtr& b) {
  if (a->q() != b->q()) {
    throw DomainError("find_isomorphism: |a| = " + std::to_string(a->q()) + " but |b| = " +
                      std::to_string(b->q()));
  }
  std::vector<FqElement> h;
  for (Residue c : a->modulus()) h.emplace_back(b, b->embed(c));
  const FqPolynomial h_in_b(b, std::move(h));
  for (std::uint64_t idx = 0; idx < b->q(); ++idx) {
    const auto theta = FqElement::from_index(b, idx);
    if (!h_in_b.evaluate(theta).is_zero()) continue;
    FieldIsomorphism iso(a, b, theta);
    std::mt19937_64 rng(0x150);
    std::uniform_int_distribution<std::uint64_t> pick(0, a->q() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const auto u = FqElement::from_index(a, pick(rng));
      const auto v = FqElement::from_index(a, pick(rng));
      if (!(iso.apply(u * v) == iso.apply(u) * iso.apply(v)) ||
          !(iso.apply(u + v) == iso.apply(u) + iso.apply(v))) {
        throw InternalError("find_isomorphism: induced map is not a homomorphism");
      }
    }
    return iso;
  }
  throw InternalError("find_isomorphism: modulus of a has no root in b");
}

}  // namespace mobkit::finfield
