#pragma once

#include <boost/dynamic_bitset.hpp>

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mobkit/arith.hpp"

namespace mobkit::poset {

inline constexpr unsigned kMaxSubsetBase = 12;

// Raised when a relation fails a partial-order axiom. `witness` holds the
// offending element labels: one for reflexivity, two for antisymmetry, three
// (a <= b <= c but not a <= c) for transitivity.
class PosetAxiomError : public DomainError {
public:
  PosetAxiomError(std::string axiom, std::vector<std::string> witness);
  const std::string& axiom() const { return axiom_; }
  const std::vector<std::string>& witness() const { return witness_; }

private:
  std::string axiom_;
  std::vector<std::string> witness_;
};

// Finite partial order on labelled elements, stored as a full <= bitmatrix.
// Elements keep their input indices; topo_order() lists them so that
// x < y implies x comes first, ties broken by input order.
class Poset {
public:
  // Validates reflexivity, antisymmetry and transitivity of `leq`
  // (leq[i][j] means element i <= element j). Labels must be distinct.
  Poset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws DomainError for an unknown label.
  std::size_t index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && rows_[i][j]; }
  // Elements strictly between are derived on demand.
  bool covers(std::size_t i, std::size_t j) const;

  const std::vector<std::size_t>& topo_order() const { return topo_; }
  std::size_t topo_position(std::size_t element) const { return position_[element]; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.rows_ == b.rows_;
  }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<boost::dynamic_bitset<>> rows_;
  std::vector<std::size_t> topo_;
  std::vector<std::size_t> position_;
};

using PosetPtr = std::shared_ptr<const Poset>;

PosetPtr validate_poset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

// Closes `pairs` (a <= b) reflexively and transitively, then validates.
// Unknown labels in a pair are a DomainError; a cycle shows up as an
// antisymmetry violation.
PosetPtr poset_from_relation(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& pairs);

// Divisors of n ordered by divisibility, labelled by their decimal value.
PosetPtr build_divisor_poset(const BigInt& n);

enum class SubsetOrder { kInclusion, kExclusion };

// Subsets of {1..base_size}; element i is the subset with bitmask i and is
// labelled like "{1,3}". Exclusion order: U <= T iff U contains T.
PosetPtr build_subset_poset(unsigned base_size, SubsetOrder order);

std::string subset_label(std::uint64_t mask);

// A rational-valued function on pairs x <= y, implicitly zero elsewhere.
// Stored as a dense matrix over topological positions, so it is upper
// triangular.
class IncidenceFunction {
public:
  explicit IncidenceFunction(PosetPtr poset);
  // Throws DomainError if `value` is nonzero on some pair x not<= y.
  IncidenceFunction(PosetPtr poset, const std::function<Rational(std::size_t, std::size_t)>& value);

  static IncidenceFunction delta(const PosetPtr& poset);
  // 1 on every pair x <= y.
  static IncidenceFunction zeta(const PosetPtr& poset);

  const PosetPtr& poset() const { return poset_; }
  // By element index.
  const Rational& at(std::size_t x, std::size_t y) const;
  const Rational& at(const std::string& x, const std::string& y) const;
  // Throws DomainError when x not<= y and value is nonzero.
  void set(std::size_t x, std::size_t y, Rational value);

  bool is_zero() const;

  friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b);
  friend IncidenceFunction operator+(const IncidenceFunction& a, const IncidenceFunction& b);
  friend IncidenceFunction operator-(const IncidenceFunction& a, const IncidenceFunction& b);

private:
  friend IncidenceFunction convolve(const IncidenceFunction& a, const IncidenceFunction& b);
  Rational& cell(std::size_t pi, std::size_t pj) { return values_[pi * n_ + pj]; }
  const Rational& cell(std::size_t pi, std::size_t pj) const { return values_[pi * n_ + pj]; }

  PosetPtr poset_;
  std::size_t n_ = 0;
  std::vector<Rational> values_;  // indexed by topological positions
};

// (a * b)(x, y) = sum_{x <= t <= y} a(x, t) b(t, y). Throws DomainError if the
// operands live on different posets.
IncidenceFunction convolve(const IncidenceFunction& a, const IncidenceFunction& b);

// mu(x, x) = 1, mu(x, y) = -sum_{x <= t < y} mu(x, t), evaluated in
// topological order.
IncidenceFunction mobius_function(const PosetPtr& poset);

// For a = delta + N with N strictly upper triangular, returns
// sum_{k=0}^{n-1} (-1)^k N^{*k}. Throws DomainError if some a(x, x) != 1.
IncidenceFunction invert_unitriangular(const IncidenceFunction& a);

using ElementValues = std::map<std::string, Rational>;

// g(x) = sum_{y <= x} f(y).
ElementValues down_sum(const ElementValues& f, const PosetPtr& poset);

// f(x) = sum_{y <= x} g(y) mu(y, x). Throws DomainError on a missing element.
ElementValues mobius_invert(const ElementValues& g, const PosetPtr& poset);
ElementValues mobius_invert(const ElementValues& g, const PosetPtr& poset,
                            const IncidenceFunction& mu);

}  // namespace mobkit::poset
