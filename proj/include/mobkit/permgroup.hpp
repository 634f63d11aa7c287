#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "mobkit/error.hpp"

namespace mobkit::permgroup {

inline constexpr unsigned kMaxDegree = 64;
inline constexpr unsigned kMaxGenerateDegree = 8;
inline constexpr unsigned kMaxClosureDegree = 7;
inline constexpr std::size_t kMaxDerivedOrder = 2520;

// A bijection of {1..n}. Products apply the right factor first:
// (p * q)(x) = p(q(x)). Cycle (a b c) sends a to b, b to c and c to a.
class Permutation {
public:
  // One-line notation: images[i] is the image of i + 1.
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(unsigned degree);
  // Product of the given cycles, rightmost applied first. "()" is the
  // identity; points must lie in 1..degree.
  static Permutation parse_cycles(unsigned degree, const std::string& text);
  static Permutation from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned point) const;
  const std::vector<std::uint8_t>& images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;
  // +1 for even, -1 for odd, from the cycle type.
  int parity() const;
  bool is_even() const { return parity() == 1; }

  // Disjoint cycles with each cycle starting at its least point, cycles in
  // order of that point; fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  Permutation() = default;
  std::vector<std::uint8_t> images_;  // 0-based
};

// Throws DomainError on a degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Deduplicated permutations of one degree, kept in insertion order.
class PermSet {
public:
  explicit PermSet(unsigned degree) : degree_(degree) {}
  PermSet(unsigned degree, const std::vector<Permutation>& elements);

  unsigned degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  // Returns false if already present; throws DomainError on a degree mismatch.
  bool insert(const Permutation& p);
  bool contains(const Permutation& p) const { return members_.contains(p); }
  bool same_elements(const PermSet& other) const;
  std::vector<Permutation> sorted() const;

private:
  unsigned degree_;
  std::vector<Permutation> elements_;
  std::unordered_set<Permutation, PermutationHash> members_;
};

// Breadth-first closure from the identity, right-multiplying by the
// generators in lexicographic order. Degree <= kMaxGenerateDegree.
PermSet generate_group(const PermSet& gens);

// Subgroup generated by all ambient conjugates of gens. Throws DomainError
// unless gens is inside ambient; ambient must be a group of degree
// <= kMaxClosureDegree.
PermSet normal_closure(const PermSet& gens, const PermSet& ambient);

// Subgroup generated by all commutators a^-1 b^-1 a b.
PermSet commutator_subgroup(const PermSet& group);

// G, G', G'', ... up to the first repeat. |G| <= kMaxDerivedOrder.
std::vector<PermSet> derived_series(const PermSet& group);
bool derived_series_solvable(const PermSet& group);

PermSet symmetric_group(unsigned degree);
PermSet alternating_group(unsigned degree);
PermSet three_cycles(unsigned degree);
PermSet transpositions(unsigned degree);

enum class Convention {
  kRightFirst,  // (p q)(x) = p(q(x))
  kLeftFirst,   // (p q)(x) = q(p(x))
};

struct IdentityCheck {
  std::string identity;
  bool holds = true;
  std::size_t tuples_checked = 0;
  // First failing tuple, with the value the right-hand side actually took.
  std::optional<std::vector<unsigned>> counterexample;
  std::string counterexample_value;
};

struct ThreeCycleReport {
  unsigned degree = 0;
  Convention convention = Convention::kRightFirst;
  IdentityCheck three_cycle;           // (abc) = (bc)(ac)
  IdentityCheck double_transposition;  // (ab)(cd) = (acd)(acb)
  // (ab)(cd) = (acb)(acd), the same product with its factors swapped.
  IdentityCheck double_transposition_swapped;
  bool holds() const { return three_cycle.holds && double_transposition.holds; }
};

// Checks both identities over every tuple of distinct points in {1..n},
// n >= 4, multiplying under `convention`.
ThreeCycleReport verify_threecycle_identities(unsigned degree,
                                              Convention convention = Convention::kRightFirst);

}  // namespace mobkit::permgroup
