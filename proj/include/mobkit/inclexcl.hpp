#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "mobkit/arith.hpp"

namespace mobkit::inclexcl {

inline constexpr std::size_t kMaxSets = 20;
inline constexpr std::size_t kMaxUniverse = std::size_t{1} << 32;
inline constexpr unsigned kMaxFixedPointBase = 8;

using Bitset = boost::dynamic_bitset<>;

// Sets A_1..A_n over an indexed universe, n <= kMaxSets.
class SetFamily {
public:
  SetFamily(std::vector<std::string> universe, std::vector<Bitset> sets);
  // Sets given by element labels; unknown labels are a DomainError.
  static SetFamily from_labels(std::vector<std::string> universe,
                               const std::vector<std::vector<std::string>>& sets);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<Bitset>& sets() const { return sets_; }

private:
  std::vector<std::string> universe_;
  std::vector<Bitset> sets_;
};

// sum_{k=1}^{n} (-1)^{k-1} sum_{|I| = k} |A_I| over all 2^n - 1 index sets.
std::uint64_t union_size_ie(const SetFamily& family);
std::uint64_t union_size_direct(const SetFamily& family);

// Checks pointwise on the universe that
//   1_A = sum_{k=1}^{n} (-1)^{k-1} sum_{|I| = k} 1_{A_I}
// and that (1_A - 1_{A_1}) ... (1_A - 1_{A_n}) = 0.
bool verify_indicator_identity(const SetFamily& family);

// Outcomes with exact nonnegative weights summing to 1, and events on them.
class FiniteProbSpace {
public:
  FiniteProbSpace(std::vector<std::string> outcomes, std::vector<Rational> weights,
                  std::vector<Bitset> events);
  static FiniteProbSpace from_labels(std::vector<std::string> outcomes, std::vector<Rational> weights,
                                     const std::vector<std::vector<std::string>>& events);

  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<Bitset>& events() const { return events_; }
  Rational measure(const Bitset& event) const;

private:
  std::vector<std::string> outcomes_;
  std::vector<Rational> weights_;
  std::vector<Bitset> events_;
};

Rational prob_union_ie(const FiniteProbSpace& space);
Rational prob_union_direct(const FiniteProbSpace& space);

// D_0 = 1, D_k = k D_{k-1} + (-1)^k, the integer form of
// n! sum_{k <= n} (-1)^k / k!.
BigInt count_derangements(unsigned n);

// For a subset T of S = {1..n} (bitmask), g(T) counts permutations fixing
// every point of T and f(T) those fixing exactly T.
struct FixedPointRow {
  std::uint64_t subset = 0;
  BigInt g;
  BigInt f;
};

// g(T) = (n - |T|)!, then f from g by Mobius inversion on the exclusion order
// of subsets of S (since g(T) = sum_{U containing T} f(U)). Rows are in
// bitmask order; n <= kMaxFixedPointBase.
std::vector<FixedPointRow> fixed_point_table(unsigned n);

}  // namespace mobkit::inclexcl
