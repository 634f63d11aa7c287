#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mobkit/inclexcl.hpp"

namespace mobkit::testing {

// Counts fixed-point-free permutations of {0..n-1} by enumeration.
inline std::uint64_t derangements_brute(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool fixed = false;
    for (unsigned i = 0; i < n && !fixed; ++i) fixed = perm[i] == i;
    if (!fixed) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Number of permutations of {0..n-1} whose fixed-point set is exactly `mask`.
inline std::uint64_t exact_fixed_brute(unsigned n, std::uint64_t mask) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t count = 0;
  do {
    std::uint64_t fixed = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (perm[i] == i) fixed |= std::uint64_t{1} << i;
    }
    if (fixed == mask) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// |D - n!/e| < 1/2 decided in exact rationals: n!/e lies within
// n!/(K+1)! of n! sum_{k <= K} (-1)^k / k! (alternating series).
inline bool closest_to_factorial_over_e(unsigned n, const BigInt& d) {
  const unsigned terms = n + 40;
  Rational approx = 0;
  Rational term = 1;
  BigInt n_fact;
  mpz_fac_ui(n_fact.get_mpz_t(), n);
  for (unsigned k = 0; k <= terms; ++k) {
    if (k > 0) term /= k;
    approx += k % 2 == 0 ? term : Rational(-term);
  }
  approx *= n_fact;
  Rational tail = term / (terms + 1) * n_fact;
  Rational diff = Rational(d) - approx;
  if (diff < 0) diff = -diff;
  return diff + tail < Rational(1, 2);
}

inline std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline std::vector<inclexcl::Bitset> random_sets(std::mt19937_64& rng, std::size_t count,
                                                 std::size_t universe) {
  std::bernoulli_distribution member(0.4);
  std::vector<inclexcl::Bitset> sets;
  for (std::size_t i = 0; i < count; ++i) {
    inclexcl::Bitset s(universe);
    for (std::size_t x = 0; x < universe; ++x) s[x] = member(rng);
    sets.push_back(std::move(s));
  }
  return sets;
}

inline inclexcl::SetFamily random_family(std::mt19937_64& rng, std::size_t max_sets,
                                         std::size_t max_universe) {
  std::uniform_int_distribution<std::size_t> sets_dist(0, max_sets);
  std::uniform_int_distribution<std::size_t> universe_dist(1, max_universe);
  const std::size_t u = universe_dist(rng);
  return {numbered_labels("x", u), random_sets(rng, sets_dist(rng), u)};
}

inline inclexcl::FiniteProbSpace random_space(std::mt19937_64& rng, std::size_t max_events,
                                              std::size_t max_outcomes) {
  std::uniform_int_distribution<std::size_t> events_dist(0, max_events);
  std::uniform_int_distribution<std::size_t> outcomes_dist(1, max_outcomes);
  std::uniform_int_distribution<long> raw(0, 9);
  const std::size_t u = outcomes_dist(rng);
  std::vector<Rational> weights(u);
  Rational total = 0;
  for (auto& w : weights) {
    w = raw(rng);
    total += w;
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  for (auto& w : weights) w /= total;
  return {numbered_labels("w", u), std::move(weights), random_sets(rng, events_dist(rng), u)};
}

}  // namespace mobkit::testing
