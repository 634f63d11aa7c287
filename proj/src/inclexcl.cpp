#include "mobkit/inclexcl.hpp"

#include <bit>
#include <functional>
#include <unordered_map>

#include "mobkit/poset.hpp"

namespace mobkit::inclexcl {

namespace {

std::vector<Bitset> bitsets_from_labels(const std::vector<std::string>& universe,
                                        const std::vector<std::vector<std::string>>& sets) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!index.emplace(universe[i], i).second) {
      throw DomainError("duplicate universe label '" + universe[i] + "'");
    }
  }
  std::vector<Bitset> out;
  for (const auto& set : sets) {
    Bitset bits(universe.size());
    for (const auto& label : set) {
      auto it = index.find(label);
      if (it == index.end()) throw DomainError("set member '" + label + "' is not in the universe");
      bits.set(it->second);
    }
    out.push_back(std::move(bits));
  }
  return out;
}

void check_sets(std::size_t universe_size, const std::vector<Bitset>& sets) {
  if (sets.size() > kMaxSets) {
    throw CapError("at most " + std::to_string(kMaxSets) + " sets supported, got " +
                   std::to_string(sets.size()));
  }
  for (const auto& s : sets) {
    if (s.size() != universe_size) throw DomainError("set is not over the given universe");
  }
}

// Calls visit(intersection, |I|) for every nonempty I, by depth-first
// extension of index sets in increasing order.
void for_each_intersection(const std::vector<Bitset>& sets, std::size_t universe_size,
                           const std::function<void(const Bitset&, std::size_t)>& visit) {
  std::function<void(std::size_t, const Bitset&, std::size_t)> rec =
      [&](std::size_t start, const Bitset& acc, std::size_t depth) {
        for (std::size_t i = start; i < sets.size(); ++i) {
          const Bitset next = acc & sets[i];
          visit(next, depth + 1);
          if (next.any()) rec(i + 1, next, depth + 1);
        }
      };
  Bitset all(universe_size);
  all.set();
  rec(0, all, 0);
}

Bitset union_of(const std::vector<Bitset>& sets, std::size_t universe_size) {
  Bitset u(universe_size);
  for (const auto& s : sets) u |= s;
  return u;
}

}  // namespace

SetFamily::SetFamily(std::vector<std::string> universe, std::vector<Bitset> sets)
    : universe_(std::move(universe)), sets_(std::move(sets)) {
  if (universe_.size() > kMaxUniverse) throw CapError("universe too large");
  check_sets(universe_.size(), sets_);
}

SetFamily SetFamily::from_labels(std::vector<std::string> universe,
                                 const std::vector<std::vector<std::string>>& sets) {
  auto bits = bitsets_from_labels(universe, sets);
  return SetFamily(std::move(universe), std::move(bits));
}

std::uint64_t union_size_ie(const SetFamily& family) {
  std::int64_t total = 0;
  for_each_intersection(family.sets(), family.universe().size(),
                        [&](const Bitset& inter, std::size_t k) {
                          const auto size = static_cast<std::int64_t>(inter.count());
                          total += k % 2 == 1 ? size : -size;
                        });
  if (total < 0) throw InternalError("inclusion-exclusion produced a negative size");
  return static_cast<std::uint64_t>(total);
}

std::uint64_t union_size_direct(const SetFamily& family) {
  return union_of(family.sets(), family.universe().size()).count();
}

bool verify_indicator_identity(const SetFamily& family) {
  const std::size_t u = family.universe().size();
  const Bitset in_union = union_of(family.sets(), u);
  std::vector<std::int64_t> rhs(u, 0);
  for_each_intersection(family.sets(), u, [&](const Bitset& inter, std::size_t k) {
    for (std::size_t x = inter.find_first(); x != Bitset::npos; x = inter.find_next(x)) {
      rhs[x] += k % 2 == 1 ? 1 : -1;
    }
  });
  for (std::size_t x = 0; x < u; ++x) {
    const int indicator = in_union[x] ? 1 : 0;
    if (rhs[x] != indicator) return false;
    if (family.sets().empty()) continue;
    int product = 1;
    for (const auto& s : family.sets()) product *= indicator - (s[x] ? 1 : 0);
    if (product != 0) return false;
  }
  return true;
}

FiniteProbSpace::FiniteProbSpace(std::vector<std::string> outcomes, std::vector<Rational> weights,
                                 std::vector<Bitset> events)
    : outcomes_(std::move(outcomes)), weights_(std::move(weights)), events_(std::move(events)) {
  if (weights_.size() != outcomes_.size()) throw DomainError("one weight per outcome required");
  Rational total = 0;
  for (auto& w : weights_) {
    w.canonicalize();
    if (w < 0) throw DomainError("negative outcome weight " + w.get_str());
    total += w;
  }
  if (total != 1) throw DomainError("outcome weights sum to " + total.get_str() + ", not 1");
  check_sets(outcomes_.size(), events_);
}

FiniteProbSpace FiniteProbSpace::from_labels(std::vector<std::string> outcomes,
                                             std::vector<Rational> weights,
                                             const std::vector<std::vector<std::string>>& events) {
  auto bits = bitsets_from_labels(outcomes, events);
  return FiniteProbSpace(std::move(outcomes), std::move(weights), std::move(bits));
}

Rational FiniteProbSpace::measure(const Bitset& event) const {
  Rational sum = 0;
  for (std::size_t x = event.find_first(); x != Bitset::npos; x = event.find_next(x)) sum += weights_[x];
  return sum;
}

Rational prob_union_ie(const FiniteProbSpace& space) {
  Rational total = 0;
  for_each_intersection(space.events(), space.outcomes().size(),
                        [&](const Bitset& inter, std::size_t k) {
                          if (k % 2 == 1) {
                            total += space.measure(inter);
                          } else {
                            total -= space.measure(inter);
                          }
                        });
  return total;
}

Rational prob_union_direct(const FiniteProbSpace& space) {
  return space.measure(union_of(space.events(), space.outcomes().size()));
}

BigInt count_derangements(unsigned n) {
  BigInt d = 1;
  for (unsigned k = 1; k <= n; ++k) {
    d *= k;
    if (k % 2 == 0) {
      d += 1;
    } else {
      d -= 1;
    }
  }
  return d;
}

std::vector<FixedPointRow> fixed_point_table(unsigned n) {
  if (n > kMaxFixedPointBase) {
    throw CapError("fixed_point_table: n = " + std::to_string(n) + " exceeds cap " +
                   std::to_string(kMaxFixedPointBase));
  }
  const auto p = poset::build_subset_poset(n, poset::SubsetOrder::kExclusion);
  poset::ElementValues g;
  std::vector<BigInt> g_by_mask(p->size());
  for (std::uint64_t mask = 0; mask < p->size(); ++mask) {
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), n - std::popcount(mask));
    g_by_mask[mask] = fact;
    g[p->label(mask)] = Rational(fact);
  }
  const auto f = poset::mobius_invert(g, p);
  std::vector<FixedPointRow> rows;
  for (std::uint64_t mask = 0; mask < p->size(); ++mask) {
    const Rational& value = f.at(p->label(mask));
    if (value.get_den() != 1) throw InternalError("fixed_point_table: non-integral count");
    rows.push_back({mask, g_by_mask[mask], value.get_num()});
  }
  return rows;
}

}  // namespace mobkit::inclexcl
