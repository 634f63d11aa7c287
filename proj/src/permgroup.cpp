#include "mobkit/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace mobkit::permgroup {

namespace {

void check_degree(unsigned degree) {
  if (degree > kMaxDegree) {
    throw CapError("permutation degree " + std::to_string(degree) + " exceeds cap " +
                   std::to_string(kMaxDegree));
  }
}

void check_same_degree(unsigned a, unsigned b) {
  if (a != b) {
    throw DomainError("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

Permutation cycle_of(unsigned degree, std::initializer_list<unsigned> points) {
  return Permutation::from_cycles(degree, {std::vector<unsigned>(points)});
}

}  // namespace

Permutation::Permutation(std::vector<unsigned> images) {
  check_degree(static_cast<unsigned>(images.size()));
  std::vector<bool> seen(images.size(), false);
  images_.reserve(images.size());
  for (unsigned image : images) {
    if (image < 1 || image > images.size()) {
      throw DomainError("image " + std::to_string(image) + " outside 1.." + std::to_string(images.size()));
    }
    if (seen[image - 1]) throw DomainError("image " + std::to_string(image) + " repeated; not a bijection");
    seen[image - 1] = true;
    images_.push_back(static_cast<std::uint8_t>(image - 1));
  }
}

Permutation Permutation::identity(unsigned degree) {
  check_degree(degree);
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
  return p;
}

Permutation Permutation::from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles) {
  Permutation result = identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    Permutation c = identity(degree);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const unsigned point = cycle[i];
      if (point < 1 || point > degree) {
        throw DomainError("cycle point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      }
      if (seen[point - 1]) throw DomainError("point " + std::to_string(point) + " repeated within a cycle");
      seen[point - 1] = true;
      c.images_[point - 1] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()] - 1);
    }
    result = c * result;
  }
  return result;
}

Permutation Permutation::parse_cycles(unsigned degree, const std::string& text) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto fail = [&](const std::string& what) {
    throw DomainError("bad cycle notation '" + text + "': " + what);
  };
  skip_space();
  if (pos == text.size()) fail("empty input; write () for the identity");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<unsigned> cycle;
    for (;;) {
      skip_space();
      if (pos == text.size()) fail("missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      unsigned long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (value > kMaxDegree) fail("point out of range");
        ++pos;
      }
      cycle.push_back(static_cast<unsigned>(value));
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

unsigned Permutation::operator()(unsigned point) const {
  if (point < 1 || point > degree()) throw DomainError("point outside 1.." + std::to_string(degree()));
  return images_[point - 1] + 1u;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

int Permutation::parity() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  check_same_degree(p.degree(), q.degree());
  Permutation out;
  out.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < q.images_.size(); ++i) out.images_[i] = p.images_[q.images_[i]];
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

PermSet::PermSet(unsigned degree, const std::vector<Permutation>& elements) : degree_(degree) {
  for (const auto& p : elements) insert(p);
}

bool PermSet::insert(const Permutation& p) {
  check_same_degree(degree_, p.degree());
  if (!members_.insert(p).second) return false;
  elements_.push_back(p);
  return true;
}

bool PermSet::same_elements(const PermSet& other) const {
  if (degree_ != other.degree_ || size() != other.size()) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const auto& p) { return other.contains(p); });
}

std::vector<Permutation> PermSet::sorted() const {
  auto out = elements_;
  std::sort(out.begin(), out.end());
  return out;
}

PermSet generate_group(const PermSet& gens) {
  if (gens.degree() > kMaxGenerateDegree) {
    throw CapError("generate_group: degree " + std::to_string(gens.degree()) + " exceeds cap " +
                   std::to_string(kMaxGenerateDegree));
  }
  const auto generators = gens.sorted();
  PermSet group(gens.degree());
  group.insert(Permutation::identity(gens.degree()));
  for (std::size_t next = 0; next < group.size(); ++next) {
    const Permutation g = group.elements()[next];
    for (const auto& s : generators) group.insert(g * s);
  }
  return group;
}

PermSet normal_closure(const PermSet& gens, const PermSet& ambient) {
  check_same_degree(gens.degree(), ambient.degree());
  if (ambient.degree() > kMaxClosureDegree) {
    throw CapError("normal_closure: degree " + std::to_string(ambient.degree()) + " exceeds cap " +
                   std::to_string(kMaxClosureDegree));
  }
  for (const auto& g : gens) {
    if (!ambient.contains(g)) {
      throw DomainError("generator " + g.to_cycle_string() + " is not in the ambient group");
    }
  }
  PermSet conjugates(gens.degree());
  for (const auto& a : ambient) {
    const Permutation a_inv = a.inverse();
    for (const auto& g : gens) conjugates.insert(a * g * a_inv);
  }
  return generate_group(conjugates);
}

PermSet commutator_subgroup(const PermSet& group) {
  std::vector<Permutation> inverses;
  inverses.reserve(group.size());
  for (const auto& g : group) inverses.push_back(g.inverse());
  PermSet commutators(group.degree());
  const auto& elems = group.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      commutators.insert(inverses[i] * inverses[j] * elems[i] * elems[j]);
    }
  }
  return generate_group(commutators);
}

std::vector<PermSet> derived_series(const PermSet& group) {
  if (group.size() > kMaxDerivedOrder) {
    throw CapError("derived_series: group order " + std::to_string(group.size()) + " exceeds cap " +
                   std::to_string(kMaxDerivedOrder));
  }
  if (group.degree() > kMaxClosureDegree) {
    throw CapError("derived_series: degree " + std::to_string(group.degree()) + " exceeds cap " +
                   std::to_string(kMaxClosureDegree));
  }
  std::vector<PermSet> series{group};
  for (;;) {
    PermSet next = commutator_subgroup(series.back());
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool derived_series_solvable(const PermSet& group) { return derived_series(group).back().size() == 1; }

PermSet symmetric_group(unsigned degree) {
  if (degree <= 1) return PermSet(degree, {Permutation::identity(degree)});
  return generate_group(transpositions(degree));
}

PermSet alternating_group(unsigned degree) {
  if (degree <= 2) return PermSet(degree, {Permutation::identity(degree)});
  return generate_group(three_cycles(degree));
}

PermSet three_cycles(unsigned degree) {
  PermSet out(degree);
  for (unsigned a = 1; a <= degree; ++a) {
    for (unsigned b = 1; b <= degree; ++b) {
      for (unsigned c = 1; c <= degree; ++c) {
        if (a != b && b != c && a != c) out.insert(cycle_of(degree, {a, b, c}));
      }
    }
  }
  return out;
}

PermSet transpositions(unsigned degree) {
  PermSet out(degree);
  for (unsigned a = 1; a <= degree; ++a) {
    for (unsigned b = a + 1; b <= degree; ++b) out.insert(cycle_of(degree, {a, b}));
  }
  return out;
}

ThreeCycleReport verify_threecycle_identities(unsigned degree, Convention convention) {
  if (degree < 4) throw DomainError("verify_threecycle_identities requires n >= 4");
  check_degree(degree);
  const auto mul = [convention](const Permutation& p, const Permutation& q) {
    return convention == Convention::kRightFirst ? p * q : q * p;
  };
  const auto record = [](IdentityCheck& check, const Permutation& lhs, const Permutation& rhs,
                         std::vector<unsigned> tuple) {
    ++check.tuples_checked;
    if (lhs == rhs || !check.holds) {
      if (lhs != rhs) check.holds = false;
      return;
    }
    check.holds = false;
    check.counterexample = std::move(tuple);
    check.counterexample_value = rhs.to_cycle_string();
  };

  ThreeCycleReport report;
  report.degree = degree;
  report.convention = convention;
  report.three_cycle.identity = "(a b c) = (b c)(a c)";
  report.double_transposition.identity = "(a b)(c d) = (a c d)(a c b)";
  report.double_transposition_swapped.identity = "(a b)(c d) = (a c b)(a c d)";
  const unsigned n = degree;
  for (unsigned a = 1; a <= n; ++a) {
    for (unsigned b = 1; b <= n; ++b) {
      if (b == a) continue;
      for (unsigned c = 1; c <= n; ++c) {
        if (c == a || c == b) continue;
        record(report.three_cycle, cycle_of(n, {a, b, c}), mul(cycle_of(n, {b, c}), cycle_of(n, {a, c})),
               {a, b, c});
        for (unsigned d = 1; d <= n; ++d) {
          if (d == a || d == b || d == c) continue;
          const Permutation lhs = mul(cycle_of(n, {a, b}), cycle_of(n, {c, d}));
          const Permutation acd = cycle_of(n, {a, c, d});
          const Permutation acb = cycle_of(n, {a, c, b});
          record(report.double_transposition, lhs, mul(acd, acb), {a, b, c, d});
          record(report.double_transposition_swapped, lhs, mul(acb, acd), {a, b, c, d});
        }
      }
    }
  }
  return report;
}

}  // namespace mobkit::permgroup
