#include "mobkit/poset.hpp"

#include <queue>

namespace mobkit::poset {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

void require_same_poset(const IncidenceFunction& a, const IncidenceFunction& b) {
  if (a.poset() != b.poset() && !(*a.poset() == *b.poset())) {
    throw DomainError("incidence functions live on different posets");
  }
}

}  // namespace

PosetAxiomError::PosetAxiomError(std::string axiom, std::vector<std::string> witness)
    : DomainError(axiom + " violated at (" + join(witness) + ")"),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

Poset::Poset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (leq.size() != n) throw DomainError("relation matrix size does not match element count");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw DomainError("duplicate element label '" + labels_[i] + "'");
    }
  }
  rows_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw DomainError("relation matrix is not square");
    for (std::size_t j = 0; j < n; ++j) rows_[i][j] = leq[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows_[i][i]) throw PosetAxiomError("reflexivity", {labels_[i]});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows_[i][j] && rows_[j][i]) throw PosetAxiomError("antisymmetry", {labels_[i], labels_[j]});
    }
  }
  // a <= b implies up(b) is a subset of up(a).
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = rows_[a].find_first(); b != boost::dynamic_bitset<>::npos;
         b = rows_[a].find_next(b)) {
      if (rows_[b].is_subset_of(rows_[a])) continue;
      const auto missing = rows_[b] - rows_[a];
      const std::size_t c = missing.find_first();
      throw PosetAxiomError("transitivity", {labels_[a], labels_[b], labels_[c]});
    }
  }
  // Kahn's algorithm on the strict order, smallest input index first.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (less(i, j)) ++indegree[j];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  position_.assign(n, 0);
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    position_[i] = topo_.size();
    topo_.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (less(i, j) && --indegree[j] == 0) ready.push(j);
    }
  }
  if (topo_.size() != n) throw InternalError("topological numbering incomplete");
}

std::size_t Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw DomainError("unknown poset element '" + label + "'");
  return it->second;
}

bool Poset::covers(std::size_t i, std::size_t j) const {
  if (!less(i, j)) return false;
  for (std::size_t k = 0; k < size(); ++k) {
    if (less(i, k) && less(k, j)) return false;
  }
  return true;
}

PosetPtr validate_poset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
  return std::make_shared<const Poset>(std::move(labels), leq);
}

PosetPtr poset_from_relation(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = labels.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(labels[i], i);
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw DomainError("relation mentions unknown element '" + s + "'");
    return it->second;
  };
  std::vector<boost::dynamic_bitset<>> rows(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = true;
  for (const auto& [a, b] : pairs) rows[lookup(a)][lookup(b)] = true;
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i][k]) rows[i] |= rows[k];
    }
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = rows[i][j];
  }
  return validate_poset(std::move(labels), leq);
}

PosetPtr build_divisor_poset(const BigInt& n) {
  const auto ds = arith::divisors(n);
  std::vector<std::string> labels;
  for (const auto& d : ds) labels.push_back(d.get_str());
  std::vector<std::vector<bool>> leq(ds.size(), std::vector<bool>(ds.size()));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < ds.size(); ++j) {
      leq[i][j] = mpz_divisible_p(ds[j].get_mpz_t(), ds[i].get_mpz_t()) != 0;
    }
  }
  return validate_poset(std::move(labels), leq);
}

std::string subset_label(std::uint64_t mask) {
  std::string out = "{";
  for (unsigned bit = 0; bit < 64; ++bit) {
    if (!(mask >> bit & 1)) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(bit + 1);
  }
  return out + "}";
}

PosetPtr build_subset_poset(unsigned base_size, SubsetOrder order) {
  if (base_size > kMaxSubsetBase) {
    throw CapError("subset poset base size " + std::to_string(base_size) + " exceeds cap " +
                   std::to_string(kMaxSubsetBase));
  }
  const std::size_t n = std::size_t{1} << base_size;
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < n; ++mask) labels.push_back(subset_label(mask));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t t = 0; t < n; ++t) {
      const bool u_in_t = (u & ~t) == 0;
      leq[u][t] = order == SubsetOrder::kInclusion ? u_in_t : (t & ~u) == 0;
    }
  }
  return validate_poset(std::move(labels), leq);
}

// ------------------------------------------------------ IncidenceFunction

IncidenceFunction::IncidenceFunction(PosetPtr poset)
    : poset_(std::move(poset)), n_(poset_->size()), values_(n_ * n_) {}

IncidenceFunction::IncidenceFunction(PosetPtr poset,
                                     const std::function<Rational(std::size_t, std::size_t)>& value)
    : IncidenceFunction(std::move(poset)) {
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) set(x, y, value(x, y));
  }
}

IncidenceFunction IncidenceFunction::delta(const PosetPtr& poset) {
  IncidenceFunction f(poset);
  for (std::size_t i = 0; i < f.n_; ++i) f.cell(i, i) = 1;
  return f;
}

IncidenceFunction IncidenceFunction::zeta(const PosetPtr& poset) {
  IncidenceFunction f(poset);
  for (std::size_t x = 0; x < f.n_; ++x) {
    for (std::size_t y = 0; y < f.n_; ++y) {
      if (poset->leq(x, y)) f.cell(poset->topo_position(x), poset->topo_position(y)) = 1;
    }
  }
  return f;
}

const Rational& IncidenceFunction::at(std::size_t x, std::size_t y) const {
  const std::size_t px = poset_->topo_position(x);
  const std::size_t py = poset_->topo_position(y);
  return px <= py ? cell(px, py) : zero_rational();
}

const Rational& IncidenceFunction::at(const std::string& x, const std::string& y) const {
  return at(poset_->index_of(x), poset_->index_of(y));
}

void IncidenceFunction::set(std::size_t x, std::size_t y, Rational value) {
  if (!poset_->leq(x, y)) {
    if (value != 0) {
      throw DomainError("incidence function must vanish off the order: (" + poset_->label(x) +
                        ", " + poset_->label(y) + ")");
    }
    return;
  }
  cell(poset_->topo_position(x), poset_->topo_position(y)) = std::move(value);
}

bool IncidenceFunction::is_zero() const {
  for (const auto& v : values_) {
    if (v != 0) return false;
  }
  return true;
}

bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
  require_same_poset(a, b);
  return a.values_ == b.values_;
}

IncidenceFunction operator+(const IncidenceFunction& a, const IncidenceFunction& b) {
  require_same_poset(a, b);
  IncidenceFunction out(a.poset_);
  for (std::size_t k = 0; k < a.values_.size(); ++k) out.values_[k] = a.values_[k] + b.values_[k];
  return out;
}

IncidenceFunction operator-(const IncidenceFunction& a, const IncidenceFunction& b) {
  require_same_poset(a, b);
  IncidenceFunction out(a.poset_);
  for (std::size_t k = 0; k < a.values_.size(); ++k) out.values_[k] = a.values_[k] - b.values_[k];
  return out;
}

IncidenceFunction convolve(const IncidenceFunction& a, const IncidenceFunction& b) {
  require_same_poset(a, b);
  const std::size_t n = a.n_;
  IncidenceFunction out(a.poset_);
  Rational term;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      const Rational& left = a.cell(i, k);
      if (left == 0) continue;
      for (std::size_t j = k; j < n; ++j) {
        const Rational& right = b.cell(k, j);
        if (right == 0) continue;
        mpq_mul(term.get_mpq_t(), left.get_mpq_t(), right.get_mpq_t());
        out.cell(i, j) += term;
      }
    }
  }
  return out;
}

IncidenceFunction mobius_function(const PosetPtr& poset) {
  const std::size_t n = poset->size();
  const auto& topo = poset->topo_order();
  IncidenceFunction mu(poset);
  for (std::size_t pi = 0; pi < n; ++pi) {
    const std::size_t x = topo[pi];
    mu.set(x, x, 1);
    for (std::size_t pj = pi + 1; pj < n; ++pj) {
      const std::size_t y = topo[pj];
      if (!poset->leq(x, y)) continue;
      Rational sum = 0;
      for (std::size_t pt = pi; pt < pj; ++pt) {
        const std::size_t t = topo[pt];
        if (poset->leq(x, t) && poset->leq(t, y)) sum += mu.at(x, t);
      }
      mu.set(x, y, -sum);
    }
  }
  return mu;
}

IncidenceFunction invert_unitriangular(const IncidenceFunction& a) {
  const auto& poset = a.poset();
  for (std::size_t x = 0; x < poset->size(); ++x) {
    if (a.at(x, x) != 1) {
      throw DomainError("invert_unitriangular: diagonal entry at '" + poset->label(x) + "' is " +
                        a.at(x, x).get_str() + ", not 1");
    }
  }
  const IncidenceFunction nilpotent = a - IncidenceFunction::delta(poset);
  IncidenceFunction result = IncidenceFunction::delta(poset);
  IncidenceFunction power = IncidenceFunction::delta(poset);
  // N^{*k} vanishes once k exceeds the longest chain, so stop early.
  for (std::size_t k = 1; k < poset->size(); ++k) {
    power = convolve(power, nilpotent);
    if (power.is_zero()) break;
    result = k % 2 == 1 ? result - power : result + power;
  }
  return result;
}

ElementValues down_sum(const ElementValues& f, const PosetPtr& poset) {
  ElementValues g;
  for (std::size_t x = 0; x < poset->size(); ++x) {
    Rational sum = 0;
    for (std::size_t y = 0; y < poset->size(); ++y) {
      if (!poset->leq(y, x)) continue;
      auto it = f.find(poset->label(y));
      if (it == f.end()) throw DomainError("missing value for element '" + poset->label(y) + "'");
      sum += it->second;
    }
    g.emplace(poset->label(x), std::move(sum));
  }
  return g;
}

ElementValues mobius_invert(const ElementValues& g, const PosetPtr& poset,
                            const IncidenceFunction& mu) {
  if (mu.poset() != poset && !(*mu.poset() == *poset)) {
    throw DomainError("mobius function belongs to a different poset");
  }
  std::vector<const Rational*> values(poset->size());
  for (std::size_t y = 0; y < poset->size(); ++y) {
    auto it = g.find(poset->label(y));
    if (it == g.end()) throw DomainError("missing value for element '" + poset->label(y) + "'");
    values[y] = &it->second;
  }
  ElementValues f;
  for (std::size_t x = 0; x < poset->size(); ++x) {
    Rational sum = 0;
    for (std::size_t y = 0; y < poset->size(); ++y) {
      if (poset->leq(y, x) && mu.at(y, x) != 0) sum += *values[y] * mu.at(y, x);
    }
    f.emplace(poset->label(x), std::move(sum));
  }
  return f;
}

ElementValues mobius_invert(const ElementValues& g, const PosetPtr& poset) {
  return mobius_invert(g, poset, mobius_function(poset));
}

}  // namespace mobkit::poset
