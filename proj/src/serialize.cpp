#include "mobkit/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace mobkit::serialize {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw DomainError("malformed input: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) malformed(std::string("'") + key + "' must be an array");
  return a;
}

std::string string_of(const Json& j, const std::string& context) {
  if (!j.is_string()) malformed(context + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const std::string& context) {
  if (!j.is_array()) malformed(context + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(string_of(item, context + " entry"));
  return out;
}

std::vector<std::vector<std::string>> string_lists(const Json& j, const std::string& context) {
  if (!j.is_array()) malformed(context + " must be an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (const auto& item : j) out.push_back(string_list(item, context + " entry"));
  return out;
}

std::uint64_t small_unsigned(const Json& j, const std::string& context) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    malformed(context + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

finfield::Rep residues(const Json& j, const std::string& context) {
  if (!j.is_array()) malformed(context + " must be an array of residues");
  finfield::Rep out;
  for (const auto& r : j) {
    const auto v = small_unsigned(r, context + " entry");
    if (v > std::numeric_limits<finfield::Residue>::max()) malformed(context + " entry too large");
    out.push_back(static_cast<finfield::Residue>(v));
  }
  return out;
}

Json residues_json(const finfield::Rep& rep) {
  Json out = Json::array();
  for (auto r : rep) out.push_back(r);
  return out;
}

}  // namespace

Json to_json(const BigInt& n) { return n.get_str(); }

Json to_json(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<std::int64_t>())));
  if (j.is_number_unsigned()) return Rational(BigInt(std::to_string(j.get<std::uint64_t>())));
  if (!j.is_string()) malformed("expected an integer or a \"a/b\" string");
  const auto text = j.get<std::string>();
  Rational r;
  const auto slash = text.find('/');
  const auto number = [&](const std::string& s) {
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0) malformed("'" + text + "' is not a rational number");
    return v;
  };
  if (slash == std::string::npos) return Rational(number(text));
  const BigInt num = number(text.substr(0, slash));
  const BigInt den = number(text.substr(slash + 1));
  if (den == 0) malformed("'" + text + "' has zero denominator");
  r = Rational(num, den);
  r.canonicalize();
  return r;
}

BigInt integer_from_json(const Json& j) {
  const Rational r = rational_from_json(j);
  if (r.get_den() != 1) malformed("expected an integer, got " + r.get_str());
  return r.get_num();
}

Json to_json(const IntPolynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPolynomial int_poly_from_json(const Json& j) {
  if (!j.is_array()) malformed("polynomial must be an array of coefficients");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

Json field_to_json(const finfield::FieldSpec& f) {
  return Json{{"p", f.p()}, {"m", f.m()}, {"modulus", residues_json(f.modulus())}};
}

Json to_json(const finfield::FqPolynomial& f) {
  Json out = field_to_json(*f.field());
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(residues_json(c.rep()));
  out["coeffs"] = std::move(coeffs);
  out["text"] = f.to_string();
  return out;
}

finfield::FqPolynomial fq_poly_from_json(const Json& j) {
  const auto p = small_unsigned(field(j, "p"), "'p'");
  auto modulus = residues(field(j, "modulus"), "'modulus'");
  const auto f = finfield::make_field_with_modulus(p, std::move(modulus));
  std::vector<finfield::FqElement> coeffs;
  for (const auto& c : array_field(j, "coeffs")) {
    auto rep = residues(c, "coefficient");
    if (rep.size() != f->m()) malformed("each coefficient needs " + std::to_string(f->m()) + " residues");
    coeffs.emplace_back(f, std::move(rep));
  }
  return finfield::FqPolynomial(f, std::move(coeffs));
}

poset::PosetPtr poset_from_json(const Json& j) {
  auto labels = string_list(field(j, "elements"), "'elements'");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& pair : array_field(j, "relation")) {
    const auto items = string_list(pair, "relation pair");
    if (items.size() != 2) malformed("relation pairs must have two labels");
    pairs.emplace_back(items[0], items[1]);
  }
  return poset::poset_from_relation(std::move(labels), pairs);
}

poset::ElementValues values_from_json(const Json& j) {
  if (!j.is_object()) malformed("values must be an object mapping labels to numbers");
  poset::ElementValues out;
  for (const auto& [label, value] : j.items()) out[label] = rational_from_json(value);
  return out;
}

Json to_json(const poset::ElementValues& values, const poset::Poset& order) {
  Json out = Json::object();
  for (std::size_t idx : order.topo_order()) {
    auto it = values.find(order.label(idx));
    if (it != values.end()) out[it->first] = to_json(it->second);
  }
  return out;
}

Json to_json(const poset::IncidenceFunction& f) {
  const auto& p = *f.poset();
  Json out = Json::array();
  for (std::size_t x : p.topo_order()) {
    for (std::size_t y : p.topo_order()) {
      if (!p.leq(x, y)) continue;
      out.push_back(Json{{"x", p.label(x)}, {"y", p.label(y)}, {"value", to_json(f.at(x, y))}});
    }
  }
  return out;
}

inclexcl::SetFamily set_family_from_json(const Json& j) {
  return inclexcl::SetFamily::from_labels(string_list(field(j, "universe"), "'universe'"),
                                          string_lists(field(j, "sets"), "'sets'"));
}

inclexcl::FiniteProbSpace prob_space_from_json(const Json& j) {
  std::vector<Rational> weights;
  for (const auto& w : array_field(j, "weights")) weights.push_back(rational_from_json(w));
  return inclexcl::FiniteProbSpace::from_labels(string_list(field(j, "outcomes"), "'outcomes'"),
                                                std::move(weights),
                                                string_lists(field(j, "events"), "'events'"));
}

Json to_json(const dirichlet::TruncatedSeries& s) {
  return Json{{"re_z", s.z().real()},
              {"im_z", s.z().imag()},
              {"N", s.n_terms()},
              {"partial_re", s.partial_sum().real()},
              {"partial_im", s.partial_sum().imag()},
              {"tail_bound", s.tail_bound()},
              {"rounding_bound", s.rounding_bound()}};
}

Json to_json(const dirichlet::ZetaBoundsReport& r) {
  Json out = to_json(r.zeta);
  out["lower_bound"] = r.lower_bound;
  out["upper_bound"] = r.upper_bound;
  out["abs_lo"] = r.abs_zeta.lo;
  out["abs_hi"] = r.abs_zeta.hi;
  out["verdict"] = dirichlet::to_string(r.verdict);
  out["reciprocal"] = Json{{"partial_re", r.reciprocal.partial_sum().real()},
                           {"partial_im", r.reciprocal.partial_sum().imag()},
                           {"abs_lo", r.abs_reciprocal.lo},
                           {"abs_hi", r.abs_reciprocal.hi},
                           {"zeta_re_lo", r.zeta_of_re.lo},
                           {"zeta_re_hi", r.zeta_of_re.hi},
                           {"verdict", dirichlet::to_string(r.reciprocal_verdict)}};
  return out;
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace mobkit::serialize
